from __future__ import annotations

import unittest
from typing import TYPE_CHECKING

from python_renner.cartan import complete_realization, validate_gcm
from python_renner.exceptions import DominanceViolatedError, NotInChamberHullError, NotMuConnectedError
from python_renner.faces import DominantPoint, Face
from python_renner.problem import parse_problem

from .compat import load_problem_cases, parametrize, parametrize_class

if TYPE_CHECKING:
    from .compat import ProblemCase

problem_cases = load_problem_cases()


def make_point(entries: list[list[int]], mu: tuple[int, ...]) -> DominantPoint:
    return DominantPoint(complete_realization(validate_gcm(entries)), mu)


@parametrize_class
class TestProblemFaces(unittest.TestCase):
    @parametrize("case", [c for c in problem_cases if "faces" in c["expected"]])
    def test_enumerate_faces(self, case: ProblemCase) -> None:
        expected = case["expected"]["faces"]
        point = parse_problem(case["document"]).point
        enumeration = point.enumerate_faces(expected["bound"])
        self.assertEqual(len(enumeration.faces), expected["count"])
        self.assertEqual(enumeration.complete, expected["complete"])
        self.assertEqual(enumeration.counts, expected["counts"])
        self.assertEqual(len(set(enumeration.faces)), len(enumeration.faces))

    @parametrize("case", problem_cases)
    def test_fundamental_lattice(self, case: ProblemCase) -> None:
        point = parse_problem(case["document"]).point
        self.assertEqual(len(point.fundamental_faces()), case["expected"]["lattice"])

    @parametrize("case", problem_cases)
    def test_edges_at_mu(self, case: ProblemCase) -> None:
        point = parse_problem(case["document"]).point
        report = point.edges_at_mu()
        self.assertEqual(report.complete, case["expected"]["edges_complete"])
        self.assertEqual(report.finite, case["expected"]["hull_chamber_closed"])
        self.assertEqual(point.hull_chamber_closed(), case["expected"]["hull_chamber_closed"])
        if "edges" in case["expected"]:
            self.assertEqual([list(r) for r in report.roots], case["expected"]["edges"])


class TestDominantPoint(unittest.TestCase):
    def setUp(self) -> None:
        self.vertex = make_point([[2, -1], [-1, 2]], (1, 0))

    def test_not_dominant(self) -> None:
        with self.assertRaises(DominanceViolatedError):
            make_point([[2, -1], [-1, 2]], (1, -1))

    def test_point_type(self) -> None:
        self.assertEqual(self.vertex.j_zero, frozenset({2}))
        self.assertEqual(self.vertex.j_positive, frozenset({1}))

    def test_mu_connected(self) -> None:
        self.assertTrue(self.vertex.is_mu_connected([]))
        self.assertTrue(self.vertex.is_mu_connected([1]))
        self.assertFalse(self.vertex.is_mu_connected([2]))
        self.assertEqual(self.vertex.mu_connected_part([2]), frozenset())

        point = make_point([[2, -1, 0], [-1, 2, -2], [0, -2, 2]], (1, 0, 0))
        self.assertEqual(point.mu_connected_part([1, 3]), frozenset({1}))
        self.assertEqual(point.mu_connected_part([2, 3]), frozenset())

    def test_i_star(self) -> None:
        self.assertEqual(self.vertex.i_star([]), frozenset({2}))
        self.assertEqual(self.vertex.i_star([1]), frozenset())
        with self.assertRaises(NotMuConnectedError):
            self.vertex.i_star([2])

    def test_fundamental_faces(self) -> None:
        lattice = self.vertex.fundamental_faces()
        self.assertEqual([f.label() for f in lattice.faces], ["empty", "{}", "{1}", "{1,2}"])
        empty, vertex, edge, hull = lattice.faces
        self.assertEqual(vertex.isotropy, frozenset({2}))
        self.assertEqual(edge.isotropy, frozenset({1}))
        self.assertEqual(lattice.meet(edge, hull), edge)
        self.assertEqual(lattice.meet(edge, empty), empty)
        self.assertEqual(lattice.join(empty, edge), edge)
        self.assertTrue(lattice.leq(vertex, hull))
        self.assertFalse(lattice.leq(hull, edge))

    def test_fundamental_meet_drops_unconnected_part(self) -> None:
        point = make_point([[2, -1, 0], [-1, 2, -1], [0, -1, 2]], (1, 0, 1))
        lattice = point.fundamental_faces()
        left = point.fundamental_face([1, 2])
        right = point.fundamental_face([2, 3])
        self.assertEqual(lattice.meet(left, right), point.fundamental_face([]))
        self.assertEqual(lattice.join(left, right), point.fundamental_face([1, 2, 3]))

    def test_completion_invariance(self) -> None:
        gcm = validate_gcm([[2, -2], [-2, 2]])
        counts = [
            DominantPoint(complete_realization(gcm, completion), (1, 0, 0)).enumerate_faces(4).counts
            for completion in (None, [[1, 0]], [[3, 1]])
        ]
        self.assertEqual(counts, [counts[0]] * 3)
        self.assertEqual(counts[0], {-1: 1, 0: 5, 1: 5, 2: 1})

    def test_special_faces(self) -> None:
        self.assertTrue(self.vertex.empty_face.empty)
        self.assertEqual(self.vertex.empty_face.dimension, -1)
        self.assertEqual(self.vertex.vertex.dimension, 0)
        self.assertEqual(self.vertex.hull.subset, frozenset({1, 2}))


class TestFaceCalculus(unittest.TestCase):
    def setUp(self) -> None:
        self.point = make_point([[2, -1], [-1, 2]], (3, 2))
        self.group = self.point.group

    def face(self, word: list[int], subset: list[int]) -> Face:
        return self.point.canonicalize_face(self.group.element(word), subset)

    def test_canonical_form(self) -> None:
        self.assertEqual(self.face([1], [1]), self.face([], [1]))
        self.assertEqual(self.face([2, 1], [1]).label(), "2|{1}")
        self.assertEqual(self.face([1, 2, 1], [1, 2]).label(), "e|{1,2}")

    def test_act_face(self) -> None:
        edge = self.face([], [1])
        self.assertEqual(self.point.act_face(self.group.element([1]), edge), edge)
        self.assertEqual(self.point.act_face(self.group.element([2]), edge).label(), "2|{1}")
        empty = self.point.empty_face
        self.assertEqual(self.point.act_face(self.group.element([2]), empty), empty)

    def test_leq(self) -> None:
        vertex = self.face([], [])
        self.assertTrue(self.point.face_leq(vertex, self.face([], [1])))
        self.assertTrue(self.point.face_leq(vertex, self.face([], [2])))
        self.assertFalse(self.point.face_leq(vertex, self.face([2], [1])))
        self.assertTrue(self.point.face_leq(self.face([1], []), self.face([], [1])))
        self.assertTrue(self.point.face_leq(self.point.empty_face, vertex))
        self.assertFalse(self.point.face_leq(vertex, self.point.empty_face))

    def test_meet(self) -> None:
        self.assertEqual(self.point.face_meet(self.face([], [1]), self.face([], [2])), self.face([], []))
        self.assertTrue(self.point.face_meet(self.face([], [1]), self.face([2], [1])).empty)
        self.assertEqual(self.point.face_meet(self.face([2], [1]), self.point.hull), self.face([2], [1]))

    def test_join(self) -> None:
        self.assertEqual(self.point.face_join(self.face([], []), self.face([1], [])), self.face([], [1]))
        self.assertEqual(self.point.face_join(self.face([], []), self.face([1, 2, 1], [])), self.point.hull)
        self.assertEqual(self.point.face_join(self.point.empty_face, self.face([2], [])), self.face([2], []))

    def test_types(self) -> None:
        point = make_point([[2, -1], [-1, 2]], (1, 0))
        vertex = point.canonicalize_face(point.group.identity, [])
        edge = point.canonicalize_face(point.group.identity, [1])
        self.assertEqual(point.isotropy_type(vertex).subset, frozenset({2}))
        self.assertEqual(point.stabilizer_type(vertex).subset, frozenset({2}))
        self.assertEqual(point.isotropy_type(edge).subset, frozenset({1}))
        self.assertEqual(point.stabilizer_type(edge).subset, frozenset())
        self.assertEqual(point.dimension(edge), 1)

    def test_orbit_of_face(self) -> None:
        points, complete = self.point.orbit_of_face(self.face([2], [1]))
        self.assertTrue(complete)
        self.assertEqual(points, [(2, -5), (5, -2)])
        self.assertEqual(self.point.orbit_of_face(self.point.empty_face), ([], True))


@parametrize_class
class TestStratify(unittest.TestCase):
    def setUp(self) -> None:
        self.point = make_point([[2, -1], [-1, 2]], (3, 2))

    @parametrize(
        "eta,subset",
        [((3, 2), []), ((1, 3), [1]), ((4, 0), [2]), ((0, 0), [1, 2])],
    )
    def test_in_hull(self, eta: tuple[int, int], subset: list[int]) -> None:
        self.assertEqual(self.point.stratify_point(eta).subset, frozenset(subset))

    def test_coefficients(self) -> None:
        self.assertEqual(self.point.stratify_point((1, 3)).coefficients, (1, 0))

    def test_outside(self) -> None:
        with self.assertRaises(NotInChamberHullError):
            self.point.stratify_point((5, 0))
        with self.assertRaises(DominanceViolatedError):
            self.point.stratify_point((-1, 0))

    def test_support_not_mu_connected(self) -> None:
        point = make_point([[2, -1, 0], [-1, 2, -2], [0, -2, 2]], (1, 0, 0))
        eta = tuple(m - a - b for m, a, b in zip(point.mu, *point.realization.root_coords[1:]))
        with self.assertRaises(NotInChamberHullError):
            point.stratify_point(eta)
