from __future__ import annotations

import json
import unittest
from fractions import Fraction

from python_renner.exceptions import (
    CartanMatrixError,
    CompletionError,
    DominanceViolatedError,
    ElementParseError,
    ProblemParseError,
    RealizationError,
)
from python_renner.export import (
    covers,
    dumps,
    element_to_json,
    face_to_json,
    faces_to_dot,
    lattice_to_json,
    lattice_to_text,
    number_to_json,
    parse_elements,
    point_to_json,
    table_to_json,
)
from python_renner.faces import format_subset
from python_renner.problem import ProblemSpec, create_problem, load_problem, parse_problem

from .compat import problem_path

A2 = """{
  "cartan": [[2, -1], [-1, 2]],
  "mu": [3, 2]
}"""


class TestParseProblem(unittest.TestCase):
    def test_parse(self) -> None:
        problem = parse_problem(A2)
        self.assertEqual(problem.mu, (3, 2))
        self.assertEqual(problem.gcm.size, 2)
        self.assertIsNone(problem.name)
        self.assertIs(problem.point, problem.point)
        self.assertIs(problem.monoid.point, problem.point)

    def test_load(self) -> None:
        problem = load_problem(problem_path("a2"))
        self.assertEqual(problem.name, "A2 regular")

    def test_config(self) -> None:
        problem = parse_problem(A2, {"FACE_BOUND": 7})
        self.assertEqual(problem.config["FACE_BOUND"], 7)
        self.assertEqual(problem.config["UNIT_BOUND"], ProblemSpec.DEFAULT_CONFIG["UNIT_BOUND"])
        self.assertEqual(ProblemSpec.DEFAULT_CONFIG["FACE_BOUND"], 4)
        self.assertEqual(parse_problem(A2, {"WEIGHT_DEPTH": 3}).weights().depth, 3)

    def test_rational_mu(self) -> None:
        problem = create_problem({"cartan": [[2, -1], [-1, 2]], "mu": ["1/2", "4/2"]})
        self.assertEqual(problem.mu, (Fraction(1, 2), 2))
        self.assertIsInstance(problem.mu[1], int)

    def test_not_dominant_is_lazy(self) -> None:
        problem = create_problem({"cartan": [[2, -1], [-1, 2]], "mu": [1, -1]})
        with self.assertRaises(DominanceViolatedError):
            problem.point

    def test_bad_json(self) -> None:
        with self.assertRaises(ProblemParseError) as cm:
            parse_problem('{\n  "cartan": [[2, -1]')
        self.assertEqual(cm.exception.line, 2)
        self.assertGreater(cm.exception.column, 0)

    def test_unknown_key(self) -> None:
        text = '{\n  "cartan": [[2, -1], [-1, 2]],\n  "mu": [1, 0],\n  "extra": 1\n}'
        with self.assertRaises(ProblemParseError) as cm:
            parse_problem(text)
        self.assertEqual((cm.exception.line, cm.exception.column), (4, 3))
        self.assertIn("extra", str(cm.exception))

    def test_missing_key(self) -> None:
        with self.assertRaises(ProblemParseError):
            parse_problem('{"cartan": [[2]]}')
        with self.assertRaises(ProblemParseError):
            parse_problem("[1, 2]")

    def test_bad_values(self) -> None:
        for document in [
            {"cartan": [[2, -1], [-1, 2]], "mu": [1, True]},
            {"cartan": [[2, -1], [-1, 2]], "mu": [1, 1.5]},
            {"cartan": [[2, -1], [-1, 2]], "mu": ["1/0", 0]},
            {"cartan": [[2, -1], [-1, 2]], "mu": 1},
            {"cartan": [[2, "x"], [-1, 2]], "mu": [1, 0]},
            {"cartan": [2, -1], "mu": [1, 0]},
            {"cartan": [[2, -1], [-1, 2]], "mu": [1, 0], "completion": 5},
        ]:
            with self.assertRaises(ProblemParseError, msg=repr(document)):
                create_problem(document)

    def test_engine_errors_are_located(self) -> None:
        text = '{\n  "cartan": [[3, -1], [-1, 2]],\n  "mu": [1, 0]\n}'
        with self.assertRaises(CartanMatrixError) as cm:
            parse_problem(text)
        self.assertTrue(str(cm.exception).startswith("line 2, column 3: "))

        text = '{\n  "cartan": [[2, -1], [-1, 2]],\n  "mu": [1]\n}'
        with self.assertRaises(RealizationError) as cm2:
            parse_problem(text)
        self.assertTrue(str(cm2.exception).startswith("line 3, column 3: "))

        text = '{\n  "cartan": [[2, -2], [-2, 2]],\n  "mu": [1, 0, 0],\n  "completion": [[1, -1]]\n}'
        with self.assertRaises(CompletionError) as cm3:
            parse_problem(text)
        self.assertTrue(str(cm3.exception).startswith("line 4, column 3: "))


class TestElements(unittest.TestCase):
    def setUp(self) -> None:
        self.monoid = parse_problem(A2).monoid

    def test_parse(self) -> None:
        x, zero = parse_elements('{"unit": [1], "sigma": [], "I": [1]}; {"I": null}', self.monoid)
        self.assertEqual(element_to_json(x), {"unit": [1], "sigma": [], "I": [1]})
        self.assertEqual(zero, self.monoid.zero)
        self.assertEqual(element_to_json(zero)["I"], None)

    def test_face_is_canonicalized(self) -> None:
        (x,) = parse_elements('{"sigma": [1], "I": [1]}', self.monoid)
        edge = self.monoid.point.canonicalize_face(self.monoid.group.identity, [1])
        self.assertEqual(x, self.monoid.idempotent(edge))

    def test_errors(self) -> None:
        with self.assertRaises(ElementParseError) as cm:
            parse_elements('{"I": [1]};{"unit": [4], "I": [1]}', self.monoid)
        self.assertEqual(cm.exception.column, 12)
        for text in ['{"I": [1]};{"I": ', "[1]", '{"unit": []}', '{"I": [1], "w": []}', '{"I": "1"}']:
            with self.assertRaises(ElementParseError, msg=text):
                parse_elements(text, self.monoid)


class TestExport(unittest.TestCase):
    def setUp(self) -> None:
        self.point = parse_problem('{"cartan": [[2, -1], [-1, 2]], "mu": [1, 0]}').point

    def test_numbers(self) -> None:
        self.assertEqual(number_to_json(Fraction(1, 2)), "1/2")
        self.assertEqual(number_to_json(Fraction(4, 2)), 2)
        self.assertEqual(point_to_json((Fraction(-1, 3), 0)), ["-1/3", 0])

    def test_face_to_json(self) -> None:
        self.assertEqual(face_to_json(self.point.hull), {"sigma": [], "I": [1, 2], "dim": 2})
        self.assertEqual(face_to_json(self.point.empty_face)["I"], None)

    def test_covers(self) -> None:
        self.assertEqual(covers([1, 2, 3], lambda a, b: a <= b), [(0, 1), (1, 2)])
        self.assertEqual(covers([1, 2, 4], lambda a, b: b % a == 0), [(0, 1), (1, 2)])

    def test_faces_to_dot(self) -> None:
        faces = self.point.enumerate_faces(3).faces
        dot = faces_to_dot(self.point, faces)
        self.assertTrue(dot.startswith("digraph faces {"))
        self.assertEqual(dot.count("->"), 12)

    def test_lattice(self) -> None:
        entries = parse_problem(A2).monoid.cross_section_lattice()
        text = lattice_to_text(entries)
        lines = text.splitlines()
        self.assertEqual(lines[0].split(), ["entry", "lambda", "lambda^*", "lambda_*"])
        self.assertEqual([line.split()[0] for line in lines[1:]], ["0", "e{}", "e{1}", "e{2}", "e{1,2}"])
        self.assertEqual(lines[-1].split()[1:], [format_subset([1, 2]), "{1,2}", "{}"])
        encoded = lattice_to_json(entries)
        self.assertEqual(encoded[0]["I"], None)
        self.assertEqual(encoded[-1]["I"], [1, 2])
        self.assertEqual(encoded[-1]["lambda"], [1, 2])

    def test_table(self) -> None:
        monoid = parse_problem(A2).monoid
        encoded = table_to_json([monoid.one, monoid.zero], [[0, 1], [1, 1]])
        self.assertEqual(len(encoded["elements"]), 2)
        self.assertEqual(json.loads(dumps(encoded))["table"], [[0, 1], [1, 1]])
        self.assertTrue(dumps({}).endswith("\n"))
