from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations, product
from typing import TYPE_CHECKING, NamedTuple

from . import linalg
from .cartan import is_finite_type
from .coxeter import orbit_enumerate
from .exceptions import FiniteTypeRequiredError, TooLargeError
from .faces import Face, face_sort_key, format_subset

if TYPE_CHECKING:  # pragma: no cover
    from typing import Iterable, Sequence, Union

    from .faces import DominantPoint

    Number = Union[int, Fraction]
    Point = tuple[Number, ...]


class GeomFace(NamedTuple):
    """A face of a polytope given by its vertices.

    `functional` is a linear functional (in the projected coordinates) whose
    maximum over the polytope is attained exactly on this face; it is None for
    the empty face.  `basis` spans the directions of the affine hull.
    """

    vertices: frozenset[Point]
    dim: int
    basis: tuple[tuple[Fraction, ...], ...]
    functional: tuple[Fraction, ...] | None


class OracleReport(NamedTuple):
    faces: int
    geometric_faces: int
    mismatches: list[str]
    checked: int

    @property
    def passed(self) -> bool:
        return not self.mismatches


def _vertex_key(face: GeomFace) -> tuple[int, list[Point]]:
    return (face.dim, sorted(face.vertices))


class GeometricLattice:
    """The face lattice of the convex hull of finitely many rational points,
    computed from the points alone.

    The points are projected onto coordinates of their affine hull; facets are
    found by scanning all subsets of affinely spanning size and keeping the
    hyperplanes with every point weakly on one side.  Faces are then the
    intersections of facets, plus the polytope itself and the empty face.

    Args:
        points: The points; duplicates are ignored.
        max_points: Refuse inputs with more distinct points than this.
        max_dim: Refuse inputs whose affine hull has larger dimension.

    Raises:
        TooLargeError: If one of the limits is exceeded.
    """

    def __init__(self, points: Iterable[Sequence[Number]], max_points: int = 200, max_dim: int = 4) -> None:
        self.logger = logging.getLogger(__name__)
        self.points: list[Point] = sorted({tuple(Fraction(x) for x in p) for p in points})
        if len(self.points) > max_points:
            msg = "%d points is more than the limit of %d" % (len(self.points), max_points)
            self.logger.warning(msg)
            raise TooLargeError(msg)
        self.dim = linalg.affine_rank(self.points)
        if self.dim > max_dim:
            msg = "Affine dimension %d is more than the limit of %d" % (self.dim, max_dim)
            self.logger.warning(msg)
            raise TooLargeError(msg)
        self._projected = self._project()
        self.faces = self._build()
        self._by_vertices = {face.vertices: face for face in self.faces}

    def _project(self) -> list[tuple[Fraction, ...]]:
        if self.dim <= 0:
            return [() for _ in self.points]
        base = self.points[0]
        differences = [[x - b for x, b in zip(p, base)] for p in self.points[1:]]
        pivots = linalg.pivot_columns(differences)
        return [tuple(p[c] for c in pivots) for p in self.points]

    def _facets(self) -> dict[frozenset[int], tuple[Fraction, ...]]:
        facets: dict[frozenset[int], tuple[Fraction, ...]] = {}
        projected = self._projected
        for subset in combinations(range(len(projected)), self.dim):
            origin = projected[subset[0]]
            rows = [[x - o for x, o in zip(projected[j], origin)] for j in subset[1:]]
            kernel = linalg.kernel_basis(rows, self.dim)
            if len(kernel) != 1:
                continue
            normal = tuple(Fraction(x) for x in kernel[0])
            values = [sum((a * x for a, x in zip(normal, p)), Fraction(0)) for p in projected]
            level = values[subset[0]]
            if all(v <= level for v in values):
                functional = normal
            elif all(v >= level for v in values):
                functional = tuple(-x for x in normal)
            else:
                continue
            support = frozenset(i for i, v in enumerate(values) if v == level)
            facets.setdefault(support, functional)
        self.logger.debug("Found %d facets among %d points", len(facets), len(projected))
        return facets

    def _build(self) -> list[GeomFace]:
        everything = frozenset(range(len(self.points)))
        zero = tuple(Fraction(0) for _ in range(max(self.dim, 0)))
        functionals: dict[frozenset[int], tuple[Fraction, ...] | None] = {frozenset(): None}
        if self.points:
            functionals[everything] = zero
        if self.dim > 0:
            facets = self._facets()
            functionals.update(facets)
            frontier = list(facets)
            while frontier:
                found = []
                for first, second in product(frontier, facets):
                    common = first & second
                    if common and common not in functionals:
                        total = functionals[first]
                        assert total is not None
                        functionals[common] = tuple(a + b for a, b in zip(total, facets[second]))
                        found.append(common)
                frontier = found

        faces = [self._make_face(indices, functional) for indices, functional in functionals.items()]
        faces.sort(key=_vertex_key)
        self.logger.info("Geometric lattice: %d faces in dimension %d", len(faces), self.dim)
        return faces

    def _make_face(self, indices: frozenset[int], functional: tuple[Fraction, ...] | None) -> GeomFace:
        vertices = [self.points[i] for i in sorted(indices)]
        if not vertices:
            return GeomFace(frozenset(), -1, (), functional)
        base = vertices[0]
        differences = [[x - b for x, b in zip(p, base)] for p in vertices[1:]]
        basis = linalg.row_basis(differences)
        return GeomFace(frozenset(vertices), len(basis), basis, functional)

    # Lattice operations.

    def face(self, vertices: Iterable[Point]) -> GeomFace | None:
        return self._by_vertices.get(frozenset(vertices))

    def leq(self, first: GeomFace, second: GeomFace) -> bool:
        return first.vertices <= second.vertices

    def meet(self, first: GeomFace, second: GeomFace) -> GeomFace:
        face = self._by_vertices.get(first.vertices & second.vertices)
        assert face is not None, "faces are closed under intersection"
        return face

    def join(self, first: GeomFace, second: GeomFace) -> GeomFace:
        union = first.vertices | second.vertices
        return min((f for f in self.faces if union <= f.vertices), key=lambda f: len(f.vertices))

    @property
    def counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for face in self.faces:
            counts[face.dim] = counts.get(face.dim, 0) + 1
        return dict(sorted(counts.items()))

    def check_witnesses(self) -> list[GeomFace]:
        """Faces whose stored functional is not maximized exactly on their vertices."""
        bad = []
        for face in self.faces:
            if face.functional is None:
                continue
            values = [sum((a * x for a, x in zip(face.functional, p)), Fraction(0)) for p in self._projected]
            top = max(values)
            argmax = frozenset(self.points[i] for i, v in enumerate(values) if v == top)
            if argmax != face.vertices:
                bad.append(face)
        return bad

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(points={len(self.points)}, dim={self.dim}, faces={len(self.faces)})"


def geometric_face_lattice(
    points: Iterable[Sequence[Number]], max_points: int = 200, max_dim: int = 4
) -> GeometricLattice:
    return GeometricLattice(points, max_points, max_dim)


def slice_suggestions(point: DominantPoint) -> tuple[tuple[int, ...], ...]:
    """Nonempty mu-connected subsets of finite type, largest first."""
    gcm = point.gcm
    found = []
    for size in range(gcm.size, 0, -1):
        for subset in combinations(sorted(gcm.index_set), size):
            if point.is_mu_connected(subset) and is_finite_type(gcm, subset):
                found.append(subset)
    return tuple(found)


def compare_lattices(
    point: DominantPoint, subset: Iterable[int] | None = None, max_points: int = 200, max_dim: int = 4
) -> OracleReport:
    """Certifies the face calculus against the geometric lattice of conv(W_I mu).

    Without a subset the whole hull is compared, which needs W (restricted to the
    mu-connected part of Pi) to be finite.  With a subset I, the faces below F_I
    are compared with the hull of W_I mu.

    Raises:
        FiniteTypeRequiredError: If W_I is infinite; the error carries the finite
            type slices that could be used instead.
        TooLargeError: If the orbit is too large for the geometric side.
    """
    logger = logging.getLogger(__name__)
    group = point.group
    top = point.mu_connected_part(point.gcm.index_set if subset is None else subset)
    if not is_finite_type(point.gcm, top):
        error = FiniteTypeRequiredError(
            "The faces below %s need an infinite Weyl group; try a finite type slice" % format_subset(top)
        )
        error.suggestions = slice_suggestions(point)
        logger.warning(str(error))
        raise error

    orbit = orbit_enumerate(group, point.mu, top, cap=max_points + 1)
    if not orbit.complete or len(orbit.points) > max_points:
        msg = "The orbit has more than %d points" % max_points
        logger.warning(msg)
        raise TooLargeError(msg)
    lattice = GeometricLattice([p.weight for p in orbit.points], max_points, max_dim)

    faces = _faces_below(point, top)
    vertex_sets = {face: frozenset(_normalize(point.orbit_of_face(face)[0])) for face in faces}
    mismatches: list[str] = []
    checked = 0

    if len(set(vertex_sets.values())) != len(faces):
        mismatches.append("two faces have the same vertex set")
    geometric = {f.vertices for f in lattice.faces}
    if set(vertex_sets.values()) != geometric:
        mismatches.append(
            "%d combinatorial faces against %d geometric faces" % (len(faces), len(lattice.faces))
        )

    for face in faces:
        checked += 1
        found = lattice.face(vertex_sets[face])
        if found is None:
            mismatches.append("%s is not a geometric face" % face.label())
        elif found.dim != face.dimension:
            mismatches.append("%s has dimension %d, expected %d" % (face.label(), found.dim, face.dimension))
        mismatches.extend(_stabilizer_problems(point, face, vertex_sets[face]))

    for first, second in product(faces, repeat=2):
        checked += 1
        v1 = vertex_sets[first]
        v2 = vertex_sets[second]
        if point.face_leq(first, second) != (v1 <= v2):
            mismatches.append("inclusion of %s in %s" % (first.label(), second.label()))
        g1 = lattice.face(v1)
        g2 = lattice.face(v2)
        if g1 is None or g2 is None:
            continue
        if vertex_sets.get(point.face_meet(first, second)) != lattice.meet(g1, g2).vertices:
            mismatches.append("meet of %s and %s" % (first.label(), second.label()))
        if vertex_sets.get(point.face_join(first, second)) != lattice.join(g1, g2).vertices:
            mismatches.append("join of %s and %s" % (first.label(), second.label()))

    if lattice.check_witnesses():
        mismatches.append("%d faces have a bad supporting functional" % len(lattice.check_witnesses()))
    if lattice.dim == 2:
        counts = lattice.counts
        if counts.get(0, 0) != counts.get(1, 0):
            mismatches.append("polygon with %d vertices and %d edges" % (counts.get(0, 0), counts.get(1, 0)))

    report = OracleReport(len(faces), len(lattice.faces), mismatches, checked)
    logger.info("Oracle on %s: %d faces, passed = %s", format_subset(top), len(faces), report.passed)
    return report


def _normalize(points: Iterable[Sequence[Number]]) -> list[Point]:
    return [tuple(Fraction(x) for x in p) for p in points]


def _faces_below(point: DominantPoint, top: frozenset[int]) -> list[Face]:
    # Every face of F_top is w F_K with w in W_top and K a mu-connected subset of top.
    group = point.group
    elements = [w for layer in group.elements_by_length(10**6, top) for w in layer]
    bases = [f for f in point.fundamental_faces().faces[1:] if f.subset <= top]
    faces = {point.canonicalize_face(w, base.subset) for w in elements for base in bases}
    return [point.empty_face] + sorted(faces, key=face_sort_key)


def _stabilizer_problems(point: DominantPoint, face: Face, vertices: frozenset[Point]) -> list[str]:
    # sigma r_s sigma^{-1} must fix every vertex for s in lambda_*, and permute them for s in lambda.
    if face.empty:
        return []
    group = point.group
    problems = []
    sigma_inverse = group.inverse(face.sigma)
    for s in sorted(face.base.isotropy):
        conjugate = group.multiply(face.sigma, group.generator(s), sigma_inverse)
        images = frozenset(_normalize(group.act_on_weight(conjugate, v) for v in vertices))
        if images != vertices:
            problems.append("%s does not stabilize %s" % (s, face.label()))
        elif s in face.base.lower and any(group.act_on_weight(conjugate, v) != v for v in vertices):
            problems.append("%s does not fix %s pointwise" % (s, face.label()))
    return problems
