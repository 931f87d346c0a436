from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, NamedTuple

from . import linalg
from .cartan import are_separated, dynkin_components, is_finite_type, point_type
from .coxeter import Side, WeylElement, WeylGroup, orbit_enumerate, root_height
from .exceptions import DominanceViolatedError, NotInChamberHullError, NotMuConnectedError

if TYPE_CHECKING:  # pragma: no cover
    from typing import Iterable, Sequence, Union

    from .cartan import Realization

    Number = Union[int, Fraction]
    WeightVector = tuple[Number, ...]
    RootVector = tuple[int, ...]


def format_subset(subset: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(subset)) + "}"


class FundamentalFace(NamedTuple):
    """The fundamental face F_I = conv(W_I mu) for a mu-connected I, or the empty face.

    `subset` is I (the moving part, lambda^*), `lower` is I_* (the pointwise
    stabilizer type, lambda_*).  The empty face has I = {} and lambda_* = Pi.
    """

    subset: frozenset[int]
    lower: frozenset[int]
    empty: bool = False

    @property
    def upper(self) -> frozenset[int]:
        return self.subset

    @property
    def isotropy(self) -> frozenset[int]:
        """lambda = lambda_* | lambda^*, the type of the setwise stabilizer."""
        return self.subset | self.lower

    @property
    def dimension(self) -> int:
        return -1 if self.empty else len(self.subset)

    def label(self) -> str:
        return "empty" if self.empty else format_subset(self.subset)


class Face(NamedTuple):
    """The face sigma * F_I of the orbit hull.

    `sigma` is the shortest element of sigma W_lambda, with lambda the isotropy
    type of the base, so the pair (sigma, base) is a canonical key.
    """

    sigma: WeylElement
    base: FundamentalFace

    @property
    def empty(self) -> bool:
        return self.base.empty

    @property
    def subset(self) -> frozenset[int]:
        return self.base.subset

    @property
    def dimension(self) -> int:
        return self.base.dimension

    def label(self) -> str:
        if self.empty:
            return "empty"
        return "%s|%s" % (str(self.sigma) or "e", format_subset(self.subset))


def face_sort_key(face: Face) -> tuple[int, int, tuple[int, ...], tuple[int, ...]]:
    """Orders faces by dimension, then sigma in ShortLex order, then I."""
    return (face.dimension, face.sigma.length, face.sigma.word, tuple(sorted(face.subset)))


class ParabolicType(NamedTuple):
    """The conjugated standard parabolic subgroup sigma W_J sigma^{-1}."""

    sigma: WeylElement
    subset: frozenset[int]


class Stratum(NamedTuple):
    """Solution of eta = mu - sum c_j alpha_j; `subset` is the support of c."""

    subset: frozenset[int]
    coefficients: tuple[Fraction, ...]


class FaceEnumeration(NamedTuple):
    faces: list[Face]
    complete: bool

    @property
    def counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for face in self.faces:
            counts[face.dimension] = counts.get(face.dimension, 0) + 1
        return dict(sorted(counts.items()))


class EdgeReport(NamedTuple):
    """Edges of the hull at mu are mu r_gamma(mu) for the listed roots gamma."""

    finite: bool
    roots: list[RootVector]
    complete: bool


class FundamentalLattice:
    """The lattice of fundamental faces, ordered by inclusion of I."""

    def __init__(self, point: DominantPoint) -> None:
        self.point = point
        subsets = []
        for size in range(point.gcm.size + 1):
            for subset in combinations(sorted(point.gcm.index_set), size):
                if point.is_mu_connected(subset):
                    subsets.append(frozenset(subset))
        self.faces = [point.empty_face.base] + [point.fundamental_face(s) for s in subsets]

    def leq(self, first: FundamentalFace, second: FundamentalFace) -> bool:
        if first.empty:
            return True
        if second.empty:
            return False
        return first.subset <= second.subset

    def meet(self, first: FundamentalFace, second: FundamentalFace) -> FundamentalFace:
        if first.empty or second.empty:
            return self.point.empty_face.base
        return self.point.fundamental_face(self.point.mu_connected_part(first.subset & second.subset))

    def join(self, first: FundamentalFace, second: FundamentalFace) -> FundamentalFace:
        if first.empty:
            return second
        if second.empty:
            return first
        return self.point.fundamental_face(first.subset | second.subset)

    def __len__(self) -> int:
        return len(self.faces)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({[f.label() for f in self.faces]!r})"


class DominantPoint:
    """A dominant point mu together with the face calculus of its orbit hull
    H = conv(W mu).

    Args:
        realization: The realization mu is written in.
        mu: The point, as a weight vector (integers or Fractions).
        group: The Weyl group to use; a new one is created if not given.

    Raises:
        DominanceViolatedError: If some <mu, alpha_i^vee> is negative.
    """

    def __init__(self, realization: Realization, mu: Sequence[Number], group: WeylGroup | None = None) -> None:
        self.logger = logging.getLogger(__name__)
        self.realization = realization
        self.gcm = realization.gcm
        self.group = group if group is not None else WeylGroup(realization)
        self.mu: WeightVector = realization.check_weight(mu)
        negative = [i for i in self.gcm.index_set if self.mu[i - 1] < 0]
        if negative:
            msg = "mu = %r is not dominant at %r" % (self.mu, sorted(negative))
            self.logger.warning(msg)
            raise DominanceViolatedError(msg)
        self.j_zero, self.j_positive = point_type(realization, self.mu)
        self._fundamental: dict[frozenset[int], FundamentalFace] = {}
        self._empty = Face(self.group.identity, FundamentalFace(frozenset(), self.gcm.index_set, empty=True))

    # Subsets of simple roots.

    def mu_connected_part(self, subset: Iterable[int]) -> frozenset[int]:
        """I^*: the union of the Dynkin components of I that meet J>."""
        parts = [c for c in dynkin_components(self.gcm, subset) if c & self.j_positive]
        return frozenset().union(*parts)

    def is_mu_connected(self, subset: Iterable[int]) -> bool:
        subset = frozenset(subset)
        return self.mu_connected_part(subset) == subset

    def i_star(self, subset: Iterable[int]) -> frozenset[int]:
        """I_* = {alpha in J0 - I separated from I} for a mu-connected I.

        Raises:
            NotMuConnectedError: If I is not mu-connected.
        """
        subset = frozenset(subset)
        if not self.is_mu_connected(subset):
            msg = "%s is not mu-connected for mu = %r" % (format_subset(subset), self.mu)
            self.logger.warning(msg)
            raise NotMuConnectedError(msg)
        return frozenset(a for a in self.j_zero - subset if are_separated(self.gcm, (a,), subset))

    # Fundamental faces.

    def fundamental_face(self, subset: Iterable[int]) -> FundamentalFace:
        subset = frozenset(subset)
        face = self._fundamental.get(subset)
        if face is None:
            face = FundamentalFace(subset, self.i_star(subset))
            self._fundamental[subset] = face
        return face

    @property
    def empty_face(self) -> Face:
        return self._empty

    @property
    def vertex(self) -> Face:
        return Face(self.group.identity, self.fundamental_face(frozenset()))

    @property
    def hull(self) -> Face:
        """H itself, which is F_I for I the mu-connected part of Pi."""
        return Face(self.group.identity, self.fundamental_face(self.mu_connected_part(self.gcm.index_set)))

    def fundamental_faces(self) -> FundamentalLattice:
        return FundamentalLattice(self)

    # Faces.

    def canonicalize_face(self, w: WeylElement, subset: Iterable[int]) -> Face:
        """The face w F_I in canonical form: I is replaced by I^* and w by the
        shortest element of w W_lambda.
        """
        base = self.fundamental_face(self.mu_connected_part(subset))
        return Face(self.group.min_coset_rep(w, base.isotropy, Side.RIGHT), base)

    def act_face(self, w: WeylElement, face: Face) -> Face:
        if face.empty:
            return face
        return self.canonicalize_face(self.group.multiply(w, face.sigma), face.subset)

    def face_leq(self, first: Face, second: Face) -> bool:
        """Inclusion of faces: w F_I is contained in w' F_I' iff I is a subset of
        I' and w^{-1} w' lies in W_{I_*} W_{I'}.
        """
        if first.empty:
            return True
        if second.empty or not first.subset <= second.subset:
            return False
        v = self.group.multiply(self.group.inverse(first.sigma), second.sigma)
        _, u, _ = self.group.double_coset_factorize(v, first.base.lower, second.subset)
        return u.is_identity

    def _simple_images(self, u: WeylElement, subset: Iterable[int]) -> frozenset[int]:
        # The simple roots among u(alpha_j), j in subset.
        images = set()
        for j in subset:
            image = self.group.act_on_root(u, self.group.simple_root(j))
            if root_height(image) == 1 and min(image) == 0:
                images.add(image.index(1) + 1)
        return frozenset(images)

    def face_meet(self, first: Face, second: Face) -> Face:
        """The intersection of two faces (possibly the empty face)."""
        if first.empty or second.empty:
            return self._empty
        group = self.group
        v = group.multiply(group.inverse(first.sigma), second.sigma)
        a, u, _ = group.double_coset_factorize(v, first.base.isotropy, second.base.isotropy)
        if not group.in_standard_parabolic(u, self.j_zero):
            return self._empty
        common = self.mu_connected_part(first.subset & self._simple_images(u, second.subset))
        return self.canonicalize_face(group.multiply(first.sigma, a), common)

    def face_join(self, first: Face, second: Face) -> Face:
        """The smallest face containing both faces."""
        if first.empty:
            return second
        if second.empty:
            return first
        group = self.group
        v = group.multiply(group.inverse(first.sigma), second.sigma)
        a, u, _ = group.double_coset_factorize(v, first.base.lower, second.base.lower)
        subset = first.subset | second.subset | group.support(u)
        return self.canonicalize_face(group.multiply(first.sigma, a), subset)

    def isotropy_type(self, face: Face) -> ParabolicType:
        """W(F) = sigma W_lambda sigma^{-1}, the setwise stabilizer of F."""
        return ParabolicType(face.sigma, face.base.isotropy)

    def stabilizer_type(self, face: Face) -> ParabolicType:
        """W_*(F) = sigma W_{lambda_*} sigma^{-1}, the pointwise stabilizer of F."""
        return ParabolicType(face.sigma, face.base.lower)

    def dimension(self, face: Face) -> int:
        return face.dimension

    def enumerate_faces(self, bound: int) -> FaceEnumeration:
        """All faces whose canonical sigma has length at most `bound`.

        The result is complete iff no face has a canonical sigma of length
        bound + 1, which is exact: for finite W it is true as soon as the bound
        reaches the length of the longest element.
        """
        layers = self.group.elements_by_length(bound + 1)
        faces = [self._empty]
        complete = True
        for base in self.fundamental_faces().faces[1:]:
            for length, layer in enumerate(layers):
                for w in layer:
                    if any(self.group.is_right_descent(w, s) for s in base.isotropy):
                        continue
                    if length > bound:
                        complete = False
                        break
                    faces.append(Face(w, base))
        faces.sort(key=face_sort_key)
        self.logger.info("Enumerated %d faces up to sigma length %d (complete: %s)", len(faces), bound, complete)
        return FaceEnumeration(faces, complete)

    def orbit_of_face(self, face: Face, cap: int = 100000) -> tuple[list[WeightVector], bool]:
        """The orbit points lying on a face: sigma W_I mu."""
        if face.empty:
            return [], True
        orbit = orbit_enumerate(self.group, self.mu, face.subset, cap)
        points = sorted(self.group.act_on_weight(face.sigma, p.weight) for p in orbit.points)
        return points, orbit.complete

    # Geometry of H inside the fundamental chamber.

    def stratify_point(self, eta: Sequence[Number]) -> Stratum:
        """Locates a dominant point in H: returns K with eta in mu - R_>K, K mu-connected.

        Raises:
            DominanceViolatedError: If eta is not dominant.
            NotInChamberHullError: If eta is not in H.
        """
        eta = self.realization.check_weight(eta)
        if any(eta[i - 1] < 0 for i in self.gcm.index_set):
            msg = "%r is not dominant" % (eta,)
            self.logger.warning(msg)
            raise DominanceViolatedError(msg)

        difference = tuple(Fraction(m) - Fraction(e) for m, e in zip(self.mu, eta))
        coefficients = linalg.solve(self.realization.root_coords, difference)
        if coefficients is None or any(c < 0 for c in coefficients):
            msg = "%r is not of the form mu - (nonnegative combination of simple roots)" % (eta,)
            self.logger.warning(msg)
            raise NotInChamberHullError(msg)

        support = frozenset(j for j, c in enumerate(coefficients, start=1) if c > 0)
        if not self.is_mu_connected(support):
            msg = "%r has support %s, which is not mu-connected" % (eta, format_subset(support))
            self.logger.warning(msg)
            raise NotInChamberHullError(msg)
        return Stratum(support, coefficients)

    def hull_chamber_closed(self) -> bool:
        """True iff H meets the closed chamber in a closed set, i.e. iff every
        component of Pi^* n J0 is of finite type.
        """
        return is_finite_type(self.gcm, self.mu_connected_part(self.gcm.index_set) & self.j_zero)

    def edges_at_mu(self, cap: int = 1000) -> EdgeReport:
        """The roots gamma in W_{J0} J> giving the edges mu r_gamma(mu) at the vertex mu."""
        group = self.group
        frontier = [group.simple_root(j) for j in sorted(self.j_positive)]
        seen = set(frontier)
        complete = True
        while frontier and complete:
            following = []
            for root in frontier:
                for s in sorted(self.j_zero):
                    image = group.reflect_root(s, root)
                    if image in seen:
                        continue
                    if len(seen) >= cap:
                        complete = False
                        break
                    seen.add(image)
                    following.append(image)
            frontier = following
        roots = sorted(seen, key=lambda v: (root_height(v), v))
        return EdgeReport(self.hull_chamber_closed(), roots, complete)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(mu={list(self.mu)!r}, J0={format_subset(self.j_zero)})"
