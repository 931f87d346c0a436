from __future__ import annotations

import logging
from enum import IntEnum
from itertools import product
from typing import TYPE_CHECKING, NamedTuple

from .cartan import is_finite_type
from .exceptions import NotIdempotentError, PiNotMuConnectedError
from .faces import Face, ParabolicType, face_sort_key, format_subset

if TYPE_CHECKING:  # pragma: no cover
    from random import Random
    from typing import Sequence

    from .coxeter import WeylElement
    from .faces import DominantPoint, FundamentalFace


class RennerElement(NamedTuple):
    """The element w e(F) of the Renner monoid.

    `unit` is the canonical representative of w modulo the pointwise stabilizer
    of F, so two elements are equal iff their tuples are equal.
    """

    unit: WeylElement
    face: Face

    @property
    def is_zero(self) -> bool:
        return self.face.empty

    def label(self) -> str:
        return "(%s, %s)" % (str(self.unit) or "e", self.face.label())


def element_sort_key(element: RennerElement) -> tuple[object, ...]:
    return (face_sort_key(element.face), element.unit.length, element.unit.word)


class CrossSectionEntry(NamedTuple):
    """A member of the cross-section lattice: the idempotent of a fundamental face
    with its type maps lambda^* (moving part), lambda_* (pointwise stabilizer) and
    lambda = lambda_* | lambda^*.
    """

    e: FundamentalFace
    lambda_star: frozenset[int]
    lambda_sub: frozenset[int]
    lambda_: frozenset[int]

    @property
    def is_zero(self) -> bool:
        return self.e.empty

    def label(self) -> str:
        return "0" if self.e.empty else "e%s" % format_subset(self.e.subset)


class TypeMaps(NamedTuple):
    isotropy: frozenset[int]
    lower: frozenset[int]
    upper: frozenset[int]


class Polarity(IntEnum):
    POSITIVE = 1
    NEGATIVE = -1


class GroupShadow(NamedTuple):
    """The subgroup sigma (L_levi Z U^{radical}) sigma^{-1} of the ambient group,
    with U taken positive or negative according to `polarity`.
    """

    sigma: WeylElement
    levi: frozenset[int]
    radical: frozenset[int]
    polarity: Polarity


class GroupCentralizers(NamedTuple):
    left_centralizer: GroupShadow
    right_centralizer: GroupShadow
    left_stabilizer: GroupShadow
    right_stabilizer: GroupShadow


class RennerEnumeration(NamedTuple):
    elements: list[RennerElement]
    complete: bool


class LawReport(NamedTuple):
    """Counterexamples found per law, keyed by law name, plus how many cases were checked."""

    violations: dict[str, list[str]]
    checked: dict[str, int]

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())


class RennerMonoid:
    """The Renner monoid R = W E(R) attached to a dominant point.

    The idempotents are the e(F) for the faces F of the orbit hull, multiplied by
    e(F) e(F') = e(F n F') and conjugated by w e(F) w^{-1} = e(wF).

    Args:
        point: The dominant point; its set of simple roots must be mu-connected.

    Raises:
        PiNotMuConnectedError: If Pi is not mu-connected.
    """

    def __init__(self, point: DominantPoint) -> None:
        self.logger = logging.getLogger(__name__)
        self.point = point
        self.group = point.group
        everything = point.gcm.index_set
        if point.mu_connected_part(everything) != everything:
            msg = "Pi is not mu-connected for mu = %r (mu-connected part %s)" % (
                point.mu,
                format_subset(point.mu_connected_part(everything)),
            )
            self.logger.warning(msg)
            raise PiNotMuConnectedError(msg)
        self._products: dict[tuple[RennerElement, RennerElement], RennerElement] = {}
        self.zero = RennerElement(self.group.identity, point.empty_face)
        self.one = RennerElement(self.group.identity, point.hull)

    # Elements.

    def canonical_unit(self, w: WeylElement, face: Face) -> WeylElement:
        """The representative of w modulo sigma W_{I_*} sigma^{-1}: the shortest
        element of w sigma W_{I_*}, times sigma^{-1}.
        """
        group = self.group
        shortest = group.min_coset_rep(group.multiply(w, face.sigma), face.base.lower)
        return group.multiply(shortest, group.inverse(face.sigma))

    def make_element(self, w: WeylElement, face: Face) -> RennerElement:
        return RennerElement(self.canonical_unit(w, face), face)

    def unit(self, w: WeylElement) -> RennerElement:
        return RennerElement(w, self.point.hull)

    def idempotent(self, face: Face) -> RennerElement:
        return RennerElement(self.group.identity, face)

    def is_unit(self, x: RennerElement) -> bool:
        return x.face == self.point.hull

    def multiply(self, *elements: RennerElement) -> RennerElement:
        result = self.one
        for x in elements:
            result = self._multiply(result, x)
        return result

    def _multiply(self, x: RennerElement, y: RennerElement) -> RennerElement:
        # (w1 e(F1)) (w2 e(F2)) = w1 w2 e(w2^{-1} F1 n F2)
        key = (x, y)
        result = self._products.get(key)
        if result is None:
            point = self.point
            moved = point.act_face(self.group.inverse(y.unit), x.face)
            result = self.make_element(self.group.multiply(x.unit, y.unit), point.face_meet(moved, y.face))
            self._products[key] = result
        return result

    def inverse(self, x: RennerElement) -> RennerElement:
        """The inverse in the inverse monoid R: (w e(F))^inv = e(F) w^{-1} = w^{-1} e(wF)."""
        w_inverse = self.group.inverse(x.unit)
        return self.make_element(w_inverse, self.point.act_face(x.unit, x.face))

    def is_idempotent(self, x: RennerElement) -> bool:
        return x.unit.is_identity

    def idempotents_leq(self, e: RennerElement, f: RennerElement) -> bool:
        self._require_idempotent(e)
        self._require_idempotent(f)
        return self.point.face_leq(e.face, f.face)

    def _require_idempotent(self, x: RennerElement) -> None:
        if not self.is_idempotent(x):
            msg = "%s is not an idempotent" % x.label()
            self.logger.warning(msg)
            raise NotIdempotentError(msg)

    # The cross-section lattice.

    def entry(self, base: FundamentalFace) -> CrossSectionEntry:
        return CrossSectionEntry(base, base.upper, base.lower, base.isotropy)

    def cross_section_lattice(self) -> list[CrossSectionEntry]:
        """One idempotent per W-orbit of faces: the zero and e(F_I) for every mu-connected I."""
        return [self.entry(base) for base in self.point.fundamental_faces().faces]

    def entry_element(self, entry: CrossSectionEntry) -> RennerElement:
        return self.idempotent(Face(self.group.identity, entry.e))

    def conjugacy_normal_form(self, e: RennerElement) -> tuple[WeylElement, CrossSectionEntry]:
        """Writes an idempotent as e = sigma f sigma^{-1} with f in the cross-section
        lattice and sigma shortest in sigma W_{lambda(f)}.

        Raises:
            NotIdempotentError: If e is not idempotent.
        """
        self._require_idempotent(e)
        return e.face.sigma, self.entry(e.face.base)

    def centralizer_type(self, e: RennerElement) -> ParabolicType:
        self._require_idempotent(e)
        return self.point.isotropy_type(e.face)

    def stabilizer_type(self, e: RennerElement) -> ParabolicType:
        self._require_idempotent(e)
        return self.point.stabilizer_type(e.face)

    def group_centralizers(self, e: RennerElement) -> GroupCentralizers:
        """The centralizers and stabilizers of e in the ambient group, as parabolic data.

        For a fundamental face the left centralizer is P_lambda, the right one its
        opposite; the stabilizers share the unipotent radicals but have Levi type
        lambda_*.  A general idempotent conjugates these by sigma.
        """
        self._require_idempotent(e)
        sigma = e.face.sigma
        base = e.face.base
        return GroupCentralizers(
            GroupShadow(sigma, base.isotropy, base.isotropy, Polarity.POSITIVE),
            GroupShadow(sigma, base.isotropy, base.isotropy, Polarity.NEGATIVE),
            GroupShadow(sigma, base.lower, base.isotropy, Polarity.POSITIVE),
            GroupShadow(sigma, base.lower, base.isotropy, Polarity.NEGATIVE),
        )

    def monoid_type_maps(self, entry: CrossSectionEntry) -> TypeMaps:
        """Recomputes lambda, lambda_* and lambda^* of a cross-section entry from
        products with simple reflections: r_s e = e r_s, and r_s e = e r_s = e.
        """
        e = self.entry_element(entry)
        isotropy = set()
        lower = set()
        for s in self.group.generators:
            r = self.unit(self.group.generator(s))
            left = self.multiply(r, e)
            if left != self.multiply(e, r):
                continue
            isotropy.add(s)
            if left == e:
                lower.add(s)
        return TypeMaps(frozenset(isotropy), frozenset(lower), frozenset(isotropy - lower))

    def cell_of(self, x: RennerElement) -> CrossSectionEntry:
        """The f in the cross-section lattice with x in W f W, read off x x^inv."""
        return self.entry(self.multiply(x, self.inverse(x)).face.base)

    def cell_size(self, entry: CrossSectionEntry) -> int | None:
        """|W f W| = |W / W_lambda| * |W / W_lambda_*|, or None if W is infinite."""
        group = self.group
        if not is_finite_type(self.point.gcm, group.generators):
            return None
        order = group.parabolic_order(group.generators)
        isotropy = group.parabolic_order(entry.lambda_)
        lower = group.parabolic_order(entry.lambda_sub)
        assert order is not None and isotropy is not None and lower is not None
        return (order // isotropy) * (order // lower)

    def conjugacy_class(self, entry: CrossSectionEntry, bound: int) -> list[RennerElement]:
        """The idempotents sigma f sigma^{-1} with sigma shortest in its coset of
        W_lambda(f) and of length at most `bound`.
        """
        if entry.is_zero:
            return [self.zero]
        members = []
        for layer in self.group.elements_by_length(bound):
            for sigma in layer:
                if not any(self.group.is_right_descent(sigma, s) for s in entry.lambda_):
                    members.append(self.idempotent(Face(sigma, entry.e)))
        return members

    # Enumeration and checks.

    def enumerate(self, unit_bound: int, sigma_bound: int) -> RennerEnumeration:
        """All w e(F) with length(w) <= unit_bound and F's sigma of length <= sigma_bound.

        The result is complete when W has no element longer than `unit_bound`
        and the face enumeration is complete, which happens exactly when W is
        finite and the bounds reach the longest element.
        """
        faces = self.point.enumerate_faces(sigma_bound)
        layers = self.group.elements_by_length(unit_bound + 1)
        units = [w for layer in layers[: unit_bound + 1] for w in layer]
        elements = {self.make_element(w, face) for w in units for face in faces.faces}
        complete = faces.complete and len(layers) <= unit_bound + 1
        result = sorted(elements, key=element_sort_key)
        self.logger.info("Enumerated %d Renner elements (complete: %s)", len(result), complete)
        return RennerEnumeration(result, complete)

    def multiplication_table(self, elements: Sequence[RennerElement]) -> list[list[int | None]]:
        """table[i][j] is the index of elements[i] * elements[j], or None if the
        product is not in the list.
        """
        index = {x: i for i, x in enumerate(elements)}
        return [[index.get(self.multiply(x, y)) for y in elements] for x in elements]

    def check_monoid_laws(
        self, elements: Sequence[RennerElement], samples: int | None = None, rng: Random | None = None
    ) -> LawReport:
        """Checks associativity, the inverse-monoid laws, commuting idempotents and
        E(We) = {e} on the given elements.

        With `samples` set, triples and pairs are drawn at random (using `rng`)
        whenever there are more of them than `samples`; otherwise all are checked.
        """
        violations: dict[str, list[str]] = {
            "associativity": [],
            "inverse": [],
            "inverse of product": [],
            "idempotents commute": [],
            "E(We) = {e}": [],
        }
        checked = dict.fromkeys(violations, 0)
        elements = list(elements)

        def pick(arity: int) -> list[tuple[RennerElement, ...]]:
            if samples is None or len(elements) ** arity <= samples:
                return list(product(elements, repeat=arity))
            assert rng is not None, "sampling needs a random generator"
            return [tuple(rng.choice(elements) for _ in range(arity)) for _ in range(samples)]

        for x, y, z in pick(3):
            checked["associativity"] += 1
            if self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z)):
                violations["associativity"].append("%s %s %s" % (x.label(), y.label(), z.label()))

        for x in elements:
            checked["inverse"] += 1
            x_inv = self.inverse(x)
            if self.multiply(x, x_inv, x) != x or self.multiply(x_inv, x, x_inv) != x_inv:
                violations["inverse"].append(x.label())

        for x, y in pick(2):
            checked["inverse of product"] += 1
            if self.inverse(self.multiply(x, y)) != self.multiply(self.inverse(y), self.inverse(x)):
                violations["inverse of product"].append("%s %s" % (x.label(), y.label()))

        idempotents = [x for x in elements if self.is_idempotent(x)]
        for e, f in product(idempotents, repeat=2):
            checked["idempotents commute"] += 1
            if self.multiply(e, f) != self.multiply(f, e):
                violations["idempotents commute"].append("%s %s" % (e.label(), f.label()))

        units = [x for x in elements if self.is_unit(x)]
        for e in idempotents:
            for w in units:
                checked["E(We) = {e}"] += 1
                we = self.multiply(w, e)
                if self.is_idempotent(we) and we != e:
                    violations["E(We) = {e}"].append("%s %s" % (w.label(), e.label()))

        report = LawReport(violations, checked)
        self.logger.info("Monoid laws on %d elements: passed = %s", len(elements), report.passed)
        return report

    def verify_grm_axioms(self, unit_bound: int, sigma_bound: int) -> LawReport:
        """Checks the generalized Renner-Coxeter axioms on a truncated enumeration.

        (a) unit regularity and commuting idempotents, (c) the cross-section lattice
        is closed under products and meets every conjugacy class of idempotents,
        (d) every pair e1 <= e2 is conjugate to a pair f1 <= f2 of the
        cross-section lattice, (e) centralizers and stabilizers of cross-section
        entries are the standard parabolics W_lambda and W_lambda_*, and (f)
        lambda^* is monotone on the cross-section lattice.
        """
        group = self.group
        elements = self.enumerate(unit_bound, sigma_bound).elements
        idempotents = [x for x in elements if self.is_idempotent(x)]
        units = [x for x in elements if self.is_unit(x)]
        lattice = self.cross_section_lattice()
        violations: dict[str, list[str]] = {key: [] for key in ("a", "c", "d", "e", "f")}
        checked = dict.fromkeys(violations, 0)

        for x in elements:
            checked["a"] += 1
            if self.multiply(x, self.unit(group.inverse(x.unit)), x) != x:
                violations["a"].append("%s is not unit regular" % x.label())
        for e, f in product(idempotents, repeat=2):
            checked["a"] += 1
            if self.multiply(e, f) != self.multiply(f, e):
                violations["a"].append("%s and %s do not commute" % (e.label(), f.label()))

        lattice_elements = {self.entry_element(f) for f in lattice}
        for f, g in product(lattice, repeat=2):
            checked["c"] += 1
            if self.multiply(self.entry_element(f), self.entry_element(g)) not in lattice_elements:
                violations["c"].append("%s %s leaves the cross-section lattice" % (f.label(), g.label()))
        for e in idempotents:
            checked["c"] += 1
            sigma, f = self.conjugacy_normal_form(e)
            s = self.unit(sigma)
            if self.multiply(s, self.entry_element(f), self.inverse(s)) != e:
                violations["c"].append("%s is not conjugate to %s" % (e.label(), f.label()))

        for e1, e2 in product(idempotents, repeat=2):
            if not self.idempotents_leq(e1, e2):
                continue
            checked["d"] += 1
            if not self._conjugate_pair(e1, e2):
                violations["d"].append("%s <= %s" % (e1.label(), e2.label()))

        for f in lattice:
            checked["e"] += 1
            e = self.entry_element(f)
            maps = self.monoid_type_maps(f)
            if maps != TypeMaps(f.lambda_, f.lambda_sub, f.lambda_star):
                violations["e"].append("type maps of %s differ: %r" % (f.label(), maps))
            for w in units:
                we = self.multiply(w, e)
                centralizes = we == self.multiply(e, w)
                if centralizes != group.in_standard_parabolic(w.unit, f.lambda_):
                    violations["e"].append("centralizer of %s at %s" % (f.label(), w.label()))
                if (centralizes and we == e) != group.in_standard_parabolic(w.unit, f.lambda_sub):
                    violations["e"].append("stabilizer of %s at %s" % (f.label(), w.label()))

        order = self.point.fundamental_faces()
        for f, g in product(lattice, repeat=2):
            if not order.leq(f.e, g.e):
                continue
            checked["f"] += 1
            if not self.monoid_type_maps(f).upper <= self.monoid_type_maps(g).upper:
                violations["f"].append("%s <= %s" % (f.label(), g.label()))

        report = LawReport(violations, checked)
        self.logger.info("Renner-Coxeter axioms on %d elements: passed = %s", len(elements), report.passed)
        return report

    def _conjugate_pair(self, e1: RennerElement, e2: RennerElement) -> bool:
        # Move F2 to its fundamental face, then F1 into a fundamental face inside it
        # using an element of W(F2).
        group = self.group
        point = self.point
        if e1.is_zero or e2.is_zero:
            w = group.inverse(e2.face.sigma)
        else:
            moved = point.act_face(group.inverse(e2.face.sigma), e1.face)
            _, _, b = group.double_coset_factorize(group.inverse(moved.sigma), moved.base.lower, e2.face.subset)
            w = group.multiply(b, group.inverse(e2.face.sigma))
        f1 = self.idempotent(point.act_face(w, e1.face))
        f2 = self.idempotent(point.act_face(w, e2.face))
        if not (f1.face.sigma.is_identity and f2.face.sigma.is_identity and self.idempotents_leq(f1, f2)):
            return False
        u = self.unit(w)
        u_inv = self.unit(group.inverse(w))
        return self.multiply(u_inv, f1, u) == e1 and self.multiply(u_inv, f2, u) == e2

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(mu={list(self.point.mu)!r})"
