from __future__ import annotations

import logging
from enum import IntEnum
from fractions import Fraction
from itertools import product
from typing import TYPE_CHECKING, NamedTuple

from .coxeter import is_negative
from .exceptions import NotDominantIntegralError, NotInChamberHullError

if TYPE_CHECKING:  # pragma: no cover
    from typing import Container, Sequence

    from .coxeter import RealRoot, WeylElement
    from .faces import DominantPoint, Face

    DepthVector = tuple[int, ...]


class RootRegion(IntEnum):
    """Where a real root sits relative to a face F.

    STAR: r_gamma fixes F pointwise.  UPPER_STAR: r_gamma maps F to itself
    without fixing it.  POSITIVE / NEGATIVE: the remaining roots, by the sign of
    sigma^{-1} gamma.
    """

    STAR = 0
    UPPER_STAR = 1
    POSITIVE = 2
    NEGATIVE = 3

    @property
    def label(self) -> str:
        return self.name.lower().replace("_", "-")

    @property
    def in_isotropy(self) -> bool:
        return self in (RootRegion.STAR, RootRegion.UPPER_STAR)


class FaceWeights(NamedTuple):
    weights: list[DepthVector]
    partial: bool


class StringLawReport(NamedTuple):
    """Outcome of the weight string checks for one face.

    `unresolved` lists existence statements that could not be decided because
    the face's weights are only partially inside the truncation; `skipped`
    counts strings that leave the truncation.
    """

    violations: list[str]
    unresolved: list[str]
    checked: int
    skipped: int

    @property
    def passed(self) -> bool:
        return not self.violations


class MembershipReport(NamedTuple):
    mismatches: list[DepthVector]
    checked: int

    @property
    def passed(self) -> bool:
        return not self.mismatches


def classify_root(point: DominantPoint, face: Face, gamma: Sequence[int]) -> RootRegion:
    """Classifies a real root against a face sigma F_I.

    With beta = sigma^{-1} gamma, r_gamma lies in sigma W_J sigma^{-1} iff the
    support of beta lies in J, which decides STAR (J = lambda_*) and UPPER_STAR
    (J = lambda); otherwise the sign of beta decides.

    Raises:
        NotARealRootError: If gamma is not a real root.
    """
    group = point.group
    group.conjugate_to_simple(gamma)
    if face.empty:
        return RootRegion.STAR
    beta = group.act_on_root(group.inverse(face.sigma), gamma)
    support = frozenset(j for j, c in enumerate(beta, start=1) if c != 0)
    if support <= face.base.lower:
        return RootRegion.STAR
    if support <= face.base.isotropy:
        return RootRegion.UPPER_STAR
    return RootRegion.NEGATIVE if is_negative(beta) else RootRegion.POSITIVE


class TruncatedWeightSet:
    """The weights mu - sum k_i alpha_i of the irreducible highest weight module
    of highest weight mu with k_1 + ... + k_m <= depth.

    Weights are stored by their depth vectors k.  Generation walks the layers
    of constant total depth and adds, for every known weight lambda and simple
    root alpha, the lower part lambda - alpha, ..., lambda - (q + <lambda, alpha^vee>) alpha
    of its alpha-string, q being how far the string goes up.

    Args:
        point: The highest weight, which must be dominant and integral.
        depth: The truncation depth.

    Raises:
        NotDominantIntegralError: If mu is not integral.
    """

    def __init__(self, point: DominantPoint, depth: int) -> None:
        self.logger = logging.getLogger(__name__)
        self.point = point
        self.group = point.group
        self.depth = depth
        self.rank = point.gcm.size
        if any(Fraction(x).denominator != 1 for x in point.mu):
            msg = "Weight generation needs an integral highest weight, got %r" % (point.mu,)
            self.logger.warning(msg)
            raise NotDominantIntegralError(msg)
        self._mu = tuple(int(x) for x in point.mu)
        self._rows = point.gcm.entries
        self._present = self._generate()

    def _generate(self) -> frozenset[DepthVector]:
        present = {(0,) * self.rank}
        layer = [(0,) * self.rank]
        for total in range(self.depth):
            found = set()
            for k in layer:
                for i in range(1, self.rank + 1):
                    q = self._steps(present, k, i, -1)
                    p = q + self.pairing(k, i)
                    for j in range(1, min(p, self.depth - total) + 1):
                        found.add(self._shift(k, i, j))
            present.update(found)
            layer = sorted(k for k in present if sum(k) == total + 1)
            self.logger.debug("Depth %d: %d weights", total + 1, len(layer))
        self.logger.info("Generated %d weights up to depth %d", len(present), self.depth)
        return frozenset(present)

    @staticmethod
    def _shift(k: DepthVector, i: int, amount: int) -> DepthVector:
        shifted = list(k)
        shifted[i - 1] += amount
        return tuple(shifted)

    def _steps(self, present: Container[DepthVector], k: DepthVector, i: int, sign: int) -> int:
        # How many steps the alpha_i-string goes from k in direction sign (+1 is deeper).
        steps = 0
        while self._shift(k, i, sign * (steps + 1)) in present:
            steps += 1
        return steps

    # Queries.

    def __contains__(self, k: object) -> bool:
        return k in self._present

    def __len__(self) -> int:
        return len(self._present)

    @property
    def weights(self) -> list[DepthVector]:
        return sorted(self._present, key=lambda k: (sum(k), k))

    def weight(self, k: Sequence[int]) -> tuple[int, ...]:
        """The weight vector of the depth vector k."""
        coords = self.point.realization.root_coords
        return tuple(m - sum(c * root[i] for c, root in zip(k, coords)) for i, m in enumerate(self._mu))

    def pairing(self, k: Sequence[int], i: int) -> int:
        """<mu - sum k_j alpha_j, alpha_i^vee>."""
        return self._mu[i - 1] - sum(a * x for a, x in zip(self._rows[i - 1], k))

    def reflect(self, k: Sequence[int], i: int) -> DepthVector:
        return self._shift(tuple(k), i, self.pairing(k, i))

    def act(self, w: WeylElement, k: Sequence[int]) -> DepthVector:
        result = tuple(k)
        for s in reversed(w.word):
            result = self.reflect(result, s)
        return result

    def root_pairing(self, k: Sequence[int], real: RealRoot) -> int:
        """<lambda, gamma^vee> for gamma = w(alpha_j), computed as <w^{-1} lambda, alpha_j^vee>."""
        return self.pairing(self.act(self.group.inverse(real.element), k), real.simple)

    def in_face(self, k: Sequence[int], face: Face) -> bool:
        """Whether the weight lies in sigma F_I, i.e. sigma^{-1} of it has depth support in I."""
        if face.empty:
            return False
        moved = self.act(self.group.inverse(face.sigma), k)
        return all(c == 0 for j, c in enumerate(moved, start=1) if j not in face.subset)

    def face_weights(self, face: Face) -> FaceWeights:
        """The weights lying on a face.

        They are the sigma-translates of the weights of depth support inside I.
        The result is flagged partial when a string inside I continues below the
        truncation depth, or when a translate leaves the truncation.
        """
        if face.empty:
            return FaceWeights([], False)
        inside = [k for k in self._present if all(c == 0 for j, c in enumerate(k, start=1) if j not in face.subset)]
        partial = any(sum(k) == self.depth and self._continues(k, face.subset) for k in inside)
        weights = []
        for k in inside:
            image = self.act(face.sigma, k)
            if sum(image) > self.depth:
                partial = True
            else:
                weights.append(image)
        return FaceWeights(sorted(weights, key=lambda k: (sum(k), k)), partial)

    def _continues(self, k: DepthVector, subset: frozenset[int]) -> bool:
        # Whether some alpha_i-string, i in subset, goes below k.
        return any(self._steps(self._present, k, i, -1) + self.pairing(k, i) > 0 for i in subset)

    def string(self, k: DepthVector, gamma: Sequence[int]) -> list[DepthVector] | None:
        """The gamma-string through a weight, from the top down, or None if it
        leaves the truncation.
        """
        members = [k]
        for sign in (-1, 1):
            step = 1
            while True:
                candidate = tuple(x + sign * step * g for x, g in zip(k, gamma))
                if any(x < 0 for x in candidate):
                    break
                if sum(candidate) > self.depth:
                    return None
                if candidate not in self._present:
                    break
                members.append(candidate)
                step += 1
        return sorted(members, key=lambda v: (sum(v), v))

    # Checks.

    def check_invariance(self) -> list[DepthVector]:
        """Weights with a simple reflection image inside the truncation that is missing."""
        missing = []
        for k in self.weights:
            for i in range(1, self.rank + 1):
                image = self.reflect(k, i)
                if sum(image) <= self.depth and image not in self._present:
                    missing.append(image)
        return missing

    def check_simple_strings(self) -> tuple[list[tuple[DepthVector, int]], int]:
        """Checks p - q = <lambda, alpha_i^vee> on every simple root string that
        ends inside the truncation.  Returns the failures and the number skipped.
        """
        failures = []
        skipped = 0
        for k in self.weights:
            for i in range(1, self.rank + 1):
                q = self._steps(self._present, k, i, -1)
                p = self._steps(self._present, k, i, 1)
                if sum(k) + p >= self.depth:
                    skipped += 1
                    continue
                if p - q != self.pairing(k, i):
                    failures.append((k, i))
        return failures, skipped

    def verify_string_laws(self, face: Face, root_height: int) -> StringLawReport:
        """Checks the weight string statements for a nonempty face on all real
        roots of height at most `root_height` (both signs).

        For gamma fixing F pointwise the string through an F-weight is a single
        point; for gamma stabilizing F it stays in F, and strings through other
        weights avoid F; for the positive region the string is eta, eta - gamma,
        ..., r_gamma eta with eta its only F-weight (negative symmetrically).
        """
        group = self.group
        violations: list[str] = []
        unresolved: list[str] = []
        checked = 0
        skipped = 0
        face_weights = self.face_weights(face)
        positive = group.positive_real_roots(root_height)
        roots = positive + [tuple(-x for x in r) for r in positive]

        for gamma in roots:
            region = classify_root(self.point, face, gamma)
            real = group.conjugate_to_simple(gamma)
            pairings = [self.root_pairing(eta, real) for eta in face_weights.weights]
            for eta, pairing in zip(face_weights.weights, pairings):
                members = self.string(eta, gamma)
                if members is None:
                    skipped += 1
                    continue
                checked += 1
                problem = self._string_problem(eta, gamma, members, pairing, region, face)
                if problem:
                    violations.append("%s, gamma=%r, eta=%r: %s" % (region.label, gamma, eta, problem))

            if region.in_isotropy:
                for eta in self.weights:
                    if self.in_face(eta, face):
                        continue
                    members = self.string(eta, gamma)
                    if members is None:
                        skipped += 1
                        continue
                    checked += 1
                    if any(self.in_face(v, face) for v in members):
                        violations.append("gamma=%r: string through %r reaches the face" % (gamma, eta))

            witnessed = {
                RootRegion.STAR: True,
                RootRegion.UPPER_STAR: any(x > 0 for x in pairings) and any(x < 0 for x in pairings),
                RootRegion.POSITIVE: any(x > 0 for x in pairings),
                RootRegion.NEGATIVE: any(x < 0 for x in pairings),
            }[region]
            if not witnessed:
                message = "%s, gamma=%r: no F-weight with a nonzero pairing found" % (region.label, gamma)
                if face_weights.partial:
                    unresolved.append(message)
                else:
                    violations.append(message)

        report = StringLawReport(violations, unresolved, checked, skipped)
        self.logger.info(
            "String laws on %s: %d checked, %d skipped, %d violations",
            face.label(),
            checked,
            skipped,
            len(violations),
        )
        return report

    def _string_problem(
        self,
        eta: DepthVector,
        gamma: Sequence[int],
        members: list[DepthVector],
        pairing: int,
        region: RootRegion,
        face: Face,
    ) -> str | None:
        if region.in_isotropy and not all(self.in_face(v, face) for v in members):
            return "string leaves the face"
        if region == RootRegion.STAR and (len(members) != 1 or pairing != 0):
            return "string has %d members, pairing %d" % (len(members), pairing)
        if region in (RootRegion.POSITIVE, RootRegion.NEGATIVE):
            # eta, eta - sign gamma, ..., r_gamma eta in depth coordinates.
            sign = 1 if region == RootRegion.POSITIVE else -1
            expected = [tuple(x + sign * j * g for x, g in zip(eta, gamma)) for j in range(abs(pairing) + 1)]
            if sign * pairing < 0:
                return "pairing %d has the wrong sign" % pairing
            if sorted(expected, key=lambda v: (sum(v), v)) != members:
                return "string is %r" % (members,)
            if any(v != eta and self.in_face(v, face) for v in members):
                return "string has another F-weight"
        return None

    def dominant_membership_crosscheck(self) -> MembershipReport:
        """Compares weight membership with the hull criterion for every dominant
        mu - sum k_i alpha_i of depth at most the truncation depth.
        """
        mismatches = []
        checked = 0
        for k in product(range(self.depth + 1), repeat=self.rank):
            if sum(k) > self.depth:
                continue
            if any(self.pairing(k, i) < 0 for i in range(1, self.rank + 1)):
                continue
            checked += 1
            try:
                self.point.stratify_point(self.weight(k))
                in_hull = True
            except NotInChamberHullError:
                in_hull = False
            if in_hull != (k in self._present):
                mismatches.append(k)
        self.logger.info("Dominant membership: %d checked, %d mismatches", checked, len(mismatches))
        return MembershipReport(mismatches, checked)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(mu={list(self._mu)!r}, depth={self.depth}, weights={len(self)})"


def generate_weights(point: DominantPoint, depth: int) -> TruncatedWeightSet:
    return TruncatedWeightSet(point, depth)
