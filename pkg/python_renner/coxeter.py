from __future__ import annotations

import logging
from enum import IntEnum
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple

from .exceptions import DominanceViolatedError, NotARealRootError

if TYPE_CHECKING:  # pragma: no cover
    from random import Random
    from typing import Callable, Iterable, Sequence, Union

    from .cartan import Realization

    Number = Union[int, Fraction]
    WeightVector = tuple[Number, ...]
    RootVector = tuple[int, ...]


class Side(IntEnum):
    """Which side a coset (or a descent) is taken on."""

    LEFT = 0
    RIGHT = 1


class WeylElement(NamedTuple):
    """A Weyl group element, stored as its canonical reduced word.

    Only `WeylGroup` should build these: two elements are equal as group
    elements iff their words are identical.
    """

    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def is_identity(self) -> bool:
        return not self.word

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.word)


class RealRoot(NamedTuple):
    """A real root together with a witness: `root == element(alpha_simple)`."""

    root: RootVector
    element: WeylElement
    simple: int


class OrbitPoint(NamedTuple):
    """A point of a Weyl group orbit of mu, with `depth` the root coordinates of mu - point."""

    weight: WeightVector
    depth: RootVector


class OrbitEnumeration(NamedTuple):
    points: list[OrbitPoint]
    complete: bool


def is_negative(vector: Sequence[int]) -> bool:
    # Roots are sign-coherent, so one negative coefficient decides.
    return any(x < 0 for x in vector)


def is_positive(vector: Sequence[int]) -> bool:
    return all(x >= 0 for x in vector) and any(x > 0 for x in vector)


def root_height(vector: Sequence[int]) -> int:
    return sum(vector)


class WeylGroup:
    """Word arithmetic in the Weyl group W of a generalized Cartan matrix.

    Everything is driven by the integer action of the simple reflections on the
    root lattice, r_i(alpha_j) = alpha_j - a_ij alpha_i, so it works the same for
    finite and infinite groups.  Elements are kept in ShortLex normal form: the
    lexicographically smallest reduced word, obtained by repeatedly extracting
    the smallest left descent.

    Args:
        realization: The realization of the Cartan matrix; weights are acted on
            in its coordinates.
    """

    def __init__(self, realization: Realization) -> None:
        self.logger = logging.getLogger(__name__)
        self.realization = realization
        self.gcm = realization.gcm
        self.rank = self.gcm.size
        self._rows = self.gcm.entries
        self._normal_forms: dict[tuple[int, ...], WeylElement] = {}

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.rank + 1))

    @property
    def identity(self) -> WeylElement:
        return WeylElement(())

    def generator(self, s: int) -> WeylElement:
        return WeylElement((s,))

    def simple_root(self, j: int) -> RootVector:
        return tuple(1 if i == j else 0 for i in range(1, self.rank + 1))

    def reflect_root(self, s: int, vector: Sequence[int]) -> RootVector:
        """r_s(v) = v - <v, alpha_s^vee> alpha_s in root coordinates."""
        row = self._rows[s - 1]
        pairing = sum(a * x for a, x in zip(row, vector))
        if pairing == 0:
            return tuple(vector)
        result = list(vector)
        result[s - 1] -= pairing
        return tuple(result)

    def coroot_pairing(self, vector: Sequence[int], s: int) -> int:
        """<v, alpha_s^vee> for v in root coordinates."""
        return sum(a * x for a, x in zip(self._rows[s - 1], vector))

    def act_on_root(self, w: WeylElement, vector: Sequence[int]) -> RootVector:
        """Applies w to a root-lattice vector (generators act right to left)."""
        result = tuple(vector)
        for s in reversed(w.word):
            result = self.reflect_root(s, result)
        return result

    def act_on_weight(self, w: WeylElement, weight: WeightVector) -> WeightVector:
        result = tuple(weight)
        for s in reversed(w.word):
            result = self.realization.reflect_weight(result, s)
        return result

    def _inverse_images(self, word: Sequence[int]) -> list[RootVector]:
        # Column t is u^{-1}(alpha_t) for the element u spelled by `word`.
        columns = []
        for t in self.generators:
            vector = self.simple_root(t)
            for s in word:
                vector = self.reflect_root(s, vector)
            columns.append(vector)
        return columns

    def _strip(self, word: Sequence[int], pick: Callable[[list[int]], int]) -> tuple[int, ...]:
        columns = self._inverse_images(word)
        result: list[int] = []
        while True:
            descents = [t for t in self.generators if is_negative(columns[t - 1])]
            if not descents:
                return tuple(result)
            s = pick(descents)
            result.append(s)
            # u becomes s*u, so u^{-1}(alpha_t) becomes u^{-1}(alpha_t - a_st alpha_s).
            pivot = columns[s - 1]
            row = self._rows[s - 1]
            columns = [
                tuple(x - row[t - 1] * y for x, y in zip(columns[t - 1], pivot)) for t in self.generators
            ]

    def normalize(self, word: Sequence[int]) -> WeylElement:
        """Returns the element spelled by an arbitrary (possibly non-reduced) word."""
        key = tuple(word)
        element = self._normal_forms.get(key)
        if element is None:
            element = WeylElement(self._strip(key, min))
            self._normal_forms[key] = element
            self.logger.debug("Normal form of %r is %r", key, element.word)
        return element

    def reduced_word(self, word: Sequence[int], rng: Random) -> tuple[int, ...]:
        """A reduced word for the same element, extracting a random left descent
        at every step instead of the smallest one.
        """
        return self._strip(tuple(word), rng.choice)

    def element(self, word: Iterable[int]) -> WeylElement:
        return self.normalize(tuple(word))

    def multiply(self, *elements: WeylElement) -> WeylElement:
        word: tuple[int, ...] = ()
        for element in elements:
            word += element.word
        return self.normalize(word)

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.normalize(tuple(reversed(w.word)))

    def length(self, w: WeylElement) -> int:
        return len(w.word)

    def are_equal(self, first: Sequence[int], second: Sequence[int]) -> bool:
        """Equality of two words as group elements: first * second^{-1} normalizes to the empty word."""
        return self.normalize(tuple(first) + tuple(reversed(second))).is_identity

    def is_right_descent(self, w: WeylElement, s: int) -> bool:
        """l(w r_s) < l(w), i.e. w(alpha_s) < 0."""
        return is_negative(self.act_on_root(w, self.simple_root(s)))

    def is_left_descent(self, w: WeylElement, s: int) -> bool:
        """l(r_s w) < l(w), i.e. w^{-1}(alpha_s) < 0."""
        vector = self.simple_root(s)
        for t in w.word:
            vector = self.reflect_root(t, vector)
        return is_negative(vector)

    def right_descents(self, w: WeylElement) -> frozenset[int]:
        return frozenset(s for s in self.generators if self.is_right_descent(w, s))

    def left_descents(self, w: WeylElement) -> frozenset[int]:
        return frozenset(s for s in self.generators if self.is_left_descent(w, s))

    def support(self, w: WeylElement) -> frozenset[int]:
        """The generators occurring in a reduced word of w (any reduced word gives the same set)."""
        return frozenset(w.word)

    def in_standard_parabolic(self, w: WeylElement, subset: Iterable[int]) -> bool:
        return self.support(w) <= frozenset(subset)

    def min_coset_rep(self, w: WeylElement, subset: Iterable[int], side: Side = Side.RIGHT) -> WeylElement:
        """The unique shortest element of w W_J (side RIGHT) or W_J w (side LEFT)."""
        generators = sorted(subset)
        while True:
            for s in generators:
                if side == Side.RIGHT and self.is_right_descent(w, s):
                    w = self.multiply(w, self.generator(s))
                    break
                if side == Side.LEFT and self.is_left_descent(w, s):
                    w = self.multiply(self.generator(s), w)
                    break
            else:
                return w

    def double_coset_factorize(
        self, w: WeylElement, left: Iterable[int], right: Iterable[int]
    ) -> tuple[WeylElement, WeylElement, WeylElement]:
        """Writes w = a * u * b with a in W_I, b in W_J and u the shortest element
        of W_I w W_J, with lengths adding up.

        Left descents in I are stripped first, then right descents in J, until
        neither is left.
        """
        left = sorted(left)
        right = sorted(right)
        a = self.identity
        b = self.identity
        u = w
        while True:
            s = next((s for s in left if self.is_left_descent(u, s)), None)
            if s is not None:
                u = self.multiply(self.generator(s), u)
                a = self.multiply(a, self.generator(s))
                continue
            s = next((s for s in right if self.is_right_descent(u, s)), None)
            if s is not None:
                u = self.multiply(u, self.generator(s))
                b = self.multiply(self.generator(s), b)
                continue
            return a, u, b

    def elements_by_length(self, bound: int, subset: Iterable[int] | None = None) -> list[list[WeylElement]]:
        """Elements of W (or of W_J) of length at most `bound`, layer by layer.

        Each layer is sorted, so the output is in ShortLex order.  The list is
        shorter than bound + 1 when the group runs out of elements.
        """
        generators = self.generators if subset is None else tuple(sorted(subset))
        layers = [[self.identity]]
        for _ in range(bound):
            following = set()
            for w in layers[-1]:
                for s in generators:
                    if not self.is_right_descent(w, s):
                        following.add(self.multiply(w, self.generator(s)))
            if not following:
                break
            layers.append(sorted(following))
        self.logger.debug("Enumerated %d layers of elements over %r", len(layers), generators)
        return layers

    def parabolic_order(self, subset: Iterable[int], cap: int = 100000) -> int | None:
        """|W_J|, or None if W_J has more than `cap` elements."""
        generators = tuple(sorted(subset))
        layer = [self.identity]
        count = 1
        while layer:
            following = set()
            for w in layer:
                for s in generators:
                    if not self.is_right_descent(w, s):
                        following.add(self.multiply(w, self.generator(s)))
            count += len(following)
            if count > cap:
                return None
            layer = list(following)
        return count

    def conjugate_to_simple(self, root: Sequence[int]) -> RealRoot:
        """Finds w and j with root = w(alpha_j), walking down by simple reflections
        that lower the height.

        Raises:
            NotARealRootError: If the vector is not a real root.
        """
        vector = tuple(root)
        if len(vector) != self.rank or not any(vector):
            msg = "%r is not a real root" % (vector,)
            self.logger.warning(msg)
            raise NotARealRootError(msg)

        negative = is_negative(vector)
        if negative:
            if any(x > 0 for x in vector):
                msg = "%r has mixed signs, so it is not a root" % (vector,)
                self.logger.warning(msg)
                raise NotARealRootError(msg)
            vector = tuple(-x for x in vector)

        word = []
        while root_height(vector) != 1:
            for s in self.generators:
                if self.coroot_pairing(vector, s) > 0:
                    vector = self.reflect_root(s, vector)
                    word.append(s)
                    break
            else:
                msg = "%r is not a real root (stuck at %r)" % (tuple(root), vector)
                self.logger.warning(msg)
                raise NotARealRootError(msg)
            if is_negative(vector):
                msg = "%r is not a root (reached %r)" % (tuple(root), vector)
                self.logger.warning(msg)
                raise NotARealRootError(msg)

        simple = vector.index(1) + 1
        element = self.normalize(word)
        if negative:
            element = self.multiply(element, self.generator(simple))
        return RealRoot(tuple(root), element, simple)

    def reflection(self, root: Sequence[int]) -> WeylElement:
        """The reflection r_gamma = w r_j w^{-1} of a real root gamma = w(alpha_j)."""
        real = self.conjugate_to_simple(root)
        return self.multiply(real.element, self.generator(real.simple), self.inverse(real.element))

    def positive_real_roots(self, max_height: int) -> list[RootVector]:
        """Positive real roots of height at most `max_height`, sorted by height."""
        seen = {self.simple_root(j) for j in self.generators}
        frontier = sorted(seen)
        while frontier:
            following = []
            for vector in frontier:
                for s in self.generators:
                    image = self.reflect_root(s, vector)
                    if image in seen or not is_positive(image) or root_height(image) > max_height:
                        continue
                    seen.add(image)
                    following.append(image)
            frontier = following
        return sorted(seen, key=lambda v: (root_height(v), v))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(rank={self.rank})"


def orbit_enumerate(
    group: WeylGroup, mu: WeightVector, subset: Iterable[int] | None = None, cap: int = 100000
) -> OrbitEnumeration:
    """Breadth-first enumeration of W_I mu for a dominant weight mu.

    Layers are visited by word length and sorted by coordinates, so the output
    order is deterministic.  If more than `cap` points exist, the first `cap`
    are returned with `complete` set to False.

    Raises:
        DominanceViolatedError: If mu is not dominant.
    """
    logger = logging.getLogger(__name__)
    mu = group.realization.check_weight(mu)
    generators = group.generators if subset is None else tuple(sorted(subset))
    if any(mu[i - 1] < 0 for i in group.generators):
        msg = "Orbit enumeration needs a dominant weight, got %r" % (mu,)
        logger.warning(msg)
        raise DominanceViolatedError(msg)

    start = OrbitPoint(mu, (0,) * group.rank)
    points = [start]
    if not generators:
        return OrbitEnumeration(points, True)

    seen = {mu}
    frontier = [start]
    while frontier:
        following: dict[WeightVector, OrbitPoint] = {}
        for point in frontier:
            for s in generators:
                c = point.weight[s - 1]
                if c == 0:
                    continue
                image = group.realization.reflect_weight(point.weight, s)
                if image in seen or image in following:
                    continue
                depth = list(point.depth)
                depth[s - 1] += c
                following[image] = OrbitPoint(image, tuple(depth))
        frontier = [following[key] for key in sorted(following)]
        for point in frontier:
            if len(points) == cap:
                logger.info("Orbit enumeration stopped at the cap of %d points", cap)
                return OrbitEnumeration(points, False)
            points.append(point)
            seen.add(point.weight)
    logger.debug("Orbit of %r under %r has %d points", mu, generators, len(points))
    return OrbitEnumeration(points, True)
