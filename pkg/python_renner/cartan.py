from __future__ import annotations

import logging
from enum import IntEnum
from fractions import Fraction
from itertools import combinations
from typing import TYPE_CHECKING, NamedTuple

from . import linalg
from .exceptions import (
    AsymmetricZeroError,
    CartanMatrixError,
    CompletionError,
    DiagonalNotTwoError,
    PositiveOffDiagonalError,
    RealizationError,
)

if TYPE_CHECKING:  # pragma: no cover
    from typing import Iterable, NoReturn, Sequence, Union

    Number = Union[int, Fraction]
    WeightVector = tuple[Number, ...]
    RootVector = tuple[int, ...]


class CartanType(IntEnum):
    """Type of an indecomposable generalized Cartan matrix."""

    FINITE = 0
    AFFINE = 1
    INDEFINITE = 2

    @property
    def label(self) -> str:
        return self.name.capitalize()


class ComponentType(NamedTuple):
    """The classification of one Dynkin component.

    `strongly_hyperbolic` means: indefinite, and every proper nonempty connected
    sub-diagram is of finite type.  `hyperbolic` relaxes this to finite or affine.
    Both flags are False for finite and affine components.
    """

    component: frozenset[int]
    kind: CartanType
    strongly_hyperbolic: bool = False
    hyperbolic: bool = False

    def describe(self) -> str:
        text = self.kind.label
        if self.strongly_hyperbolic:
            text += ", strongly hyperbolic"
        elif self.hyperbolic:
            text += ", hyperbolic"
        return text


class GeneralizedCartanMatrix:
    """A validated generalized Cartan matrix A = (a_ij).

    Indices are 1-based everywhere in this package: `entry(i, j)` is a_ij, and
    subsets of simple roots are frozensets of indices in 1..m.

    Args:
        entries: A square integer matrix.

    Raises:
        CartanMatrixError: If the matrix is not square or not integral.
        DiagonalNotTwoError: If some a_ii != 2.
        PositiveOffDiagonalError: If some a_ij > 0 with i != j.
        AsymmetricZeroError: If a_ij = 0 but a_ji != 0.
    """

    def __init__(self, entries: Sequence[Sequence[int]]) -> None:
        self.logger = logging.getLogger(__name__)
        self.entries: tuple[tuple[int, ...], ...] = self._check_shape(entries)
        self._check_rules()
        self.rank = linalg.rank(self.entries)

    def _fail(self, error: type[CartanMatrixError], msg: str, row: int = -1, column: int = -1) -> NoReturn:
        self.logger.warning(msg)
        e = error(msg)
        e.row = row
        e.column = column
        raise e

    def _check_shape(self, entries: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
        if not isinstance(entries, (list, tuple)) or len(entries) == 0:
            self._fail(CartanMatrixError, "A Cartan matrix must be a nonempty list of rows")
        m = len(entries)
        rows = []
        for i, row in enumerate(entries, start=1):
            if not isinstance(row, (list, tuple)) or len(row) != m:
                self._fail(CartanMatrixError, "Row %d does not have %d entries" % (i, m), row=i)
            for j, x in enumerate(row, start=1):
                if isinstance(x, bool) or not isinstance(x, int):
                    self._fail(CartanMatrixError, "Entry (%d,%d) is not an integer: %r" % (i, j, x), i, j)
            rows.append(tuple(row))
        return tuple(rows)

    def _check_rules(self) -> None:
        m = self.size
        for i in range(1, m + 1):
            if self.entry(i, i) != 2:
                self._fail(DiagonalNotTwoError, "Diagonal entry (%d,%d) is %d, not 2" % (i, i, self.entry(i, i)), i, i)
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                if i == j:
                    continue
                if self.entry(i, j) > 0:
                    msg = "Off-diagonal entry (%d,%d) is positive: %d" % (i, j, self.entry(i, j))
                    self._fail(PositiveOffDiagonalError, msg, i, j)
                if self.entry(i, j) == 0 and self.entry(j, i) != 0:
                    msg = "Entry (%d,%d) is zero but (%d,%d) is %d" % (i, j, j, i, self.entry(j, i))
                    self._fail(AsymmetricZeroError, msg, i, j)

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def index_set(self) -> frozenset[int]:
        return frozenset(range(1, self.size + 1))

    def entry(self, i: int, j: int) -> int:
        """Returns a_ij = <alpha_j, alpha_i^vee> (1-based)."""
        return self.entries[i - 1][j - 1]

    def submatrix(self, subset: Iterable[int]) -> tuple[tuple[int, ...], ...]:
        indices = sorted(subset)
        return tuple(tuple(self.entry(i, j) for j in indices) for i in indices)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GeneralizedCartanMatrix):
            return self.entries == other.entries
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(entries={[list(r) for r in self.entries]!r}, rank={self.rank})"


def validate_gcm(entries: Sequence[Sequence[int]]) -> GeneralizedCartanMatrix:
    """Validates an integer matrix and returns it as a GeneralizedCartanMatrix,
    with its rank computed over the rationals.
    """
    return GeneralizedCartanMatrix(entries)


def dynkin_components(gcm: GeneralizedCartanMatrix, subset: Iterable[int]) -> list[frozenset[int]]:
    """Splits `subset` into the connected components of its Dynkin diagram
    (i ~ j iff a_ij != 0), ordered by least index.
    """
    remaining = sorted(set(subset))
    components = []
    while remaining:
        component = {remaining[0]}
        frontier = [remaining[0]]
        while frontier:
            i = frontier.pop()
            for j in remaining:
                if j not in component and gcm.entry(i, j) != 0:
                    component.add(j)
                    frontier.append(j)
        components.append(frozenset(component))
        remaining = [i for i in remaining if i not in component]
    return components


def are_separated(gcm: GeneralizedCartanMatrix, first: Iterable[int], second: Iterable[int]) -> bool:
    second = list(second)
    return all(gcm.entry(i, j) == 0 for i in first for j in second)


class _MinorTable:
    # Principal minors of one connected component, computed once.

    def __init__(self, gcm: GeneralizedCartanMatrix, component: frozenset[int]) -> None:
        self.minors: dict[frozenset[int], int] = {}
        indices = sorted(component)
        for size in range(1, len(indices) + 1):
            for subset in combinations(indices, size):
                self.minors[frozenset(subset)] = linalg.determinant(gcm.submatrix(subset))

    def _proper_positive(self, subset: frozenset[int]) -> bool:
        return all(value > 0 for key, value in self.minors.items() if key < subset)

    def kind(self, subset: frozenset[int]) -> CartanType:
        if self._proper_positive(subset):
            if self.minors[subset] > 0:
                return CartanType.FINITE
            if self.minors[subset] == 0:
                return CartanType.AFFINE
        return CartanType.INDEFINITE


def _classify_component(gcm: GeneralizedCartanMatrix, component: frozenset[int]) -> ComponentType:
    table = _MinorTable(gcm, component)
    kind = table.kind(component)
    if kind != CartanType.INDEFINITE:
        return ComponentType(component, kind)

    strongly = True
    hyperbolic = True
    for size in range(1, len(component)):
        for subset in combinations(sorted(component), size):
            sub = frozenset(subset)
            if len(dynkin_components(gcm, sub)) != 1:
                continue
            sub_kind = table.kind(sub)
            if sub_kind != CartanType.FINITE:
                strongly = False
            if sub_kind == CartanType.INDEFINITE:
                hyperbolic = False
    return ComponentType(component, kind, strongly_hyperbolic=strongly, hyperbolic=hyperbolic)


def classify_type(gcm: GeneralizedCartanMatrix, subset: Iterable[int] | None = None) -> list[ComponentType]:
    """Classifies every indecomposable component of A (or of the principal
    submatrix on `subset`) by the principal-minor criterion.

    A component is of finite type iff all its principal minors are positive,
    of affine type iff its determinant is 0 and all proper principal minors
    are positive, and of indefinite type otherwise.
    """
    index_set = gcm.index_set if subset is None else frozenset(subset)
    return [_classify_component(gcm, c) for c in dynkin_components(gcm, index_set)]


def is_finite_type(gcm: GeneralizedCartanMatrix, subset: Iterable[int]) -> bool:
    """True iff every Dynkin component of `subset` is of finite type (true for the empty set)."""
    return all(t.kind == CartanType.FINITE for t in classify_type(gcm, subset))


class Realization:
    """An integer coordinate frame for roots and weights.

    Weights are vectors of length `dim = 2m - l` whose i-th entry is the pairing
    with the i-th coroot, the last m - l coroots being the ones added by the
    completion.  `root_coords[j - 1]` is the weight vector of the simple root
    alpha_j: (a_1j, ..., a_mj, D_1j, ..., D_(m-l)j).
    """

    def __init__(self, gcm: GeneralizedCartanMatrix, completion: Sequence[Sequence[int]]) -> None:
        self.gcm = gcm
        self.completion: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in completion)
        self.dim = gcm.size + len(self.completion)
        self.root_coords: tuple[tuple[int, ...], ...] = tuple(
            tuple(gcm.entry(i, j) for i in range(1, gcm.size + 1)) + tuple(row[j - 1] for row in self.completion)
            for j in range(1, gcm.size + 1)
        )

    def check_weight(self, weight: Sequence[Number]) -> WeightVector:
        if len(weight) != self.dim:
            msg = "Weight %r has length %d, the realization has dimension %d" % (list(weight), len(weight), self.dim)
            logging.getLogger(__name__).warning(msg)
            raise RealizationError(msg)
        return tuple(weight)

    def pairing(self, weight: Sequence[Number], i: int) -> Number:
        """<weight, alpha_i^vee>."""
        return weight[i - 1]

    def reflect_weight(self, weight: WeightVector, i: int) -> WeightVector:
        """r_i(weight) = weight - <weight, alpha_i^vee> alpha_i."""
        c = weight[i - 1]
        if c == 0:
            return weight
        return tuple(x - c * r for x, r in zip(weight, self.root_coords[i - 1]))

    def root_to_weight(self, coeffs: Sequence[Number]) -> WeightVector:
        """Weight coordinates of sum_j coeffs[j-1] alpha_j."""
        return tuple(
            sum((c * root[k] for c, root in zip(coeffs, self.root_coords)), 0) for k in range(self.dim)
        )

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Realization):
            return self.gcm == other.gcm and self.completion == other.completion
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.gcm, self.completion))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(dim={self.dim}, completion={[list(r) for r in self.completion]!r})"


def complete_realization(
    gcm: GeneralizedCartanMatrix, completion: Sequence[Sequence[int]] | None = None
) -> Realization:
    """Builds the realization of A.

    Without an explicit completion, the extra rows are the primitive integer
    kernel basis of A read off its reduced row echelon form; together with the
    rows of A they span Q^m, and the same A always gives the same rows.

    Args:
        gcm: The generalized Cartan matrix.
        completion: Optional (m - l) x m integer matrix D to use instead.

    Raises:
        CompletionError: If the given completion has the wrong shape, is not
            integral, or does not make the simple roots independent.
    """
    logger = logging.getLogger(__name__)
    m = gcm.size
    missing = m - gcm.rank
    if completion is None:
        rows: list[tuple[int, ...]] = linalg.kernel_basis(gcm.entries, m)
    else:
        rows = []
        for row in completion:
            if not isinstance(row, (list, tuple)) or len(row) != m:
                msg = "Completion rows must have %d entries, got %r" % (m, row)
                logger.warning(msg)
                raise CompletionError(msg)
            if any(isinstance(x, bool) or not isinstance(x, int) for x in row):
                msg = "Completion rows must be integral, got %r" % (row,)
                logger.warning(msg)
                raise CompletionError(msg)
            rows.append(tuple(row))

    if len(rows) != missing:
        msg = "A matrix of rank %d and size %d needs %d completion rows, got %d" % (gcm.rank, m, missing, len(rows))
        logger.warning(msg)
        raise CompletionError(msg)
    if linalg.rank(list(gcm.entries) + rows) != m:
        msg = "Completion %r does not make the simple roots linearly independent" % (rows,)
        logger.warning(msg)
        raise CompletionError(msg)

    logger.debug("Realization of dimension %d with completion %r", m + missing, rows)
    return Realization(gcm, rows)


def q_sat_member(realization: Realization, weight: Sequence[Number]) -> bool:
    """True iff some positive multiple of `weight` lies in the root lattice Q,
    i.e. iff the weight is in the rational span of the simple roots.
    """
    weight = realization.check_weight(weight)
    return linalg.solve(realization.root_coords, weight) is not None


def point_type(realization: Realization, weight: Sequence[Number]) -> tuple[frozenset[int], frozenset[int]]:
    """Splits the simple roots into J0 = {i : <weight, alpha_i^vee> = 0} and its complement J>."""
    zero = frozenset(i for i in realization.gcm.index_set if weight[i - 1] == 0)
    return zero, realization.gcm.index_set - zero
