from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import TYPE_CHECKING

from .cartan import complete_realization, validate_gcm
from .coxeter import WeylGroup
from .exceptions import CartanMatrixError, CompletionError, ProblemParseError, RennerError
from .faces import DominantPoint
from .renner import RennerMonoid
from .weights import TruncatedWeightSet

if TYPE_CHECKING:  # pragma: no cover
    from typing import Any, Mapping, Sequence, TypedDict, Union

    Number = Union[int, Fraction]

    class SolverConfig(TypedDict):
        ORBIT_CAP: int
        EDGE_CAP: int
        FACE_BOUND: int
        UNIT_BOUND: int
        SIGMA_BOUND: int
        WEIGHT_DEPTH: int
        ROOT_HEIGHT: int
        ORACLE_MAX_POINTS: int
        ORACLE_MAX_DIM: int
        RANDOM_SAMPLES: int
        RANDOM_SEED: int


#: Keys a problem document may contain.
DOCUMENT_KEYS = ("cartan", "mu", "completion", "name")


class ProblemSpec:
    """A validated problem: a generalized Cartan matrix, a realization and a point mu,
    plus the limits used by the enumerations and checks.

    The engine objects (Weyl group, dominant point, Renner monoid) are created on
    first use and then shared.

    Args:
        cartan: The generalized Cartan matrix.
        mu: The point, in the weight coordinates of the realization.
        completion: Optional extension rows for the realization; see
            :func:`complete_realization`.
        name: An optional label, used in reports.
        config: Configuration to use.  The default values are taken from the DEFAULT_CONFIG value, and then any
            keys present in this dictionary will overwrite the default values.
    """

    #: This is the default configuration for a problem.
    DEFAULT_CONFIG: SolverConfig = {
        "ORBIT_CAP": 100000,
        "EDGE_CAP": 1000,
        "FACE_BOUND": 4,
        "UNIT_BOUND": 4,
        "SIGMA_BOUND": 4,
        "WEIGHT_DEPTH": 10,
        "ROOT_HEIGHT": 4,
        "ORACLE_MAX_POINTS": 200,
        "ORACLE_MAX_DIM": 4,
        "RANDOM_SAMPLES": 10000,
        "RANDOM_SEED": 0,
    }

    def __init__(
        self,
        cartan: Sequence[Sequence[int]],
        mu: Sequence[Number],
        completion: Sequence[Sequence[int]] | None = None,
        name: str | None = None,
        config: Mapping[str, Any] = {},
    ) -> None:
        self.logger = logging.getLogger(__name__)
        self.gcm = validate_gcm(cartan)
        self.realization = complete_realization(self.gcm, completion)
        self.mu = self.realization.check_weight(mu)
        self.name = name

        self.config: SolverConfig = self.DEFAULT_CONFIG.copy()
        self.config.update(config)  # type: ignore[typeddict-item]

        self.group = WeylGroup(self.realization)
        self._point: DominantPoint | None = None
        self._monoid: RennerMonoid | None = None
        self.logger.debug("Problem %r: %r, mu = %r", name, self.gcm, self.mu)

    @property
    def point(self) -> DominantPoint:
        """The dominant point; raises DominanceViolatedError if mu is not dominant."""
        if self._point is None:
            self._point = DominantPoint(self.realization, self.mu, self.group)
        return self._point

    @property
    def monoid(self) -> RennerMonoid:
        """The Renner monoid; raises PiNotMuConnectedError if Pi is not mu-connected."""
        if self._monoid is None:
            self._monoid = RennerMonoid(self.point)
        return self._monoid

    def weights(self, depth: int | None = None) -> TruncatedWeightSet:
        return TruncatedWeightSet(self.point, self.config["WEIGHT_DEPTH"] if depth is None else depth)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r}, cartan={[list(r) for r in self.gcm.entries]!r})"


def parse_number(value: object) -> Number:
    """Reads an integer, or a rational written as the string "p/q"."""
    if isinstance(value, bool):
        raise ValueError("booleans are not numbers")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        number = Fraction(value)
        return number.numerator if number.denominator == 1 else number
    raise ValueError("expected an integer or a string 'p/q', got %r" % (value,))


def _matrix(value: object, key: str) -> list[list[int]]:
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise ValueError("%r must be a list of rows" % key)
    for row in value:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise ValueError("%r entries must be integers, got %r" % (key, entry))
    return [list(row) for row in value]


def _locate(text: str | None, key: str) -> tuple[int, int]:
    # 1-based line and column of the first occurrence of "key" in the source text.
    if text is None:
        return -1, -1
    offset = text.find('"%s"' % key)
    if offset < 0:
        return -1, -1
    line = text.count("\n", 0, offset) + 1
    return line, offset - (text.rfind("\n", 0, offset) + 1) + 1


def _error_key(error: RennerError) -> str:
    # The document key an engine error is reported at.
    if isinstance(error, CartanMatrixError):
        return "cartan"
    if isinstance(error, CompletionError):
        return "completion"
    return "mu"


def _parse_error(msg: str, line: int = -1, column: int = -1) -> ProblemParseError:
    if line > 0:
        msg = "line %d, column %d: %s" % (line, column, msg)
    logging.getLogger(__name__).warning(msg)
    error = ProblemParseError(msg)
    error.line = line
    error.column = column
    return error


def create_problem(document: Mapping[str, Any], config: Mapping[str, Any] = {}, text: str | None = None) -> ProblemSpec:
    """Builds a ProblemSpec from a decoded document
    ``{"cartan": [[...]], "mu": [...], "completion": [[...]]}``.

    Args:
        document: The decoded document.
        config: Configuration passed on to the ProblemSpec.
        text: The source text, used only to point at the offending key in errors.

    Raises:
        ProblemParseError: If the document is malformed; matrix and weight
            problems found by the engine are re-raised with the key's location.
    """
    if not isinstance(document, dict):
        raise _parse_error("the problem document must be an object")
    for key in document:
        if key not in DOCUMENT_KEYS:
            raise _parse_error("unknown key %r" % key, *_locate(text, key))
    for key in ("cartan", "mu"):
        if key not in document:
            raise _parse_error("missing key %r" % key)

    try:
        cartan = _matrix(document["cartan"], "cartan")
    except ValueError as e:
        raise _parse_error(str(e), *_locate(text, "cartan")) from e
    completion = None
    if document.get("completion") is not None:
        try:
            completion = _matrix(document["completion"], "completion")
        except ValueError as e:
            raise _parse_error(str(e), *_locate(text, "completion")) from e
    if not isinstance(document["mu"], list):
        raise _parse_error("'mu' must be a list", *_locate(text, "mu"))
    try:
        mu = [parse_number(x) for x in document["mu"]]
    except (ValueError, ZeroDivisionError) as e:
        raise _parse_error("bad entry in 'mu': %s" % e, *_locate(text, "mu")) from e
    name = document.get("name")

    try:
        return ProblemSpec(cartan, mu, completion, name if isinstance(name, str) else None, config)
    except RennerError as e:
        line, column = _locate(text, _error_key(e))
        if line > 0:
            e.args = ("line %d, column %d: %s" % (line, column, e),)
        raise


def parse_problem(text: str, config: Mapping[str, Any] = {}) -> ProblemSpec:
    """Parses a JSON problem document.

    Raises:
        ProblemParseError: On malformed JSON (with its line and column) or a malformed document.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise _parse_error(e.msg, e.lineno, e.colno) from e
    return create_problem(document, config, text)


def load_problem(path: str, config: Mapping[str, Any] = {}) -> ProblemSpec:
    with open(path, encoding="utf-8") as f:
        return parse_problem(f.read(), config)
