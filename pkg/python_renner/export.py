"""JSON and DOT encoders, and the parser for the Renner element syntax.

An element w e(sigma F_I) is written as the JSON object
``{"unit": [1, 2], "sigma": [2], "I": [1]}``; words are lists of generator
indices and ``"I": null`` stands for the empty face (the zero of the monoid).
Several elements are separated by ``;``.
"""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from typing import TYPE_CHECKING

from .exceptions import ElementParseError
from .faces import format_subset

if TYPE_CHECKING:  # pragma: no cover
    from typing import Any, Callable, Iterable, Sequence, TypeVar, Union

    from .coxeter import WeylElement
    from .faces import DominantPoint, Face
    from .renner import CrossSectionEntry, RennerElement, RennerMonoid
    from .weights import TruncatedWeightSet

    Number = Union[int, Fraction]
    T = TypeVar("T")


def number_to_json(value: Number) -> int | str:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else str(value)


def point_to_json(point: Sequence[Number]) -> list[int | str]:
    return [number_to_json(x) for x in point]


def word_to_json(w: WeylElement) -> list[int]:
    return list(w.word)


def subset_to_json(subset: Iterable[int]) -> list[int]:
    return sorted(subset)


# Faces.


def face_to_json(face: Face) -> dict[str, Any]:
    return {
        "sigma": word_to_json(face.sigma),
        "I": None if face.empty else subset_to_json(face.subset),
        "dim": face.dimension,
    }


def faces_to_json(faces: Iterable[Face]) -> list[dict[str, Any]]:
    return [face_to_json(face) for face in faces]


def covers(items: Sequence[T], leq: Callable[[T, T], bool]) -> list[tuple[int, int]]:
    """The cover relations (i, j) of a finite partial order: items[i] < items[j]
    with nothing strictly in between.
    """
    n = len(items)
    below = [[i != j and leq(items[i], items[j]) for j in range(n)] for i in range(n)]
    result = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                result.append((i, j))
    return result


def _dot(name: str, labels: Sequence[str], edges: Iterable[tuple[int, int]]) -> str:
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for i, label in enumerate(labels):
        lines.append('  n%d [label="%s"];' % (i, label))
    for i, j in edges:
        lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"


def faces_to_dot(point: DominantPoint, faces: Sequence[Face]) -> str:
    """The Hasse diagram of the given faces, labelled "sigma|I"."""
    return _dot("faces", [face.label() for face in faces], covers(faces, point.face_leq))


# Renner elements.


def element_to_json(x: RennerElement) -> dict[str, Any]:
    return {
        "unit": word_to_json(x.unit),
        "sigma": word_to_json(x.face.sigma),
        "I": None if x.face.empty else subset_to_json(x.face.subset),
    }


def _element_error(msg: str, column: int = -1) -> ElementParseError:
    if column > 0:
        msg = "column %d: %s" % (column, msg)
    logging.getLogger(__name__).warning(msg)
    error = ElementParseError(msg)
    error.column = column
    return error


def parse_word(value: object, rank: int, column: int = -1) -> tuple[int, ...]:
    if not isinstance(value, list):
        raise _element_error("a word must be a list of generators, got %r" % (value,), column)
    for s in value:
        if isinstance(s, bool) or not isinstance(s, int) or not 1 <= s <= rank:
            raise _element_error("%r is not a generator (1..%d)" % (s, rank), column)
    return tuple(value)


def element_from_json(value: object, monoid: RennerMonoid, column: int = -1) -> RennerElement:
    """Builds an element from a decoded element object; the face is canonicalized."""
    if not isinstance(value, dict):
        raise _element_error("an element must be an object", column)
    unknown = set(value) - {"unit", "sigma", "I"}
    if unknown:
        raise _element_error("unknown keys %r" % sorted(unknown), column)
    group = monoid.group
    unit = group.element(parse_word(value.get("unit", []), group.rank, column))
    sigma = group.element(parse_word(value.get("sigma", []), group.rank, column))
    if "I" not in value:
        raise _element_error("missing key 'I'", column)
    if value["I"] is None:
        return monoid.zero
    subset = parse_word(value["I"], group.rank, column)
    face = monoid.point.canonicalize_face(sigma, subset)
    return monoid.make_element(unit, face)


def parse_elements(text: str, monoid: RennerMonoid) -> list[RennerElement]:
    """Parses ``x;y;...`` where each part is an element object.

    Raises:
        ElementParseError: With the column (1-based, in `text`) of the bad part.
    """
    elements = []
    offset = 0
    for part in text.split(";"):
        column = offset + len(part) - len(part.lstrip()) + 1
        try:
            value = json.loads(part)
        except json.JSONDecodeError as e:
            raise _element_error(e.msg, offset + e.colno) from e
        elements.append(element_from_json(value, monoid, column))
        offset += len(part) + 1
    return elements


def elements_to_json(elements: Iterable[RennerElement]) -> list[dict[str, Any]]:
    return [element_to_json(x) for x in elements]


def table_to_json(elements: Sequence[RennerElement], table: Sequence[Sequence[int | None]]) -> dict[str, Any]:
    return {"elements": elements_to_json(elements), "table": [list(row) for row in table]}


# The cross-section lattice.


def lattice_to_json(entries: Iterable[CrossSectionEntry]) -> list[dict[str, Any]]:
    return [
        {
            "label": entry.label(),
            "I": None if entry.is_zero else subset_to_json(entry.e.subset),
            "lambda": subset_to_json(entry.lambda_),
            "lambda_star": subset_to_json(entry.lambda_star),
            "lambda_sub": subset_to_json(entry.lambda_sub),
        }
        for entry in entries
    ]


def lattice_to_text(entries: Iterable[CrossSectionEntry]) -> str:
    rows = [("entry", "lambda", "lambda^*", "lambda_*")]
    for entry in entries:
        rows.append(
            (
                entry.label(),
                format_subset(entry.lambda_),
                format_subset(entry.lambda_star),
                format_subset(entry.lambda_sub),
            )
        )
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows) + "\n"


def idempotents_to_dot(monoid: RennerMonoid, idempotents: Sequence[RennerElement]) -> str:
    """The Hasse diagram of the idempotent order e <= f iff ef = e."""
    return _dot("idempotents", [e.face.label() for e in idempotents], covers(idempotents, monoid.idempotents_leq))


# Weights.


def weights_to_json(weights: TruncatedWeightSet) -> list[list[int]]:
    return [list(k) for k in weights.weights]


def dumps(value: object) -> str:
    return json.dumps(value, indent=2, sort_keys=False) + "\n"
