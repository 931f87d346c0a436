from __future__ import annotations


class RennerError(ValueError):
    """Base error class for this package."""


class CartanMatrixError(RennerError):
    """This exception (or a subclass) is raised when an integer matrix is not a
    generalized Cartan matrix.
    """

    #: The 1-based row and column of the offending entry.  They will be -1 if
    #: the problem is not attached to a single entry (for example a wrong shape).
    row = -1
    column = -1


class DiagonalNotTwoError(CartanMatrixError):
    """A diagonal entry differs from 2."""


class PositiveOffDiagonalError(CartanMatrixError):
    """An off-diagonal entry is positive."""


class AsymmetricZeroError(CartanMatrixError):
    """The zero pattern is not symmetric: a_ij = 0 but a_ji != 0."""


class RealizationError(RennerError):
    """Raised for a completion that does not give a realization, or a weight
    vector whose length does not match the realization.
    """


class CompletionError(RealizationError):
    """The given completion rows have the wrong shape, are not integral, or do
    not make the simple roots independent.
    """


class FaceError(RennerError):
    """Base class for errors raised by the face calculus of an orbit hull."""


class NotMuConnectedError(FaceError):
    """A subset was required to be mu-connected, and it is not."""


class DominanceViolatedError(FaceError):
    """A point that must lie in the closed fundamental chamber does not."""


class NotInChamberHullError(FaceError):
    """A dominant point does not lie in the orbit hull."""


class MonoidError(RennerError):
    """Base class for Renner monoid errors."""


class PiNotMuConnectedError(MonoidError):
    """The whole simple system is not mu-connected, so the monoid is not built."""


class NotIdempotentError(MonoidError):
    """An operation that needs an idempotent got some other element."""


class WeightError(RennerError):
    """Base class for weight system errors."""


class NotARealRootError(WeightError):
    """The given root-lattice vector is not a real root."""


class NotDominantIntegralError(WeightError):
    """The highest weight is not dominant integral."""


class OracleError(RennerError):
    """Base class for errors of the brute-force geometric oracle."""


class TooLargeError(OracleError):
    """The point set is too large (or too high dimensional) for the subset scan."""


class FiniteTypeRequiredError(OracleError):
    """The orbit to compare is infinite.

    `suggestions` lists mu-connected subsets whose parabolic slice is of finite
    type, which can be compared instead.
    """

    suggestions: tuple[tuple[int, ...], ...] = ()


class ParseError(RennerError):
    """This exception (or a subclass) is raised when an input document or an
    element description cannot be parsed.
    """

    #: The 1-based line and column in the input text where the error was
    #: detected.  They will be -1 if not specified.
    line = -1
    column = -1


class ProblemParseError(ParseError):
    """The input problem document is malformed."""


class ElementParseError(ParseError):
    """A Renner monoid element (or a word) could not be parsed."""
