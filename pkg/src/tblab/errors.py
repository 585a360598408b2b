"""Exception hierarchy shared across the library.

Every error raised on purpose derives from TblabError so callers (and the
CLI) can distinguish usage/hypothesis problems from genuine bugs.
"""


class TblabError(Exception):
    """Base class for all library errors."""


class InvalidModulus(TblabError):
    """Modulus is not a positive integer."""


class PoleError(TblabError):
    """Evaluation requested at a pole of the function."""


class DomainError(TblabError):
    """Argument outside the mathematical domain of the operation."""


class DivergenceError(TblabError):
    """The requested series does not converge for these parameters."""


class ConvergenceError(TblabError):
    """Could not certify the requested tolerance within the term budget."""


class ExcludedParameter(TblabError):
    """Parameter lands on (or too close to) an excluded value, e.g. a
    positive integer where an identity has a removable pole."""


class HypothesisError(TblabError):
    """A structural hypothesis of the selected identity is violated.

    The message names the violated clause verbatim.
    """


class QuadratureError(TblabError):
    """Adaptive quadrature exceeded its subdivision budget."""
