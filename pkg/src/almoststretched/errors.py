"""Error types shared across the package.

Every exception carries a stable machine-readable ``code`` so the CLI can map
failures to exit codes and JSON error objects without string matching.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class; ``code`` is the wire-visible error identifier."""

    code = "E_INTERNAL"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class AmbientError(AlgebraError):
    """Mixed variable count or truncation order between operands."""

    code = "E_AMBIENT"


class NotUnitError(AlgebraError):
    """Operation requires a series with nonzero constant term."""

    code = "E_NOT_UNIT"


class RootMismatchError(AlgebraError):
    """No rational root with the required constant term exists."""

    code = "E_ROOT_MISMATCH"


class BadSubstitutionError(AlgebraError):
    """Substitution targets do not define an automorphism."""

    code = "E_BAD_SUBST"


class ParamError(AlgebraError):
    """Invalid (h, s, t) parameters or malformed structured input."""

    code = "E_PARAMS"


class ParseError(AlgebraError):
    """Expression syntax error; ``position`` is a 0-based offset."""

    code = "E_PARSE"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class OutOfTheoremError(AlgebraError):
    """Classification requested outside the supported s >= 2t-1 range."""

    code = "E_OUT_OF_THEOREM"


class GuardError(AlgebraError):
    """A pipeline step was called with its guard condition violated."""

    code = "E_GUARD"


class NotTypeError(AlgebraError):
    """Constructed ideal fails the type-(s,t) sanity cross-check."""

    code = "E_NOT_TYPE"


class InternalCheckError(AlgebraError):
    """Self-verification failed; indicates a bug, never user input."""

    code = "E_INTERNAL"
