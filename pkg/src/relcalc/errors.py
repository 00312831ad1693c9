"""Exception hierarchy.

Two families exist so the CLI can map failures onto exit codes:
``InputError`` (bad or inconsistent input, exit 2) and ``ComputationError``
(valid input whose evaluation fails, exit 1).
"""

from __future__ import annotations


class RelcalcError(ValueError):
    """Base class for every error raised by this package."""


class InputError(RelcalcError):
    """Input violates a schema or a domain invariant."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None):
        self.path = path
        self.line = line
        where = []
        if path:
            where.append(f"at {path}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class ComputationError(RelcalcError):
    """Evaluation of otherwise well-formed input failed."""


# -- input side ------------------------------------------------------------

class IoError(InputError):
    pass


class SchemaError(InputError):
    pass


class ValidationError(InputError):
    pass


class SumNotOne(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class InvalidScale(ValidationError):
    pass


class UnknownProperty(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class NegativeMass(ValidationError):
    pass


class EmptySetMass(ValidationError):
    pass


class UnknownHypothesis(ValidationError):
    pass


class FrameMismatch(ValidationError):
    pass


class NotAdditive(ValidationError):
    pass


class WholeFrame(ValidationError):
    pass


class BadPartition(ValidationError):
    pass


class ImpossiblePosterior(ValidationError):
    pass


# -- computation side ------------------------------------------------------

class MassOverflow(ComputationError):
    pass


class OutOfScale(ComputationError):
    pass


class TotalConflict(ComputationError):
    pass


class ZeroMarginal(ComputationError):
    pass
