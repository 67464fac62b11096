"""Exception types raised across the package."""

from __future__ import annotations


class DimensionError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class ContractError(ValueError):
    """An input violates a precondition (e.g. a non-Hermitian generator)."""


class ValidationError(ValueError):
    """A constructed value fails its structural invariants."""


class NormalizationError(ValidationError):
    """Probability weights do not sum to one."""


class StateValidationError(ValidationError):
    """A density matrix is not Hermitian, unit trace and positive."""

    def __init__(self, message: str, block: int | None = None):
        super().__init__(message)
        self.block = block


class ClassicalityError(ValidationError):
    """An off-diagonal pointer block is nonzero, i.e. the apparatus carries coherences."""

    def __init__(self, block: tuple[int, int], magnitude: float):
        super().__init__(
            f"coherence between pointer states {block[0]} and {block[1]}: "
            f"max |block| = {magnitude:.3e}"
        )
        self.block = block
        self.magnitude = magnitude


class ImpossibleOutcomeError(ValueError):
    """Requested outcome has probability zero."""


class UndefinedConditionalError(ValueError):
    """The conditional system state of a zero-weight pointer is not defined."""


class CompatibilityError(ValueError):
    """Non-commuting propositions were combined with a Boolean connective."""


class ConfigError(ValueError):
    """A scenario configuration is malformed or inconsistent."""
