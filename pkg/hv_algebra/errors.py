"""Exception hierarchy for hv-algebra.

Every error is a ``ValueError`` so command handlers can keep catching
``ValueError`` the same way they catch pydantic validation failures.
"""

from typing import Any


class HVError(ValueError):
    """Base class for all library errors."""

    error_type = "hv_error"

    def __init__(self, message: str, *, detail: Any | None = None) -> None:
        super().__init__(message)
        self.detail = detail


class FieldError(HVError):
    error_type = "field_error"


class GroupMismatchError(HVError):
    error_type = "group_mismatch"


class DegeneratePairingError(HVError):
    error_type = "degenerate_pairing"


class ArityError(HVError):
    error_type = "arity_error"


class TagError(HVError):
    error_type = "tag_error"


class PowerCapError(HVError):
    error_type = "power_cap"


class EpsilonError(HVError):
    error_type = "epsilon_error"


class NotACocycleError(HVError):
    error_type = "not_a_cocycle"


class NotADerivationError(HVError):
    error_type = "not_a_derivation"


class NotAnAutomorphismError(HVError):
    error_type = "not_an_automorphism"


class UnboundedSupportError(HVError):
    error_type = "unbounded_support"


class ExpressionSyntaxError(HVError):
    """Parse failure; ``offset`` is the 1-based character column of the failure."""

    error_type = "syntax_error"

    def __init__(self, message: str, *, offset: int, text: str) -> None:
        super().__init__(f"{message} at offset {offset}", detail={"offset": offset, "text": text})
        self.offset = offset
        self.text = text


class CharacterError(HVError):
    error_type = "character_error"
