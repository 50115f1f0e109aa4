"""Exception hierarchy shared by all modules."""


class HoloError(Exception):
    """Base class for every error raised by this package."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class DomainError(HoloError, ValueError):
    """An input lies outside the domain of the formula."""

    kind = "domain_error"


class ConsistencyError(HoloError, ArithmeticError):
    """A quantity that must hold by construction did not (numeric fault)."""

    kind = "consistency_error"


class ValidityError(HoloError):
    """A bound was evaluated outside the regime where it holds."""

    kind = "validity_error"


class FannesPreconditionError(ValidityError):
    """The perturbation parameter exceeds 1/2, so the continuity inequality fails."""

    kind = "fannes_precondition"


class VacuousBoundError(ValidityError):
    """The rate-bound denominator 1 - 8*eps is not positive."""

    kind = "vacuous_bound"


class TruncationError(HoloError):
    """Fock truncation too small for the requested accuracy."""

    kind = "truncation_error"

    def __init__(self, message: str, suggested_dim: int | None = None):
        super().__init__(message)
        self.suggested_dim = suggested_dim

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["suggested_dim"] = self.suggested_dim
        return d
