"""Holographic entropy limits applied to entanglement distribution and CV protocols."""

from .errors import (
    ConsistencyError,
    DomainError,
    FannesPreconditionError,
    HoloError,
    TruncationError,
    VacuousBoundError,
    ValidityError,
)
from .units import LogScalar, PhysicalConstants, codata_constants, to_planck_length

__version__ = "0.1.0"
