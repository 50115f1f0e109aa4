"""Physical constants, Planck-unit conversion, and a positive log-domain scalar.

Constants are CODATA 2018 (h, c and k are exact in the 2019 SI; G is the
CODATA 2018 recommended value). Derived Planck quantities are computed from
them rather than stored as literals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "LogScalar",
    "codata_constants",
    "to_planck_length",
    "LN2",
    "LN_FLOAT_MAX",
]

LN2 = math.log(2.0)
# ln(sys.float_info.max); exp() above this overflows
LN_FLOAT_MAX = math.log(1.7976931348623157e308)

_PLANCK_H = 6.62607015e-34  # J s, exact
_C = 299792458.0  # m/s, exact
_K_B = 1.380649e-23  # J/K, exact
_G = 6.67430e-11  # m^3 kg^-1 s^-2, CODATA 2018


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants plus the Planck length and mass derived from them."""

    hbar: float
    c: float
    k_boltzmann: float
    G: float
    l_planck: float = field(init=False)
    m_planck: float = field(init=False)

    def __post_init__(self):
        for name in ("hbar", "c", "k_boltzmann", "G"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be positive")
        object.__setattr__(self, "l_planck", math.sqrt(self.G * self.hbar / self.c**3))
        object.__setattr__(self, "m_planck", math.sqrt(self.hbar * self.c / self.G))


@lru_cache(maxsize=None)
def codata_constants() -> PhysicalConstants:
    return PhysicalConstants(
        hbar=_PLANCK_H / (2.0 * math.pi), c=_C, k_boltzmann=_K_B, G=_G
    )


def to_planck_length(length_m: float, consts: PhysicalConstants | None = None) -> float:
    """Express a length in units of the Planck length."""
    if not length_m > 0:
        raise DomainError(f"length must be positive, got {length_m!r}")
    consts = consts or codata_constants()
    return length_m / consts.l_planck


@dataclass(frozen=True, order=True)
class LogScalar:
    """A strictly positive quantity stored by its natural logarithm.

    Values such as exp(pi R_p^2) overflow a double for R_p above ~15; keeping
    the logarithm lets the arithmetic continue. ``ln`` may be ``-inf`` to
    represent an exact zero reached by underflow.
    """

    ln: float

    def __post_init__(self):
        object.__setattr__(self, "ln", float(self.ln))
        if math.isnan(self.ln) or self.ln == math.inf:
            raise DomainError(f"invalid log value {self.ln!r}")

    @classmethod
    def from_linear(cls, x: float) -> LogScalar:
        if not x > 0:
            raise DomainError(f"LogScalar holds positive values only, got {x!r}")
        return cls(math.log(x))

    @property
    def representable(self) -> bool:
        return self.ln <= LN_FLOAT_MAX

    def linear(self) -> float | None:
        """Linear value, or None when it would overflow a double."""
        if not self.representable:
            return None
        return math.exp(self.ln)

    def __float__(self) -> float:
        return math.inf if not self.representable else math.exp(self.ln)

    def __mul__(self, other: LogScalar | float) -> LogScalar:
        return LogScalar(self.ln + _as_log(other).ln)

    __rmul__ = __mul__

    def __truediv__(self, other: LogScalar | float) -> LogScalar:
        return LogScalar(self.ln - _as_log(other).ln)

    def __rtruediv__(self, other: float) -> LogScalar:
        return LogScalar(_as_log(other).ln - self.ln)

    def __add__(self, other: LogScalar | float) -> LogScalar:
        return LogScalar(float(_logaddexp(self.ln, _as_log(other).ln)))

    __radd__ = __add__

    def __pow__(self, p: float) -> LogScalar:
        return LogScalar(self.ln * p)

    def to_json(self) -> dict:
        return {"ln": self.ln, "linear": self.linear()}


def _as_log(x: LogScalar | float) -> LogScalar:
    return x if isinstance(x, LogScalar) else LogScalar.from_linear(float(x))


def _logaddexp(a: float, b: float) -> float:
    hi, lo = (a, b) if a >= b else (b, a)
    if lo == -math.inf:
        return hi
    return hi + math.log1p(math.exp(lo - hi))
