"""Sign + log-magnitude scalars.

Energy splittings in the high-barrier regime scale like (zeta/2)^N and reach
10^-700 and below for a few hundred atoms, while the matching tunneling
periods overflow the other way.  LogScalar keeps the sign and the natural log
of the magnitude, so products, ratios and powers stay exact over the whole
range.  Conversion back to an ordinary float refuses to silently under- or
overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# exp(x) is finite for |x| < ~709.78; stay a little inside
_FLOAT_LN_LIMIT = 700.0

_LN10 = math.log(10.0)


@dataclass(frozen=True)
class LogScalar:
    """A real number stored as sign and ln|value|."""

    sign: int
    ln_magnitude: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.sign != 0 and not math.isfinite(self.ln_magnitude):
            raise ValueError("ln_magnitude must be finite for nonzero values")

    # -- constructors -------------------------------------------------
    @classmethod
    def from_float(cls, x: float) -> "LogScalar":
        if x == 0.0:
            return cls(0, 0.0)
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    @classmethod
    def from_ln(cls, ln_magnitude: float, sign: int = 1) -> "LogScalar":
        if sign == 0:
            return cls(0, 0.0)
        return cls(sign, ln_magnitude)

    @classmethod
    def zero(cls) -> "LogScalar":
        return cls(0, 0.0)

    # -- conversions ---------------------------------------------------
    def to_float(self) -> float:
        """Convert to float; refuses when exp() would over/underflow."""
        if self.sign == 0:
            return 0.0
        if abs(self.ln_magnitude) >= _FLOAT_LN_LIMIT:
            raise OverflowError(
                f"value ~ {self!s} is outside float range (|ln| >= {_FLOAT_LN_LIMIT})"
            )
        return self.sign * math.exp(self.ln_magnitude)

    @property
    def log10(self) -> float:
        """log10 of the magnitude (sign ignored; zero is -inf)."""
        if self.sign == 0:
            return -math.inf
        return self.ln_magnitude / _LN10

    def __float__(self) -> float:
        return self.to_float()

    # -- arithmetic ----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "LogScalar":
        if isinstance(other, LogScalar):
            return other
        if isinstance(other, (int, float)):
            return LogScalar.from_float(float(other))
        return NotImplemented

    def __mul__(self, other) -> "LogScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.sign == 0 or o.sign == 0:
            return LogScalar.zero()
        return LogScalar(self.sign * o.sign, self.ln_magnitude + o.ln_magnitude)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LogScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.sign == 0:
            raise ZeroDivisionError("LogScalar division by zero")
        if self.sign == 0:
            return LogScalar.zero()
        return LogScalar(self.sign * o.sign, self.ln_magnitude - o.ln_magnitude)

    def __rtruediv__(self, other) -> "LogScalar":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, exponent: float) -> "LogScalar":
        if self.sign == 0:
            if exponent <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return LogScalar.zero()
        if self.sign < 0:
            if float(exponent) != int(exponent):
                raise ValueError("negative base with non-integer exponent")
            sign = -1 if int(exponent) % 2 else 1
        else:
            sign = 1
        return LogScalar(sign, self.ln_magnitude * float(exponent))

    def __add__(self, other) -> "LogScalar":
        """Same-sign addition via log-sum-exp; mixed signs are refused
        (cancellation destroys log-domain accuracy)."""
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.sign == 0:
            return o
        if o.sign == 0:
            return self
        if self.sign != o.sign:
            raise ValueError("mixed-sign LogScalar addition is not supported")
        hi = max(self.ln_magnitude, o.ln_magnitude)
        lo = min(self.ln_magnitude, o.ln_magnitude)
        return LogScalar(self.sign, hi + math.log1p(math.exp(lo - hi)))

    __radd__ = __add__

    def __neg__(self) -> "LogScalar":
        return LogScalar(-self.sign, self.ln_magnitude)

    def __abs__(self) -> "LogScalar":
        return LogScalar(abs(self.sign), self.ln_magnitude)

    # -- ordering --------------------------------------------------------
    def _key(self):
        # sign-major ordering; magnitude flips for negatives
        return (self.sign, self.sign * self.ln_magnitude)

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() < o._key()

    def __le__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() <= o._key()

    def __gt__(self, other) -> bool:
        return not self.__le__(other)

    def __ge__(self, other) -> bool:
        return not self.__lt__(other)

    # -- display -----------------------------------------------------------
    def __str__(self) -> str:
        if self.sign == 0:
            return "0"
        exp10 = math.floor(self.log10)
        mant = 10.0 ** (self.log10 - exp10)
        # rounding can push the mantissa to 10.0
        if mant >= 10.0 - 1e-12:
            mant /= 10.0
            exp10 += 1
        s = "-" if self.sign < 0 else ""
        return f"{s}{mant:.4f}e{exp10:+d}"

    def __repr__(self) -> str:
        return f"LogScalar({self!s})"
