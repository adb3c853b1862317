"""Sign/log10-magnitude numbers for quantities far outside double range.

The recursively built jump-band families push band endpoints to
magnitudes like 10**-1200 within three levels, so everything the
construction touches is carried as a sign together with log10 of the
absolute value and only narrowed to a float when it happens to fit.
"""

from __future__ import annotations

import math

_LN10 = math.log(10.0)


class LogFloat:
    """A real number stored as (sign, log10 of absolute value)."""

    __slots__ = ("sign", "log10")

    def __init__(self, sign: int, log10: float):
        if sign == 0 or log10 == -math.inf:
            self.sign = 0
            self.log10 = -math.inf
        else:
            self.sign = 1 if sign > 0 else -1
            self.log10 = float(log10)

    @staticmethod
    def from_float(x: float) -> "LogFloat":
        if x == 0.0:
            return ZERO
        if math.isinf(x) or math.isnan(x):
            raise ValueError(f"cannot represent {x!r} as LogFloat")
        return LogFloat(1 if x > 0 else -1, math.log10(abs(x)))

    @staticmethod
    def exp10(log10: float) -> "LogFloat":
        """The positive number 10**log10."""
        return LogFloat(1, log10)

    def to_float(self) -> float:
        """Narrow to a float; overflows to +-inf, underflows to 0.0."""
        if self.sign == 0:
            return 0.0
        if self.log10 > 308.2:
            return math.inf * self.sign
        if self.log10 < -323.3:
            return 0.0
        return self.sign * 10.0 ** self.log10

    def ln(self) -> float:
        """Natural log of a positive LogFloat, as a float."""
        if self.sign <= 0:
            raise ValueError("ln of a non-positive LogFloat")
        return self.log10 * _LN10

    def is_zero(self) -> bool:
        return self.sign == 0

    def __abs__(self) -> "LogFloat":
        return LogFloat(abs(self.sign), self.log10)

    def __neg__(self) -> "LogFloat":
        return LogFloat(-self.sign, self.log10)

    def __mul__(self, other) -> "LogFloat":
        other = as_logfloat(other)
        if self.sign == 0 or other.sign == 0:
            return ZERO
        return LogFloat(self.sign * other.sign, self.log10 + other.log10)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LogFloat":
        other = as_logfloat(other)
        if other.sign == 0:
            raise ZeroDivisionError("LogFloat division by zero")
        if self.sign == 0:
            return ZERO
        return LogFloat(self.sign * other.sign, self.log10 - other.log10)

    def __rtruediv__(self, other) -> "LogFloat":
        return as_logfloat(other) / self

    def __add__(self, other) -> "LogFloat":
        other = as_logfloat(other)
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        if other.log10 > self.log10:
            big, small = other, self
        else:
            big, small = self, other
        r = 10.0 ** (small.log10 - big.log10)  # in [0, 1], may underflow
        m = 1.0 + (small.sign * big.sign) * r
        if m <= 0.0:
            # r == 1 with opposite signs: exact cancellation
            return ZERO
        return LogFloat(big.sign, big.log10 + math.log10(m))

    __radd__ = __add__

    def __sub__(self, other) -> "LogFloat":
        return self + (-as_logfloat(other))

    def __rsub__(self, other) -> "LogFloat":
        return as_logfloat(other) + (-self)

    def __pow__(self, p: float) -> "LogFloat":
        if self.sign == 0:
            if p <= 0:
                raise ZeroDivisionError("0 ** nonpositive power")
            return ZERO
        if self.sign < 0:
            if p != int(p):
                raise ValueError("fractional power of a negative LogFloat")
            sign = -1 if int(p) % 2 else 1
            return LogFloat(sign, self.log10 * p)
        return LogFloat(1, self.log10 * p)

    def _cmp(self, other) -> int:
        other = as_logfloat(other)
        if self.sign != other.sign:
            return 1 if self.sign > other.sign else -1
        if self.sign == 0:
            return 0
        if self.log10 == other.log10:
            return 0
        bigger = self.log10 > other.log10
        if self.sign > 0:
            return 1 if bigger else -1
        return -1 if bigger else 1

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.sign, self.log10))

    def __repr__(self):
        if self.sign == 0:
            return "LogFloat(0)"
        return f"LogFloat({'+' if self.sign > 0 else '-'}10^{self.log10:.6g})"

    def format_decimal(self, digits: int = 17) -> str:
        """Decimal text like -3.1415926535897931e+594, lossless past float range."""
        if self.sign == 0:
            return "0"
        exp = math.floor(self.log10)
        mant = 10.0 ** (self.log10 - exp)
        if mant >= 10.0:  # rounding at the boundary
            mant /= 10.0
            exp += 1
        body = f"{self.sign * mant:.{digits - 1}e}"
        mantissa_part = body.split("e")[0]
        return f"{mantissa_part}e{exp:+03d}"


ZERO = LogFloat(0, -math.inf)
ONE = LogFloat(1, 0.0)


def as_logfloat(x) -> LogFloat:
    if isinstance(x, LogFloat):
        return x
    return LogFloat.from_float(float(x))


def log_sum(values) -> LogFloat:
    """Sum a sequence of LogFloats, largest magnitude first for stability."""
    vals = [as_logfloat(v) for v in values if as_logfloat(v).sign != 0]
    if not vals:
        return ZERO
    vals.sort(key=lambda v: v.log10, reverse=True)
    acc = vals[0]
    for v in vals[1:]:
        acc = acc + v
    return acc
