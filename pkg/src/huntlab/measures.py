"""Jump-measure components and characteristic triples.

A Levy measure here is a finite sum of components, each a closed-form
family on the positive axis: power bands, a full stable tail,
log-corrected power bands, atom lists, and log-log tabulated densities.
Any component may be mirrored, which adds its reflection about 0 (so
the imaginary part of the exponent cancels exactly).

All supports are positive, so integrability near zero is the only
constraint: anything reaching x = 0 must do so with exponent < 1 so
that both the plain sine integral and the subordinator form converge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Tuple, Union

from .quadrature import adaptive, geometric_edges


def _power_diff(e: float, a: float, b: float) -> float:
    """(b**e - a**e)/e, stable through e == 0 (-> log(b/a))."""
    if a == 0.0:
        return b ** e / e
    if e == 0.0:
        return math.log(b / a)
    y = e * math.log(b / a)
    if abs(y) < 700.0:
        return a ** e * math.expm1(y) / e
    return (b ** e - a ** e) / e


@dataclass(frozen=True)
class PowerBand:
    """coeff * x**(-1-alpha) dx on (lower, upper); lower may be 0 if alpha < 1."""

    coeff: float
    alpha: float
    lower: float
    upper: float
    mirrored: bool = False

    def __post_init__(self):
        if self.coeff <= 0:
            raise ValueError("PowerBand coeff must be positive")
        if not 0.0 < self.alpha < 2.0:
            raise ValueError("PowerBand alpha must lie in (0, 2)")
        if self.lower < 0 or not self.lower < self.upper < math.inf:
            raise ValueError("PowerBand needs 0 <= lower < upper < inf")
        if self.lower == 0.0 and self.alpha >= 1.0:
            raise ValueError("PowerBand reaching 0 needs alpha < 1")

    def mass_between(self, lo: float, hi: float) -> float:
        lo = max(lo, self.lower)
        hi = min(hi, self.upper)
        if hi <= lo:
            return 0.0
        if lo == 0.0:
            return math.inf
        return self.coeff * _power_diff(-self.alpha, hi, lo)

    def total_mass(self) -> float:
        return self.mass_between(0.0, math.inf)

    def first_moment(self, lo: float, hi: float) -> float:
        lo = max(lo, self.lower)
        hi = min(hi, self.upper)
        if hi <= lo:
            return 0.0
        return self.coeff * _power_diff(1.0 - self.alpha, lo, hi)

    def restrict_below(self, delta: float):
        if delta <= self.lower:
            return None
        if delta >= self.upper:
            return self
        return PowerBand(self.coeff, self.alpha, self.lower, delta, self.mirrored)

    def small_x_exponent(self) -> float:
        return self.alpha if self.lower == 0.0 else 0.0


@dataclass(frozen=True)
class StableTail:
    """coeff * x**(-1-alpha) dx on (0, inf), alpha in (0, 1)."""

    coeff: float
    alpha: float
    mirrored: bool = False

    def __post_init__(self):
        if self.coeff <= 0:
            raise ValueError("StableTail coeff must be positive")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("StableTail alpha must lie in (0, 1)")

    def mass_between(self, lo: float, hi: float) -> float:
        if hi <= lo:
            return 0.0
        if lo == 0.0:
            return math.inf
        if math.isinf(hi):
            return self.coeff * lo ** -self.alpha / self.alpha
        return self.coeff * _power_diff(-self.alpha, hi, lo)

    def total_mass(self) -> float:
        return math.inf

    def first_moment(self, lo: float, hi: float) -> float:
        if hi <= lo:
            return 0.0
        return self.coeff * _power_diff(1.0 - self.alpha, lo, hi)

    def restrict_below(self, delta: float):
        return PowerBand(self.coeff, self.alpha, 0.0, delta, self.mirrored)

    def small_x_exponent(self) -> float:
        return self.alpha


@dataclass(frozen=True)
class LogPowerBand:
    """Log-corrected power density on (lower, upper) inside the unit interval.

    logmode "reciprocal": coeff / ((-log x) * x**(1+alpha)) dx
    logmode "direct":     coeff * (-log x) / x**(1+alpha) dx
    """

    coeff: float
    alpha: float
    lower: float
    upper: float
    logmode: str = "reciprocal"
    mirrored: bool = False

    def __post_init__(self):
        if self.coeff <= 0:
            raise ValueError("LogPowerBand coeff must be positive")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError("LogPowerBand alpha must lie in (0, 1)")
        if self.lower < 0 or not self.lower < self.upper < 1.0:
            raise ValueError("LogPowerBand needs 0 <= lower < upper < 1")
        if self.logmode not in ("reciprocal", "direct"):
            raise ValueError("logmode must be 'reciprocal' or 'direct'")

    def density(self, x):
        import numpy as np

        neglog = -np.log(x)
        base = self.coeff * x ** (-1.0 - self.alpha)
        if self.logmode == "reciprocal":
            return base / neglog
        return base * neglog

    def mass_between(self, lo: float, hi: float) -> float:
        lo = max(lo, self.lower)
        hi = min(hi, self.upper)
        if hi <= lo:
            return 0.0
        if lo == 0.0:
            return math.inf
        v, _ = adaptive(self.density, lo, hi, rel_tol=1e-11,
                        initial_edges=geometric_edges(lo, hi))
        return v

    def total_mass(self) -> float:
        return self.mass_between(0.0, math.inf)

    def first_moment(self, lo: float, hi: float) -> float:
        lo = max(lo, self.lower)
        hi = min(hi, self.upper)
        if hi <= lo:
            return 0.0
        if lo == 0.0:
            lo = 1e-290  # cut contributes < lo**(1-alpha) ~ 0 to the moment
        v, _ = adaptive(lambda x: x * self.density(x), lo, hi, rel_tol=1e-11,
                        initial_edges=geometric_edges(lo, hi))
        return v

    def restrict_below(self, delta: float):
        if delta <= self.lower:
            return None
        if delta >= self.upper:
            return self
        return LogPowerBand(self.coeff, self.alpha, self.lower, delta,
                            self.logmode, self.mirrored)

    def small_x_exponent(self) -> float:
        return self.alpha if self.lower == 0.0 else 0.0


@dataclass(frozen=True)
class Atoms:
    """Finite list of point masses (location, mass), locations positive."""

    points: Tuple[Tuple[float, float], ...]
    mirrored: bool = False

    def __post_init__(self):
        for loc, mass in self.points:
            if loc <= 0 or mass <= 0:
                raise ValueError("atoms need positive locations and masses")

    def mass_between(self, lo: float, hi: float) -> float:
        return sum(m for x, m in self.points if lo < x < hi)

    def total_mass(self) -> float:
        return sum(m for _, m in self.points)

    def first_moment(self, lo: float, hi: float) -> float:
        return sum(x * m for x, m in self.points if lo <= x < hi)

    def restrict_below(self, delta: float):
        kept = tuple((x, m) for x, m in self.points if x < delta)
        return Atoms(kept, self.mirrored) if kept else None

    def small_x_exponent(self) -> float:
        return 0.0


@dataclass(frozen=True)
class Tabulated:
    """Density sampled on increasing positive knots, log-log linear between.

    Each segment is then an exact power c * x**s, and its exponent
    integrals reduce to the same master kernels as a power band.  The
    slopes must stay power-like (s in (-3, -1), open by a small margin);
    a zero density value switches its adjacent segments off.
    """

    knots: Tuple[float, ...]
    values: Tuple[float, ...]
    mirrored: bool = False

    def __post_init__(self):
        if len(self.knots) < 2 or len(self.knots) != len(self.values):
            raise ValueError("need >= 2 knots and matching values")
        if self.knots[0] <= 0 or any(b <= a for a, b in zip(self.knots, self.knots[1:])):
            raise ValueError("knots must be increasing and positive")
        if any(v < 0 for v in self.values):
            raise ValueError("density values must be nonnegative")
        for _ in self.segments():
            pass  # validates slopes

    def segments(self):
        """Yield (a, b, c, s): density c*x**s on [a, b]."""
        for i in range(len(self.knots) - 1):
            a, b = self.knots[i], self.knots[i + 1]
            va, vb = self.values[i], self.values[i + 1]
            if va == 0.0 or vb == 0.0:
                continue
            s = math.log(vb / va) / math.log(b / a)
            if not -2.995 < s < -1.005:
                raise ValueError(
                    f"tabulated segment [{a:g}, {b:g}] has log-log slope "
                    f"{s:.3f}; only power-like slopes in (-3, -1) are supported")
            c = va * a ** (-s)
            yield a, b, c, s

    def mass_between(self, lo: float, hi: float) -> float:
        total = 0.0
        for a, b, c, s in self.segments():
            a2, b2 = max(a, lo), min(b, hi)
            if b2 > a2:
                total += c * _power_diff(s + 1.0, a2, b2)
        return total

    def total_mass(self) -> float:
        return self.mass_between(0.0, math.inf)

    def first_moment(self, lo: float, hi: float) -> float:
        total = 0.0
        for a, b, c, s in self.segments():
            a2, b2 = max(a, lo), min(b, hi)
            if b2 > a2:
                total += c * _power_diff(s + 2.0, a2, b2)
        return total

    def restrict_below(self, delta: float):
        if delta <= self.knots[0]:
            return None
        if delta >= self.knots[-1]:
            return self
        knots = [k for k in self.knots if k < delta]
        values = list(self.values[:len(knots)])
        # interpolate the density at the cut point
        i = len(knots) - 1
        a, b = self.knots[i], self.knots[i + 1]
        va, vb = self.values[i], self.values[i + 1]
        if va > 0 and vb > 0:
            s = math.log(vb / va) / math.log(b / a)
            vcut = va * (delta / a) ** s
        else:
            vcut = 0.0
        knots.append(delta)
        values.append(vcut)
        return Tabulated(tuple(knots), tuple(values), self.mirrored)

    def small_x_exponent(self) -> float:
        return 0.0


MeasureComponent = Union[PowerBand, StableTail, LogPowerBand, Atoms, Tabulated]


@dataclass(frozen=True)
class LevyTriplet:
    """A 1-d characteristic triple (linear term, Gaussian coefficient, measure).

    form "general": psi(z) = i*a*z + Q*z^2/2 + int (1 - e^{izx} + izx 1_{|x|<1}) mu(dx)
    form "drift":   psi(z) = -i*d*z + int (1 - e^{izx}) mu(dx)   (subordinator when d >= 0)

    ``linear`` is a in the general form, d in the drift form.
    """

    linear: float = 0.0
    gaussian: float = 0.0
    measure: Tuple[MeasureComponent, ...] = ()
    form: str = "general"

    def __post_init__(self):
        if self.form not in ("general", "drift"):
            raise ValueError("form must be 'general' or 'drift'")
        if self.gaussian < 0:
            raise ValueError("gaussian coefficient must be nonnegative")
        if self.form == "drift":
            if self.gaussian != 0:
                raise ValueError("drift form requires a vanishing gaussian part")
            for comp in self.measure:
                if comp.mirrored:
                    raise ValueError("drift form requires support on (0, inf)")
                if comp.small_x_exponent() >= 1.0:
                    raise ValueError("drift form needs int (1 ^ x) mu(dx) < inf")

    def first_moment_below_one(self) -> float:
        return sum(comp.first_moment(0.0, 1.0) for comp in self.measure)

    def total_mass(self) -> float:
        total = 0.0
        for comp in self.measure:
            m = comp.total_mass()
            if math.isinf(m):
                return math.inf
            total += m * (2.0 if comp.mirrored else 1.0)
        return total

    def to_general(self) -> "LevyTriplet":
        """The same process expressed with the compensated integrand."""
        if self.form == "general":
            return self
        a = -self.linear - self.first_moment_below_one()
        return LevyTriplet(a, self.gaussian, self.measure, "general")
