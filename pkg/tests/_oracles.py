"""Independent slow oracles used to pin expected values in the tests.

Everything here integrates densities directly with trapezoid rules
(log-spaced panels near the origin, uniform panels through the
oscillatory range) and analytic tail/edge bounds, sharing no code with
the package's series/panel/asymptotic evaluation paths.
"""

import math

import numpy as np

from huntlab.measures import (Atoms, LevyTriplet, LogPowerBand, PowerBand,
                              StableTail, Tabulated)


def component_density(comp):
    if isinstance(comp, PowerBand):
        return lambda x: comp.coeff * x ** (-1.0 - comp.alpha), comp.lower, comp.upper
    if isinstance(comp, StableTail):
        return lambda x: comp.coeff * x ** (-1.0 - comp.alpha), 0.0, math.inf
    if isinstance(comp, LogPowerBand):
        return comp.density, comp.lower, comp.upper
    if isinstance(comp, Tabulated):
        lk = np.log(comp.knots)
        lv = np.log(np.maximum(comp.values, 1e-300))
        return (lambda x: np.exp(np.interp(np.log(x), lk, lv)),
                comp.knots[0], comp.knots[-1])
    raise TypeError(type(comp))


def _kernel(kind, z, x):
    if kind == "cos":
        return 1.0 - np.cos(z * x)
    if kind == "sin":
        return np.sin(z * x)
    return -np.expm1(-z * x)


def component_integral(comp, z, kind, smooth_pts=600_000, osc_pts=1_600_000):
    """int kernel(z x) comp(dx) by composite trapezoid; z > 0."""
    if isinstance(comp, Atoms):
        return float(sum(m * _kernel(kind, z, np.array([x]))[0] for x, m in comp.points))
    dens, lo, hi = component_density(comp)
    tail = 0.0
    if math.isinf(hi):
        # cut where the oscillatory part is negligible; the monotone part of
        # the cos/exp kernels keeps collecting the full remaining mass
        hi = max(2e4 / z, 10.0)
        if kind in ("cos", "exp"):
            tail = comp.mass_between(hi, math.inf)
    # edge cut: kernel bounds (zx)^2/2 resp. zx make [0, eps] negligible only
    # once eps**(2-alpha) resp. eps**(1-alpha) is tiny, so cut very deep and
    # let the geometric grid absorb the decades
    eps = lo
    if eps == 0.0:
        eps = max(min(1e-60 / z, hi / 1e6), 1e-250)
    split = min(hi, max(math.pi / (4.0 * z), eps * 1.000001))
    total = tail
    if split > eps:
        x = np.geomspace(eps, split, smooth_pts)
        total += float(np.trapezoid(_kernel(kind, z, x) * dens(x), x))
    if hi > split:
        x = np.linspace(split, hi, osc_pts)
        total += float(np.trapezoid(_kernel(kind, z, x) * dens(x), x))
    return total


def psi_oracle(triplet, z):
    """(re, im_signed) by brute force, matching the package sign convention."""
    if z == 0.0:
        return 0.0, 0.0
    az = abs(z)
    sgn = 1.0 if z > 0 else -1.0
    re = 0.5 * triplet.gaussian * z * z
    s = 0.0
    for comp in triplet.measure:
        cre = component_integral(comp, az, "cos")
        if comp.mirrored:
            re += 2.0 * cre
        else:
            re += cre
            s += sgn * component_integral(comp, az, "sin")
    if triplet.form == "drift":
        im = triplet.linear * z + s
    else:
        m1 = sum(c.first_moment(0.0, 1.0) for c in triplet.measure if not c.mirrored)
        im = s - (triplet.linear + m1) * z
    return re, im


def laplace_oracle(triplet, s):
    total = triplet.linear * s
    for comp in triplet.measure:
        total += component_integral(comp, s, "exp")
    return total


# closed forms from the Gamma function, for the scale-free kernels
def gcos_limit(a):
    if abs(a - 1.0) < 1e-12:
        return math.pi / 2.0
    return math.gamma(2.0 - a) * math.cos(math.pi * a / 2.0) / (a * (1.0 - a))


def gsin_limit(a):
    return math.gamma(1.0 - a) * math.sin(math.pi * a / 2.0) / a


def gexp_limit(a):
    return math.gamma(1.0 - a) / a


def stable_psi_closed(coeff, alpha, z):
    """Exact stable-subordinator exponent (re, im_signed)."""
    az = abs(z)
    c = coeff * math.gamma(1.0 - alpha) / alpha * az ** alpha
    re = c * math.cos(math.pi * alpha / 2.0)
    im = math.copysign(c * math.sin(math.pi * alpha / 2.0), z)
    return re, im
