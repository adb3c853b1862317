"""Evaluation of the characteristic exponent and its derived gauges.

Sign convention: the subordinator form psi(z) = -i d z + int (1 - e^{izx}) mu(dx)
has Im psi(z) = -d z - int sin(zx) mu(dx).  Every condition implemented
here consumes |Im psi| only, and the band construction's window
inequalities are stated for the flipped quantity, so ``im_signed``
stores S(z) = int sin(zx) mu(dx) plus d z (minus the linear and
compensator terms in the general form) -- that is, minus the exact
imaginary part.  |im_signed| equals |Im psi| either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .logspace import LogFloat
from .measures import (Atoms, LevyTriplet, LogPowerBand, MeasureComponent,
                       PowerBand, StableTail, Tabulated)
from .oscmaster import PHASE_HI, band_master_log, osc_interval
from .quadrature import adaptive, fixed_panels, geometric_edges, pi_aligned_edges

U_STAR = 4096.0  # u beyond which weighted integrands switch to boundary terms


@dataclass(frozen=True)
class ExponentValue:
    """One exponent evaluation: real part, flipped imaginary part, error bound."""

    re: float
    im_signed: float
    abs_err: float

    def __iter__(self):
        return iter((self.re, self.im_signed, self.abs_err))


def _check_finite(*values):
    for v in values:
        if math.isinf(v) or math.isnan(v):
            raise OverflowError(
                "exponent evaluation left double range; use the log-space path")


# ---------------------------------------------------------------------------
# log-corrected bands: u-space quadrature with the slowly varying log weight

def _logband_w(comp: LogPowerBand, lnz: float):
    """Weight omega(u) with x = u/z, plus |d/du (u^(-1-a) omega)| at a point."""
    if comp.logmode == "reciprocal":
        def omega(u):
            return 1.0 / (lnz - np.log(u))
    else:
        def omega(u):
            return lnz - np.log(u)
    return omega


def _logband_hprime_abs(comp: LogPowerBand, lnz: float, u: float) -> float:
    a = comp.alpha
    if comp.logmode == "reciprocal":
        w = 1.0 / (lnz - math.log(u))
        return u ** (-2.0 - a) * abs(w * w - (1.0 + a) * w)
    w = lnz - math.log(u)
    return u ** (-2.0 - a) * ((1.0 + a) * w + 1.0)


def _logband_near_bound(comp: LogPowerBand, kind: str, lnz: float, eps: float) -> float:
    """Bound on the omitted piece int_0^eps kernel(u) u^(-1-a) omega(u) du."""
    a = comp.alpha
    lw = lnz - math.log(eps)
    if kind == "cos":  # kernel <= u^2/2
        e = 2.0 - a
        lead = eps ** e / (2.0 * e)
    else:  # sin / exp kernels <= u
        e = 1.0 - a
        lead = eps ** e / e
    if comp.logmode == "reciprocal":
        return lead / lw
    return lead * (lw + 1.0 / e)


def _logband_kernel_integral(comp: LogPowerBand, kind: str, z: float):
    """J = int_{t1}^{t2} kernel(u) u^(-1-alpha) omega(u) du for this band."""
    a = comp.alpha
    lnz = math.log(z)
    t1 = z * comp.lower
    t2 = z * comp.upper
    omega = _logband_w(comp, lnz)

    def integrand(u):
        if kind == "cos":
            k = 1.0 - np.cos(u)
        elif kind == "sin":
            k = np.sin(u)
        else:
            k = -np.expm1(-u)
        return k * u ** (-1.0 - a) * omega(u)

    val = 0.0
    err = 0.0
    # near region: cut the 0 endpoint where its analytic bound is negligible
    scale = 1.0 / max(lnz - math.log(min(t2, 1.0)), 0.5) if comp.logmode == "reciprocal" \
        else max(lnz - math.log(min(t2, 1.0)), 0.5)
    lo = t1
    if lo == 0.0:
        eps = min(0.25, t2 / 4.0)
        while _logband_near_bound(comp, kind, lnz, eps) > 1e-13 * scale and eps > 1e-280:
            eps *= 0.01
        err += _logband_near_bound(comp, kind, lnz, eps)
        lo = eps
    near_hi = min(t2, 2.0)
    if near_hi > lo:
        v, e = fixed_panels(integrand, geometric_edges(lo, near_hi, ratio=2.0))
        val += v
        err += e
    mid_lo = max(lo, 2.0)
    mid_hi = min(t2, U_STAR)
    if mid_hi > mid_lo:
        if kind == "exp":
            edges = geometric_edges(mid_lo, mid_hi, ratio=2.0)
        else:
            edges = pi_aligned_edges(mid_lo, mid_hi)
        v, e = fixed_panels(integrand, edges)
        val += v
        err += e
    far_lo = max(lo, U_STAR)
    if t2 > far_lo:
        val_f, err_f = _logband_far(comp, kind, lnz, far_lo, t2, omega)
        val += val_f
        err += err_f
    return val, err


def _logband_far(comp, kind, lnz, T, W, omega):
    """[U_STAR, W]: smooth part by log-substitution, oscillation by parts."""
    a = comp.alpha

    def h(u):
        return u ** (-1.0 - a) * omega(u)

    val = 0.0
    err = 2.0 * _logband_hprime_abs(comp, lnz, T)  # Abel bound on the IBP remainder
    if kind in ("cos", "exp"):
        mono, e = adaptive(lambda v: np.exp(-a * v) * omega(np.exp(v)),
                           math.log(T), math.log(W), rel_tol=1e-12)
        val += mono
        err += e
    if kind == "cos":
        # minus int cos(u) h(u) du = -[sin u h] + remainder
        val += math.sin(T) * h(T)
        if W <= PHASE_HI:
            val -= math.sin(W) * h(W)
        else:
            err += h(W)
    elif kind == "sin":
        val += math.cos(T) * h(T)
        if W <= PHASE_HI:
            val -= math.cos(W) * h(W)
        else:
            err += h(W)
    else:  # exp kernel: the e^{-u} part is beyond negligible past U_STAR
        err += 1.1 * math.exp(-T) * h(T)
    return val, err


# ---------------------------------------------------------------------------
# component contributions

def _band_contrib(comp, z: float):
    """(re, S, err) of int (1 - e^{izx}) comp(dx); S = int sin(zx) comp(dx)."""
    az = abs(z)
    sgn = 1.0 if z > 0 else -1.0
    if isinstance(comp, (PowerBand, StableTail)):
        if isinstance(comp, PowerBand):
            t1, t2 = az * comp.lower, az * comp.upper
        else:
            t1, t2 = 0.0, math.inf
        zp = comp.coeff * az ** comp.alpha
        rc, ec = osc_interval("cos", comp.alpha, t1, t2)
        rs, es = osc_interval("sin", comp.alpha, t1, t2)
        re, s, err = zp * rc, zp * rs, zp * (ec + es)
    elif isinstance(comp, LogPowerBand):
        zp = comp.coeff * az ** comp.alpha
        rc, ec = _logband_kernel_integral(comp, "cos", az)
        rs, es = _logband_kernel_integral(comp, "sin", az)
        re, s, err = zp * rc, zp * rs, zp * (ec + es)
    elif isinstance(comp, Atoms):
        re = sum(m * (1.0 - math.cos(az * x)) for x, m in comp.points)
        s = sum(m * math.sin(az * x) for x, m in comp.points)
        err = 1e-15 * sum(m * (1.0 + az * x) for x, m in comp.points)
    elif isinstance(comp, Tabulated):
        re = s = err = 0.0
        for xa, xb, c, slope in comp.segments():
            aeff = -1.0 - slope
            zp = c * az ** aeff
            rc, ec = osc_interval("cos", aeff, az * xa, az * xb)
            rs, es = osc_interval("sin", aeff, az * xa, az * xb)
            re += zp * rc
            s += zp * rs
            err += zp * (ec + es)
    else:
        raise TypeError(f"unknown measure component {type(comp).__name__}")
    if comp.mirrored:
        return 2.0 * re, 0.0, 2.0 * err
    return re, sgn * s, err


def band_exponent(z: float, comp: MeasureComponent) -> ExponentValue:
    """Contribution of int (1 - e^{izx}) comp(dx), without any compensator."""
    if z == 0.0:
        return ExponentValue(0.0, 0.0, 0.0)
    re, s, err = _band_contrib(comp, z)
    _check_finite(re, s)
    return ExponentValue(re, s, err)


def band_exponent_log(log10_z: float, alpha: float, log10_lower: float,
                      log10_upper: float, coeff: float = 1.0):
    """Log-space power-band contribution at z = 10**log10_z > 0.

    Returns (re, im_signed, err) as LogFloats; only the ratios
    z * endpoint enter, so this stays usable when the band endpoints
    themselves are far below double range.
    """
    lt1 = log10_z + log10_lower
    lt2 = log10_z + log10_upper
    zp = LogFloat.exp10(alpha * log10_z) * LogFloat.from_float(coeff)
    rc, ec = band_master_log("cos", alpha, lt1, lt2)
    rs, es = band_master_log("sin", alpha, lt1, lt2)
    return zp * rc, zp * rs, zp * (ec + es)


def eval_psi(triplet: LevyTriplet, z: float) -> ExponentValue:
    """Characteristic exponent of the triple at z (see module sign note)."""
    if z == 0.0:
        return ExponentValue(0.0, 0.0, 0.0)
    re = 0.5 * triplet.gaussian * z * z
    s = 0.0
    err = 0.0
    for comp in triplet.measure:
        cre, cs, cerr = _band_contrib(comp, z)
        re += cre
        s += cs
        err += cerr
    if triplet.form == "drift":
        im = triplet.linear * z + s
    else:
        m1 = sum(comp.first_moment(0.0, 1.0)
                 for comp in triplet.measure if not comp.mirrored)
        im = s - (triplet.linear + m1) * z
    _check_finite(re, im)
    return ExponentValue(re, im, err)


def ab(triplet: LevyTriplet, z: float):
    """The gauges A = 1 + Re psi and B = |1 + psi|."""
    v = eval_psi(triplet, z)
    a = 1.0 + v.re
    if a < 1.0:
        if 1.0 - a > v.abs_err + 1e-12:
            raise ArithmeticError(f"Re psi({z}) = {v.re} below -abs_err")
        a = 1.0
    b = math.hypot(a, v.im_signed)
    return a, b


def laplace_exponent(triplet: LevyTriplet, s: float) -> float:
    """d*s + int (1 - e^{-sx}) mu(dx) for a drift-form triple, s > 0."""
    if triplet.form != "drift":
        raise ValueError("laplace_exponent needs a drift-form triple")
    if not s > 0.0:
        raise ValueError("laplace_exponent needs s > 0")
    total = triplet.linear * s
    for comp in triplet.measure:
        if isinstance(comp, (PowerBand, StableTail)):
            if isinstance(comp, PowerBand):
                t1, t2 = s * comp.lower, s * comp.upper
            else:
                t1, t2 = 0.0, math.inf
            v, _ = osc_interval("exp", comp.alpha, t1, t2)
            total += comp.coeff * s ** comp.alpha * v
        elif isinstance(comp, LogPowerBand):
            v, _ = _logband_kernel_integral(comp, "exp", s)
            total += comp.coeff * s ** comp.alpha * v
        elif isinstance(comp, Atoms):
            total += sum(m * -math.expm1(-s * x) for x, m in comp.points)
        elif isinstance(comp, Tabulated):
            for xa, xb, c, slope in comp.segments():
                aeff = -1.0 - slope
                v, _ = osc_interval("exp", aeff, s * xa, s * xb)
                total += c * s ** aeff * v
        else:
            raise TypeError(f"unknown measure component {type(comp).__name__}")
    _check_finite(total)
    return total
