"""Master integrals behind every power-law jump density.

For a density c*x**(-1-alpha) the substitution u = z*x turns each
exponent integral into c*|z|**alpha times one of

    G_cos(t; a) = int_0^t (1 - cos u) u**(-1-a) du
    G_sin(t; a) = int_0^t  sin(u)     u**(-1-a) du
    G_exp(t; a) = int_0^t (1 - e^-u)  u**(-1-a) du

so only the dimensionless combinations z*lower and z*upper ever enter.
That keeps window evaluations of the band construction finite even when
the bands themselves underflow, and the log-space variants below extend
the same functions to arguments far outside double range.

Evaluation regimes: an alternating antiderivative series up to t = 2,
Gauss-Kronrod panels aligned to half-periods up to 16*pi, and an
integration-by-parts asymptotic tail beyond.  Past t = 1e8 the phase of
sin/cos is treated as unknown and the oscillatory remainder is returned
inside the error bound instead.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .logspace import LogFloat, ZERO as LOG_ZERO
from .quadrature import fixed_panels, geometric_edges, pi_aligned_edges

TAYLOR_HI = 2.0
PANEL_HI = 16.0 * math.pi
PHASE_HI = 1e8

KINDS = ("cos", "sin", "exp")


def _power_diff(e: float, t1: float, t2: float) -> float:
    """(t2**e - t1**e) / e, stable through e -> 0."""
    if t1 == 0.0:
        return t2 ** e / e
    y = e * math.log(t2 / t1)
    if abs(y) < 700.0:
        return t1 ** e * math.expm1(y) / e
    return (t2 ** e - t1 ** e) / e


def _series_interval(kind: str, alpha: float, t1: float, t2: float):
    """Antiderivative series on [t1, t2] with t2 <= TAYLOR_HI."""
    total = 0.0
    scale = 0.0
    if kind == "exp":
        coeff = 1.0  # 1/m!
        for m in range(1, 80):
            coeff /= m
            term = ((-1) ** (m + 1)) * coeff * _power_diff(m - alpha, t1, t2)
            total += term
            scale = max(scale, abs(term))
            if abs(term) <= 1e-18 * max(scale, abs(total)):
                break
    elif kind == "cos":
        fact = 1.0  # 1/(2m)!
        for m in range(1, 60):
            fact /= (2 * m - 1) * (2 * m)
            term = ((-1) ** (m + 1)) * fact * _power_diff(2 * m - alpha, t1, t2)
            total += term
            scale = max(scale, abs(term))
            if abs(term) <= 1e-18 * max(scale, abs(total)):
                break
    else:  # sin
        fact = 1.0  # 1/(2m+1)!
        for m in range(0, 60):
            if m > 0:
                fact /= (2 * m) * (2 * m + 1)
            term = ((-1) ** m) * fact * _power_diff(2 * m + 1 - alpha, t1, t2)
            total += term
            scale = max(scale, abs(term))
            if abs(term) <= 1e-18 * max(scale, abs(total)):
                break
    err = abs(term) + 1e-16 * scale
    return total, err


def _trig_tail(start: str, p: float, t: float):
    """int_t^inf cos(u) u**-p du (start='c') or sin (start='s'), t >= PANEL_HI."""
    val = 0.0
    coef = 1.0
    kind = start
    pp = p
    best_bound = math.inf
    for _ in range(30):
        rem_bound = abs(coef) * t ** (1.0 - pp) / (pp - 1.0)
        if rem_bound >= best_bound:  # asymptotic series turned the corner
            return val, best_bound
        best_bound = rem_bound
        if rem_bound <= 1e-18 * max(abs(val), t ** -p):
            return val, rem_bound
        tp = t ** (-pp)
        if kind == "c":
            val += coef * (-math.sin(t)) * tp
            coef *= pp
            kind = "s"
        else:
            val += coef * math.cos(t) * tp
            coef *= -pp
            kind = "c"
        pp += 1.0
    return val, best_bound


def _tail(kind: str, alpha: float, t: float):
    """int_t^inf kernel(u) u**(-1-alpha) du for t >= PANEL_HI (t=inf -> 0)."""
    if math.isinf(t):
        return 0.0, 0.0
    if kind == "exp":
        mono = t ** -alpha / alpha
        bound = 1.1 * math.exp(-t) * t ** (-1.0 - alpha)
        return mono - 0.5 * bound, 0.5 * bound
    if kind == "cos":
        mono = t ** -alpha / alpha
        if t > PHASE_HI:
            return mono, 2.0 * t ** (-1.0 - alpha)
        osc, err = _trig_tail("c", 1.0 + alpha, t)
        return mono - osc, err
    # sin
    if t > PHASE_HI:
        return 0.0, 2.0 * t ** (-1.0 - alpha)
    return _trig_tail("s", 1.0 + alpha, t)


def _integrand(kind, alpha):
    import numpy as np

    if kind == "cos":
        return lambda u: (1.0 - np.cos(u)) * u ** (-1.0 - alpha)
    if kind == "sin":
        return lambda u: np.sin(u) * u ** (-1.0 - alpha)
    return lambda u: -np.expm1(-u) * u ** (-1.0 - alpha)


def osc_interval(kind: str, alpha: float, t1: float, t2: float):
    """int_{t1}^{t2} kernel(u) u**(-1-alpha) du; returns (value, error_bound).

    t1 = 0 requires alpha < 2 for the cos kernel and alpha < 1 for sin
    and exp (the anchored integrals diverge otherwise).
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kernel kind {kind!r}")
    if not 0.0 < alpha < 2.0:
        raise ValueError(f"alpha must lie in (0, 2), got {alpha}")
    if t1 < 0.0 or t2 < t1:
        raise ValueError("need 0 <= t1 <= t2")
    if t1 == 0.0 and kind in ("sin", "exp") and alpha >= 1.0:
        raise ValueError(f"{kind} kernel anchored at 0 needs alpha < 1")
    if math.isinf(t2) and kind in ("sin", "exp") and alpha >= 1.0:
        raise ValueError(f"{kind} kernel to infinity needs alpha < 1")
    if t1 == t2:
        return 0.0, 0.0

    val = 0.0
    err = 0.0
    lo = t1
    hi = min(t2, TAYLOR_HI)
    if hi > lo:
        v, e = _series_interval(kind, alpha, lo, hi)
        val += v
        err += e
    lo = max(t1, TAYLOR_HI)
    hi = min(t2, PANEL_HI)
    if hi > lo:
        f = _integrand(kind, alpha)
        if kind == "exp":
            edges = geometric_edges(lo, hi, ratio=2.0)
        else:
            edges = pi_aligned_edges(lo, hi)
        v, e = fixed_panels(f, edges)
        val += v
        err += e
    lo = max(t1, PANEL_HI)
    if t2 > lo:
        v1, e1 = _tail(kind, alpha, lo)
        v2, e2 = _tail(kind, alpha, t2)
        val += v1 - v2
        err += e1 + e2
    return val, err


def osc_master(kind: str, alpha: float, t: float):
    """G_kind(t; alpha) anchored at 0; t may be math.inf."""
    return osc_interval(kind, alpha, 0.0, t)


@lru_cache(maxsize=256)
def kernel_limit(kind: str, alpha: float):
    """Cached (value, error) of the t = infinity limit."""
    return osc_master(kind, alpha, math.inf)


class OscKernelTable:
    """Per-alpha view of the master kernels with cached infinite limits."""

    def __init__(self, alpha: float):
        if not 0.0 < alpha < 2.0:
            raise ValueError(f"alpha must lie in (0, 2), got {alpha}")
        self.alpha = alpha

    def cos(self, t: float):
        return osc_master("cos", self.alpha, t)

    def sin(self, t: float):
        return osc_master("sin", self.alpha, t)

    def exp(self, t: float):
        return osc_master("exp", self.alpha, t)

    @property
    def cos_limit(self):
        return kernel_limit("cos", self.alpha)

    @property
    def sin_limit(self):
        return kernel_limit("sin", self.alpha)


# ---------------------------------------------------------------------------
# log-space variants

_LOG_HALF = math.log10(0.5)
_LOG_PHASE_HI = 8.0


def _bracket(kind: str, alpha: float, q: float):
    """Series bracket B with F_kind(t) = t**pow0 * B; q = t*t (cos/sin) or t (exp).

    Underflowed q simply truncates the series at its leading coefficient.
    """
    total = 0.0
    if kind == "cos":
        fact = 1.0
        qp = 1.0
        for m in range(1, 60):
            fact /= (2 * m - 1) * (2 * m)
            term = ((-1) ** (m + 1)) * fact * qp / (2 * m - alpha)
            total += term
            if abs(term) <= 1e-18 * abs(total):
                break
            qp *= q
    elif kind == "sin":
        fact = 1.0
        qp = 1.0
        for m in range(0, 60):
            if m > 0:
                fact /= (2 * m) * (2 * m + 1)
            term = ((-1) ** m) * fact * qp / (2 * m + 1 - alpha)
            total += term
            if abs(term) <= 1e-18 * abs(total):
                break
            qp *= q
    else:
        fact = 1.0
        qp = 1.0
        for m in range(1, 80):
            fact /= m
            term = ((-1) ** (m + 1)) * fact * qp / (m - alpha)
            total += term
            if abs(term) <= 1e-18 * abs(total):
                break
            qp *= q
    return total


def _pow0(kind: str, alpha: float) -> float:
    return 2.0 - alpha if kind == "cos" else 1.0 - alpha


def master_log(kind: str, alpha: float, lt: float):
    """G_kind(10**lt; alpha) as (LogFloat value, LogFloat error)."""
    if lt <= _LOG_HALF:
        q = 10.0 ** (2.0 * lt) if kind in ("cos", "sin") else 10.0 ** lt
        b = _bracket(kind, alpha, q)
        lead = LogFloat.exp10(_pow0(kind, alpha) * lt)
        val = lead * LogFloat.from_float(b)
        return val, abs(val) * LogFloat.from_float(1e-15)
    if lt <= _LOG_PHASE_HI:
        v, e = osc_master(kind, alpha, 10.0 ** lt)
        ev = LogFloat.from_float(e) if e > 0.0 else LOG_ZERO
        return (LogFloat.from_float(v) if v != 0.0 else LOG_ZERO), ev
    # far regime: limit minus a monotone tail, oscillation absorbed in the error
    lim, lim_err = kernel_limit(kind, alpha)
    osc_bound = LogFloat.exp10((-1.0 - alpha) * lt) * LogFloat.from_float(2.0)
    err = osc_bound + LogFloat.from_float(lim_err + 1e-16 * lim)
    if kind == "sin":
        return LogFloat.from_float(lim), err
    mono = LogFloat.exp10(-alpha * lt) / LogFloat.from_float(alpha)
    return LogFloat.from_float(lim) - mono, err


def band_master_log(kind: str, alpha: float, lt1: float, lt2: float):
    """G_kind(t2) - G_kind(t1) in log space, lt_i = log10(t_i), lt1 < lt2."""
    if lt2 <= _LOG_HALF:
        # factored difference keeps full precision however small the t's are
        p0 = _pow0(kind, alpha)
        if kind == "exp":
            q1, q2 = 10.0 ** lt1, 10.0 ** lt2
        else:
            q1, q2 = 10.0 ** (2.0 * lt1), 10.0 ** (2.0 * lt2)
        rp = 10.0 ** (p0 * (lt1 - lt2))
        diff = _bracket(kind, alpha, q2) - rp * _bracket(kind, alpha, q1)
        val = LogFloat.exp10(p0 * lt2) * LogFloat.from_float(diff)
        return val, abs(val) * LogFloat.from_float(1e-14)
    v2, e2 = master_log(kind, alpha, lt2)
    v1, e1 = master_log(kind, alpha, lt1)
    val = v2 - v1
    err = e1 + e2 + (abs(v1) + abs(v2)) * LogFloat.from_float(1e-15)
    return val, err
