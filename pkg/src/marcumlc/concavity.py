"""Log-concavity diagnostics for the noncentral chi density f.

The diagnostics are

* ``h(nu, t) = 1 - (2nu-1)/t^2 - (2nu-1)/t r_nu(t) - r_nu(t)^2``, whose sign
  decides log-concavity of f for every noncentrality at once,
* ``l(nu, t) = r_nu(t) - (3-2nu)/t``, which controls the sign changes of h,
* the curvature ``d^2/dt^2 log f`` and the statistic ``f'(t) / (t f(t))``.

h and l accept any nu > 0; the Bessel ratio extends below nu = 1/2 through
its power series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.optimize import minimize_scalar

from . import _kernels as _k
from .errors import DomainError, ShapeError
from .special_fn import ratio_derivative_from_bessel

BOUNDARY = "boundary"
PhaseVerdict = Literal["yes", "no", "empty"]


def _check_nu(nu):
    nu = float(nu)
    if not nu > 0:
        raise DomainError(f"nu must be > 0, got {nu}")
    return nu


def _as_t(t, name="t"):
    arr = np.asarray(t, dtype=float)
    if np.any(~(arr > 0)):
        raise DomainError(f"{name} must be > 0")
    return arr


def _grid_apply(kernel, t, *args):
    arr = _as_t(t)
    out = kernel(*args, np.ascontiguousarray(arr.reshape(-1)))
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def h(nu, t, form: Literal["ht", "ht2"] = "ht"):
    """The function h_nu(t); scalar or array ``t``.

    ``form="ht2"`` evaluates the equivalent r'_nu(t) - (2nu-1)/t^2 with r'
    from the quotient rule on Bessel values, an independent path used to
    cross-check the default form.
    """
    nu = _check_nu(nu)
    if form == "ht":
        return _grid_apply(_k.h_grid, t, nu)
    if form != "ht2":
        raise DomainError(f"unknown form {form!r}")
    arr = _as_t(t)
    out = np.array([ratio_derivative_from_bessel(nu, x) - (2 * nu - 1) / (x * x)
                    for x in arr.reshape(-1)])
    return float(out[0]) if arr.ndim == 0 else out.reshape(arr.shape)


def l(nu, t):  # noqa: E741
    """l_nu(t) = r_nu(t) - (3 - 2nu) / t."""
    return _grid_apply(_k.l_grid, t, _check_nu(nu))


def log_density_curvature(nu, a, t):
    """d^2/dt^2 log f(t) = -(2nu-1)/t^2 - 1 + a^2 r'_nu(a t), for a > 0."""
    nu = _check_nu(nu)
    a = float(a)
    if not a > 0:
        raise DomainError(f"a must be > 0, got {a}")
    return _grid_apply(_k.curvature_grid, t, nu, a)


def lemma2_statistic(nu, a, t):
    """f'(t) / (t f(t)) = (2nu-1)/t^2 - 1 + a r_nu(a t) / t."""
    nu = _check_nu(nu)
    a = float(a)
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    return _grid_apply(_k.lemma2_grid, t, nu, a)


# ---------------------------------------------------------------------------
# shape classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShapeReport:
    mode_location: float | str
    rising_logconcave: PhaseVerdict
    declining_logconcave: PhaseVerdict
    worst_violation: tuple[float, float]


def default_t_grid(a: float, n: int = 512) -> np.ndarray:
    return np.geomspace(1e-3, max(50.0, 3.0 * a + 30.0), n)


def _bisect(fn, lo, hi, f_lo, xtol):
    while hi - lo > xtol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = fn(mid)
        if (fm > 0) == (f_lo > 0):
            lo, f_lo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def log_second_differences(nu: float, a: float, ts: np.ndarray):
    """Central second differences of log f with step max(1e-4, 1e-4 t).

    Returns (differences, rounding slack) arrays.
    """
    ts = np.asarray(ts, dtype=float)
    step = np.minimum(np.maximum(1e-4, 1e-4 * ts), 0.5 * ts)
    mid = _k.log_integrand_grid(nu, a, ts)
    up = _k.log_integrand_grid(nu, a, ts + step)
    dn = _k.log_integrand_grid(nu, a, ts - step)
    d2 = (up - 2.0 * mid + dn) / step**2
    slack = 64.0 * _k.EPS * (1.0 + np.abs(mid)) / step**2
    return d2, slack


def classify_shape(nu: float, a: float, t_grid=None) -> ShapeReport:
    """Locate the mode of f and test each monotone phase for log-concavity.

    The mode is where f'(t) / (t f(t)) changes sign; with nu >= 1/2 that
    statistic is decreasing, so at most one change is expected.  A grid
    showing more than one is rejected with :class:`ShapeError`.
    """
    nu = _check_nu(nu)
    a = float(a)
    if a < 0:
        raise DomainError(f"a must be >= 0, got {a}")
    ts = default_t_grid(a) if t_grid is None else _as_t(t_grid, "t_grid")
    if ts.ndim != 1 or ts.size < 64:
        raise DomainError("t_grid needs at least 64 points")
    if np.any(np.diff(ts) <= 0):
        raise DomainError("t_grid must be strictly increasing")
    if ts[0] > 0.01 or ts[-1] < a + 20.0:
        raise DomainError(f"t_grid must span [0.01, {a + 20.0:g}]")

    psi = _k.lemma2_grid(nu, a, ts)
    rising = psi > 0
    flips = np.flatnonzero(rising[1:] != rising[:-1])
    if flips.size > 1:
        raise ShapeError(
            f"f'(t)/(t f(t)) changes sign {flips.size} times on the grid "
            f"(nu={nu}, a={a}); expected at most one")
    if flips.size == 0:
        if rising[0]:
            raise ShapeError(f"f still increasing at t={ts[-1]:g}; extend the grid")
        mode: float | str = BOUNDARY
    else:
        i = int(flips[0])
        if not rising[i]:
            raise ShapeError(f"f turns from decreasing to increasing near t={ts[i]:g}")
        mode = float(_bisect(lambda x: _k.lemma2_kernel(nu, a, x), ts[i], ts[i + 1],
                             psi[i], 1e-12 * ts[i + 1]))

    d2, slack = log_second_differences(nu, a, ts)
    bad = d2 > slack
    if mode == BOUNDARY:
        rise: PhaseVerdict = "empty"
        decl: PhaseVerdict = "no" if bad.any() else "yes"
    else:
        up = ts < mode
        rise = "no" if bad[up].any() else "yes"
        decl = "no" if bad[~up].any() else "yes"
    j = int(np.argmax(d2))
    return ShapeReport(mode, rise, decl, (float(d2[j]), float(ts[j])))


# ---------------------------------------------------------------------------
# sign scans of h and l
# ---------------------------------------------------------------------------

_SCAN_KERNELS = {"h": (_k.h_grid, _k.h_kernel), "l": (_k.l_grid, _k.l_kernel)}


@dataclass(frozen=True)
class CrossingReport:
    fn: str
    nu: float
    crossings: list[tuple[float, str]] = field(default_factory=list)
    positive_found: bool = False
    witness: tuple[float, float] = (math.nan, math.nan)


def scan_sign(fn: str, nu: float, t_range=(1e-3, 1e3), n: int = 4000) -> CrossingReport:
    """Sample h or l on a log grid, bisect every sign change to 1e-12 in t.

    The largest sample is polished with a bounded scalar maximisation over
    its two neighbouring cells before ``positive_found`` is decided, so a
    narrow positive bump between grid points is still caught.
    """
    if fn not in _SCAN_KERNELS:
        raise DomainError(f"fn must be 'h' or 'l', got {fn!r}")
    nu = _check_nu(nu)
    lo, hi = (float(x) for x in t_range)
    if not 0 < lo < hi:
        raise DomainError(f"need 0 < t_lo < t_hi, got ({lo}, {hi})")
    if n < 100:
        raise DomainError(f"n must be >= 100, got {n}")
    grid_kernel, point_kernel = _SCAN_KERNELS[fn]
    ts = np.geomspace(lo, hi, n)
    vals = grid_kernel(nu, ts)

    def f(x):
        return point_kernel(nu, x)

    crossings = []
    pos = vals > 0
    for i in np.flatnonzero(pos[1:] != pos[:-1]):
        root = _bisect(f, ts[i], ts[i + 1], vals[i], 1e-12)
        crossings.append((float(root), "-+" if pos[i + 1] else "+-"))

    j = int(np.argmax(vals))
    wt, wv = float(ts[j]), float(vals[j])
    if 0 < j < n - 1:
        res = minimize_scalar(lambda x: -f(x), bounds=(ts[j - 1], ts[j + 1]),
                              method="bounded", options={"xatol": 1e-10 * ts[j]})
        if -res.fun > wv:
            wt, wv = float(res.x), float(-res.fun)
    return CrossingReport(fn, nu, crossings, bool(wv > 0), (wt, wv))
