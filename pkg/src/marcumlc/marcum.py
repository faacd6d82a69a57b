"""Generalized Marcum Q function.

Q_nu(a, b) is the survival function at b of a noncentral chi variable with
2 nu degrees of freedom and noncentrality a.  Two independent evaluators are
provided: direct quadrature of the density and the Poisson mixture of
regularized incomplete gamma functions that represents the noncentral
chi-square distribution.  With a = 0 the mixture collapses to a single
incomplete gamma term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels as _k
from .errors import ConvergenceError, DomainError
from .special_fn import EvalResult

MethodChoice = Literal["auto", "quadrature", "poisson_series", "gamma_closed_form"]
METHODS = ("auto", "quadrature", "poisson_series", "gamma_closed_form")

DEFAULT_TOL = 1e-10
TOL_RANGE = (1e-14, 1e-4)
# auto switches to quadrature once the Poisson(a^2/2) window gets this wide
POISSON_LAMBDA_MAX = 1e4
# integration runs to max(a, b) + CUTOFF; the density decays like e^{-(t-a)^2/2}
CUTOFF = 50.0
QUAD_LIMIT = 5000


@dataclass(frozen=True)
class MarcumPoint:
    nu: float
    a: float
    b: float

    def __post_init__(self):
        for name in ("nu", "a", "b"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v}")
        if self.nu <= 0:
            raise DomainError(f"nu must be > 0, got {self.nu}")
        if self.a < 0:
            raise DomainError(f"a must be >= 0, got {self.a}")
        if self.b < 0:
            raise DomainError(f"b must be >= 0, got {self.b}")


def integrand_f(nu: float, a: float, t: float, log_scale: bool = False) -> float:
    """Noncentral chi density t^nu a^(1-nu) exp(-(t^2+a^2)/2) I_{nu-1}(a t).

    At a = 0 the continuous limit t^(2nu-1) e^(-t^2/2) / (2^(nu-1) Gamma(nu))
    is used.  The log form stays finite for a t far beyond the overflow
    point of I_{nu-1}.
    """
    MarcumPoint(nu, a, 0.0)
    t = float(t)
    if not t > 0:
        raise DomainError(f"t must be > 0, got {t}")
    lf = _k.log_integrand(float(nu), float(a), t)
    return lf if log_scale else math.exp(lf)


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not TOL_RANGE[0] <= tol <= TOL_RANGE[1]:
        raise DomainError(f"tol must lie in [{TOL_RANGE[0]:g}, {TOL_RANGE[1]:g}], got {tol}")
    return tol


def _quadrature(p: MarcumPoint, tol: float) -> EvalResult:
    t_max = max(p.a, p.b) + CUTOFF
    inner = [x for x in (p.a - 10.0, p.a, p.a + 10.0) if p.b < x < t_max]
    breaks = np.array([p.b, *inner, t_max])
    params = np.array([p.nu, p.a])
    value, err, _, ok = _k.gk_adaptive(_k.K_MARCUM, params, breaks, 0.25 * tol, 0.0, QUAD_LIMIT)
    # log f has slope below -(t - a - |2nu-1|/t) past t_max
    slope = t_max - p.a - abs(2.0 * p.nu - 1.0) / t_max
    tail = math.exp(_k.log_integrand(p.nu, p.a, t_max)) / slope
    err += tail
    if not ok or err > tol:
        raise ConvergenceError(
            f"quadrature missed tol={tol:g} at {p} (error estimate {err:.3g})")
    return EvalResult(min(max(value, 0.0), 1.0), err, "quadrature")


def _poisson(p: MarcumPoint, tol: float) -> EvalResult:
    lam = 0.5 * p.a * p.a
    q, _, eq, _, _, ok = _k.poisson_mixture(p.nu, lam, 0.5 * p.b * p.b, tol / 20.0, 0.0)
    if not ok or eq > tol:
        raise ConvergenceError(
            f"Poisson series missed tol={tol:g} at {p} (error estimate {eq:.3g})")
    return EvalResult(min(q, 1.0), eq, "series")


def _closed_form(p: MarcumPoint) -> EvalResult:
    _, q, ok = _k.gamma_pq(p.nu, 0.5 * p.b * p.b)
    if not ok:
        raise ConvergenceError(f"incomplete gamma did not converge at {p}")
    return EvalResult(q, 8.0 * _k.EPS * max(q, _k.EPS), "closed_form")


def marcum_q(nu: float, a: float, b: float, method: MethodChoice = "auto",
             tol: float = DEFAULT_TOL) -> EvalResult:
    """Q_nu(a, b) with absolute error at most ``tol``.

    ``auto`` picks the incomplete gamma closed form for a = 0, the Poisson
    series while a^2/2 <= 1e4, and quadrature otherwise.
    """
    p = MarcumPoint(float(nu), float(a), float(b))
    tol = _check_tol(tol)
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    if method == "gamma_closed_form" and p.a != 0.0:
        raise DomainError("gamma_closed_form requires a = 0")
    if p.b == 0.0:
        return EvalResult(1.0, 0.0, "closed_form")
    if method == "auto":
        if p.a == 0.0:
            method = "gamma_closed_form"
        elif 0.5 * p.a * p.a <= POISSON_LAMBDA_MAX:
            method = "poisson_series"
        else:
            method = "quadrature"
    if method == "gamma_closed_form":
        return _closed_form(p)
    if method == "poisson_series":
        return _poisson(p, tol)
    return _quadrature(p, tol)


def rice_survival(a: float, b: float) -> EvalResult:
    """Survival function Q_1(a, b) of the Rice distribution."""
    return marcum_q(1.0, a, b)


def marcum_q_and_complement(nu: float, a: float, b: float, rtol: float = 1e-14):
    """(Q, 1 - Q, err_Q, err_complement), each with relative accuracy ``rtol``.

    Both tails are summed directly, so log Q and log(1 - Q) stay meaningful
    far into either tail (down to the double underflow floor).
    """
    p = MarcumPoint(float(nu), float(a), float(b))
    q, c, eq, ec, ok = _k.marcum_pair(p.nu, p.a, p.b, 1e-320, float(rtol))
    if not ok:
        raise ConvergenceError(f"Poisson series did not converge at {p}")
    return q, c, eq, ec


def marcum_q_and_complement_many(nus, as_, bs, rtol: float = 1e-14):
    """Vectorised :func:`marcum_q_and_complement` over broadcast arrays."""
    nus, as_, bs = (np.ascontiguousarray(x, dtype=float).ravel()
                    for x in np.broadcast_arrays(nus, as_, bs))
    if np.any(nus <= 0) or np.any(as_ < 0) or np.any(bs < 0):
        raise DomainError("need nu > 0, a >= 0, b >= 0")
    q, c, eq, ec, ok = _k.marcum_pair_many(nus, as_, bs, 1e-320, float(rtol))
    if not ok.all():
        i = int(np.argmin(ok))
        raise ConvergenceError(
            f"Poisson series did not converge at nu={nus[i]}, a={as_[i]}, b={bs[i]}")
    return q, c, eq, ec
