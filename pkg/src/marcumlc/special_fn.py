"""Modified Bessel function of the first kind and the ratio I_nu / I_{nu-1}.

All evaluations return an :class:`EvalResult` carrying the value, an
absolute error estimate and a tag naming the evaluation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import _kernels as _k
from .errors import ConvergenceError, DomainError

Method = Literal["series", "continued_fraction", "quadrature", "closed_form"]

LOG_MAX = math.log(np.finfo(float).max)


@dataclass(frozen=True)
class EvalResult:
    value: float
    abs_err: float
    method: Method

    def __float__(self) -> float:
        return self.value


def _check_real(name: str, x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


def bessel_i(nu: float, t: float, scaled: bool = False) -> EvalResult:
    """I_nu(t), or e^{-t} I_nu(t) when ``scaled`` is set.

    Orders down to -1/2 are accepted so that I_{nu-1} is available for every
    nu >= 1/2.  The unscaled value raises :class:`OverflowError` once it
    exceeds the double range; use ``scaled=True`` there.
    """
    nu = _check_real("nu", nu)
    t = _check_real("t", t)
    if t < 0.0:
        raise DomainError(f"t must be >= 0, got {t}")
    if nu < -0.5:
        raise DomainError(f"nu must be >= -1/2, got {nu}")
    if t == 0.0:
        if nu < 0.0:
            raise OverflowError(f"I_{nu}(0) is infinite")
        return EvalResult(1.0 if nu == 0.0 else 0.0, 0.0, "closed_form")
    lv, rel = _k.log_ive(nu, t)
    if not scaled:
        lv += t
        if lv > LOG_MAX:
            raise OverflowError(f"I_{nu}({t}) exceeds the double range; use scaled=True")
    value = math.exp(lv)
    return EvalResult(value, value * rel, "series")


def _ratio_method(t: float) -> Method:
    if t < _k.RATIO_SMALL_T:
        return "closed_form"
    if t <= _k.SERIES_T_MAX:
        return "series"
    return "continued_fraction"


def _check_ratio_args(nu: float, t: float) -> tuple[float, float]:
    nu = _check_real("nu", nu)
    t = _check_real("t", t)
    if t <= 0.0:
        raise DomainError(f"t must be > 0, got {t}")
    if nu < 0.5:
        raise DomainError(f"nu must be >= 1/2, got {nu}")
    return nu, t


def ratio(nu: float, t: float) -> EvalResult:
    """r_nu(t) = I_nu(t) / I_{nu-1}(t) for nu >= 1/2, t > 0.

    Power-series quotient for t <= 30, Gauss continued fraction beyond, and
    the leading term t / (2 nu) below 1e-8.
    """
    nu, t = _check_ratio_args(nu, t)
    r, rel = _k.ratio_kernel(nu, t)
    return EvalResult(r, r * rel, _ratio_method(t))


def ratio_derivative(nu: float, t: float) -> EvalResult:
    """d/dt r_nu(t) through 1 - (2 nu - 1) r / t - r^2."""
    nu, t = _check_ratio_args(nu, t)
    value = _k.ratio_derivative_kernel(nu, t)
    r, rel = _k.ratio_kernel(nu, t)
    # the identity amplifies the ratio's relative error by at most this much
    scale = (2.0 * nu - 1.0) / t * r + 2.0 * r * r + 1.0
    return EvalResult(value, scale * (rel + 4 * _k.EPS), _ratio_method(t))


def ratio_derivative_from_bessel(nu: float, t: float) -> float:
    """r'_nu(t) by the quotient rule on Bessel values and their recursions.

    Uses I'_nu = I_{nu+1} + (nu/t) I_nu and I'_{nu-1} = I_nu + ((nu-1)/t) I_{nu-1},
    which reduces to I_{nu+1}/I_{nu-1} + r/t - r^2.  This path shares no
    code with :func:`ratio_derivative` beyond the scaled Bessel kernel and is
    valid for every nu > 0.
    """
    lp, _ = _k.log_ive(nu + 1.0, t)
    lm, _ = _k.log_ive(nu - 1.0, t)
    l0, _ = _k.log_ive(nu, t)
    r = math.exp(l0 - lm)
    return math.exp(lp - lm) + r / t - r * r


def ratio_over_t_integral_oracle(nu: float, t: float, rtol: float = 1e-14) -> EvalResult:
    """r_nu(t) / t from its integral representation, by adaptive quadrature.

    With g(s, t) = (1 - s^2)^(nu - 3/2) cosh(t s),

        r_nu(t) / t = int_0^1 (1 - s^2) g ds / ((2 nu - 1) int_0^1 g ds).

    For nu < 3/2 the endpoint singularity at s = 1 is removed by
    s = 1 - u^p with p = max(2, 1 / (nu - 1/2)).  Meant as a test oracle.
    """
    nu = _check_real("nu", nu)
    t = _check_real("t", t)
    if nu <= 0.5:
        raise DomainError(f"nu must be > 1/2 for the integral representation, got {nu}")
    if t <= 0.0:
        raise DomainError(f"t must be > 0, got {t}")
    breaks = np.array([0.0, 0.5, 1.0])
    if nu < 1.5:
        power = max(2.0, 1.0 / (nu - 0.5))
        params = np.array([nu, t, power])
        den_kind, num_kind = _k.K_ORACLE_DEN_SUB, _k.K_ORACLE_NUM_SUB
    else:
        params = np.array([nu, t, 0.0])
        den_kind, num_kind = _k.K_ORACLE_DEN, _k.K_ORACLE_NUM
    den, den_err, _, ok1 = _k.gk_adaptive(den_kind, params, breaks, 0.0, rtol, 4000)
    num, num_err, _, ok2 = _k.gk_adaptive(num_kind, params, breaks, 0.0, rtol, 4000)
    if not (ok1 and ok2):
        raise ConvergenceError(f"integral representation did not converge at nu={nu}, t={t}")
    value = num / ((2.0 * nu - 1.0) * den)
    rel = num_err / num + den_err / den
    return EvalResult(value, value * rel, "quadrature")


def ratio_values(nu: float, ts) -> np.ndarray:
    """Vectorised r_nu over an array of arguments; accepts any nu > 0."""
    ts = np.asarray(ts, dtype=float)
    out = np.empty(ts.shape)
    flat = out.reshape(-1)
    for i, t in enumerate(ts.reshape(-1)):
        flat[i] = _k.ratio_kernel(float(nu), float(t))[0]
    return out
