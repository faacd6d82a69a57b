"""Generalized Marcum Q function, Bessel ratios and log-concavity checks."""

from ._jit import JIT_ENABLED
from .concavity import (CrossingReport, ShapeReport, classify_shape, h, l,
                        lemma2_statistic, log_density_curvature, scan_sign)
from .errors import BracketError, ConvergenceError, DomainError, ShapeError
from .marcum import (MarcumPoint, integrand_f, marcum_q, marcum_q_and_complement,
                     rice_survival)
from .nu0 import RootResult, critical_order_fn, solve_nu0
from .special_fn import (EvalResult, bessel_i, ratio, ratio_derivative,
                         ratio_over_t_integral_oracle)

__version__ = "0.1.0"

__all__ = [
    "JIT_ENABLED", "EvalResult", "MarcumPoint", "RootResult", "ShapeReport", "CrossingReport",
    "DomainError", "ConvergenceError", "BracketError", "ShapeError",
    "bessel_i", "ratio", "ratio_derivative", "ratio_over_t_integral_oracle",
    "integrand_f", "marcum_q", "marcum_q_and_complement", "rice_survival",
    "h", "l", "log_density_curvature", "lemma2_statistic", "classify_shape", "scan_sign",
    "critical_order_fn", "solve_nu0",
]
