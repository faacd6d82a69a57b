"""The critical order nu_0.

nu_0 is the unique zero in (1/2, 3/2) of

    G(nu) = r_nu(sqrt(5 - 2nu)) - (3 - 2nu) / sqrt(5 - 2nu),

the smallest order for which the noncentral chi density is log-concave
for every noncentrality.  G is increasing on [1/2, 3/2], so a bracketing
method always converges.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels as _k
from .errors import BracketError, ConvergenceError, DomainError

MIN_TOL = 1e-13
# bisection hands over to secant steps once the bracket is this narrow
SECANT_WIDTH = 1e-2


@dataclass(frozen=True)
class RootResult:
    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float]


def critical_order_fn(nu: float) -> float:
    nu = float(nu)
    if not 0.5 <= nu <= 1.5:
        raise DomainError(f"nu must lie in [1/2, 3/2], got {nu}")
    s = math.sqrt(5.0 - 2.0 * nu)
    return _k.ratio_kernel(nu, s)[0] - (3.0 - 2.0 * nu) / s


def solve_nu0(tol: float = 1e-12, max_iter: int = 200,
              bracket: tuple[float, float] = (0.5, 1.5)) -> RootResult:
    """Root of :func:`critical_order_fn` with |G(root)| <= tol.

    Bisection narrows ``bracket`` to width 1e-2, then secant steps take
    over; a secant step that leaves the current bracket is replaced by a
    bisection step.  Iteration stops once |G| <= tol and the last step moved
    the root by at most tol.
    """
    tol = float(tol)
    if not tol >= MIN_TOL:
        raise DomainError(f"tol must be >= {MIN_TOL:g}, got {tol}")
    lo, hi = (float(x) for x in bracket)
    if not lo < hi:
        raise DomainError(f"bracket must satisfy lo < hi, got {bracket}")
    f_lo, f_hi = critical_order_fn(lo), critical_order_fn(hi)
    if not (f_lo < 0.0 < f_hi):
        raise BracketError(
            f"G does not change sign on [{lo}, {hi}]: G(lo)={f_lo:.3g}, G(hi)={f_hi:.3g}")

    it = 0
    while hi - lo > SECANT_WIDTH:
        it += 1
        mid = 0.5 * (lo + hi)
        fm = critical_order_fn(mid)
        if fm < 0:
            lo, f_lo = mid, fm
        else:
            hi, f_hi = mid, fm

    x0, f0, x1, f1 = lo, f_lo, hi, f_hi
    while it < max_iter:
        it += 1
        x2 = x1 - f1 * (x1 - x0) / (f1 - f0) if f1 != f0 else 0.5 * (lo + hi)
        if not lo < x2 < hi:
            x2 = 0.5 * (lo + hi)
        f2 = critical_order_fn(x2)
        if f2 == 0.0 or (abs(f2) <= tol and abs(x2 - x1) <= tol):
            return RootResult(x2, abs(f2), it, (lo, hi))
        if f2 < 0:
            lo, f_lo = x2, f2
        else:
            hi, f_hi = x2, f2
        if hi - lo <= 2 * _k.EPS * hi:
            if abs(f2) <= tol:
                return RootResult(x2, abs(f2), it, (lo, hi) if lo < x2 < hi else bracket)
            break
        x0, f0, x1, f1 = x1, f1, x2, f2
    raise ConvergenceError(f"nu_0 search did not reach |G| <= {tol:g} in {max_iter} iterations")
