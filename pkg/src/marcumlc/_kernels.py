"""Scalar numeric kernels.

Everything here is written in the numba ``nopython`` subset and compiled
through :func:`marcumlc._jit.njit`; with JIT disabled the same code runs as
plain Python.  Kernels never raise: failure is signalled through status
flags and the public wrappers turn those into exceptions.
"""

import math

import numpy as np

from ._jit import njit

EPS = 2.220446049250313e-16
TINY = 1e-300
LOG_2PI = math.log(2.0 * math.pi)

# series regime for I_mu; beyond this the asymptotic / mode-centred paths run
SERIES_T_MAX = 30.0
SERIES_MAX_TERMS = 500
SERIES_STOP = 1e-17


# ---------------------------------------------------------------------------
# Modified Bessel function of the first kind
# ---------------------------------------------------------------------------


@njit
def series_sum(mu, t):
    """Sum of the I_mu power series normalised so its first term is 1.

    I_mu(t) = (t/2)**mu / Gamma(mu + 1) * S.  Requires mu > -1, t >= 0.
    Returns (S, n_terms, converged).
    """
    q = 0.25 * t * t
    term = 1.0
    s = 1.0
    k = 0
    while k < SERIES_MAX_TERMS:
        term *= q / ((k + 1.0) * (k + 1.0 + mu))
        s += term
        k += 1
        if term < SERIES_STOP * s:
            return s, k + 1, True
    return s, k + 1, False


@njit
def _log_ive_asymptotic(mu, t):
    # Hankel expansion of e^{-t} I_mu(t); ok=False when it diverges before
    # reaching full precision.  Only trustworthy for t >= mu^2 / 2.
    four_mu2 = 4.0 * mu * mu
    term = 1.0
    s = 1.0
    prev = 1.0
    for k in range(1, 400):
        odd = 2.0 * k - 1.0
        term *= -(four_mu2 - odd * odd) / (8.0 * k * t)
        aterm = abs(term)
        s += term
        if aterm <= SERIES_STOP * abs(s):
            if s <= 0.0:
                return 0.0, k, False
            return math.log(s) - 0.5 * (LOG_2PI + math.log(t)), k, True
        if aterm > prev and odd * odd > four_mu2:
            return 0.0, k, False
        prev = aterm
    return 0.0, 400, False


@njit
def _log_ive_centred(mu, t):
    # Power series summed outward from its largest term; valid for any t > 0.
    q = 0.25 * t * t
    kstar = 0.5 * (math.sqrt(mu * mu + t * t) - mu)
    m = int(kstar) if kstar > 0.0 else 0
    log_peak = ((2.0 * m + mu) * math.log(0.5 * t) - math.lgamma(m + 1.0)
                - math.lgamma(m + mu + 1.0) - t)
    s = 1.0
    n = 1
    term = 1.0
    k = m
    while True:
        term *= q / ((k + 1.0) * (k + 1.0 + mu))
        s += term
        k += 1
        n += 1
        if term < SERIES_STOP * s or n > 200000:
            break
    term = 1.0
    k = m
    while k > 0:
        term *= k * (k + mu) / q
        s += term
        k -= 1
        n += 1
        if term < SERIES_STOP * s:
            break
    return log_peak + math.log(s), n


@njit
def log_ive(mu, t):
    """log(e^{-t} I_mu(t)) for mu > -1, t >= 0.

    Returns (value, relative_error_estimate).  At t == 0 the value is
    0, -inf or +inf according to the sign of mu.
    """
    if t == 0.0:
        if mu == 0.0:
            return 0.0, 0.0
        if mu > 0.0:
            return -math.inf, 0.0
        return math.inf, 0.0
    if t <= SERIES_T_MAX:
        s, n, ok = series_sum(mu, t)
        lead = mu * math.log(0.5 * t) - math.lgamma(mu + 1.0) - t
        err = (n + abs(lead) + 2.0) * EPS
        if ok:
            return lead + math.log(s), err
    if 2.0 * t >= mu * mu:
        v, n, ok = _log_ive_asymptotic(mu, t)
        if ok:
            return v, (n + 4.0) * 4.0 * EPS
    v, n = _log_ive_centred(mu, t)
    mag = abs(mu * math.log(t)) + 2.0 * t + abs(mu) + 10.0
    return v, (math.sqrt(n) + mag) * EPS


# ---------------------------------------------------------------------------
# Bessel ratio r_nu(t) = I_nu(t) / I_{nu-1}(t)
# ---------------------------------------------------------------------------

RATIO_SMALL_T = 1e-8
CF_MAX_ITER = 1000000


@njit
def _ratio_cf(nu, t):
    # Gauss continued fraction 1 / (2nu/t + 1 / (2(nu+1)/t + ...)), modified Lentz.
    f = 2.0 * nu / t
    if f == 0.0:
        f = TINY
    c = f
    d = 0.0
    for j in range(1, CF_MAX_ITER):
        b = 2.0 * (nu + j) / t
        d = b + d
        if d == 0.0:
            d = TINY
        c = b + 1.0 / c
        if c == 0.0:
            c = TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 0.5 * EPS:
            return 1.0 / f, j, True
    return 1.0 / f, CF_MAX_ITER, False


@njit
def _ratio_raw(nu, t):
    if t < RATIO_SMALL_T:
        return t / (2.0 * nu), EPS
    if t <= SERIES_T_MAX:
        s_top, n1, ok1 = series_sum(nu, t)
        s_bot, n2, ok2 = series_sum(nu - 1.0, t)
        if ok1 and ok2:
            return 0.5 * t / nu * s_top / s_bot, (n1 + n2 + 4.0) * EPS
    r, n, ok = _ratio_cf(nu, t)
    if ok:
        return r, (math.sqrt(n) + 4.0) * 4.0 * EPS
    lt, e1 = log_ive(nu, t)
    lb, e2 = log_ive(nu - 1.0, t)
    return math.exp(lt - lb), e1 + e2


@njit
def ratio_kernel(nu, t):
    """r_nu(t) for nu > 0, t > 0.  Returns (value, relative_error_estimate)."""
    r, rel = _ratio_raw(nu, t)
    # r_nu < 1 for nu >= 1/2; rounding can push the result a few ulps over
    if nu >= 0.5 and r > 1.0:
        r = 1.0
    return r, rel


@njit
def ratio_derivative_kernel(nu, t):
    """r'_nu(t) from the closed identity 1 - (2nu-1)/t r - r^2."""
    if t < RATIO_SMALL_T:
        return 1.0 / (2.0 * nu)
    r, _ = ratio_kernel(nu, t)
    return 1.0 - (2.0 * nu - 1.0) / t * r - r * r


@njit
def h_kernel(nu, t):
    r, _ = ratio_kernel(nu, t)
    c = 2.0 * nu - 1.0
    return 1.0 - c / (t * t) - c / t * r - r * r


@njit
def l_kernel(nu, t):
    r, _ = ratio_kernel(nu, t)
    return r - (3.0 - 2.0 * nu) / t


@njit
def lemma2_kernel(nu, a, t):
    # f'(t) / (t f(t)); a * r(at) / t -> a^2 / (2 nu) as a -> 0, and 0 at a = 0
    base = (2.0 * nu - 1.0) / (t * t) - 1.0
    if a == 0.0:
        return base
    r, _ = ratio_kernel(nu, a * t)
    return base + a * r / t


@njit
def curvature_kernel(nu, a, t):
    return -(2.0 * nu - 1.0) / (t * t) - 1.0 + a * a * ratio_derivative_kernel(nu, a * t)


@njit
def h_grid(nu, ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = h_kernel(nu, ts[i])
    return out


@njit
def l_grid(nu, ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = l_kernel(nu, ts[i])
    return out


@njit
def lemma2_grid(nu, a, ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = lemma2_kernel(nu, a, ts[i])
    return out


@njit
def curvature_grid(nu, a, ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = curvature_kernel(nu, a, ts[i])
    return out


# ---------------------------------------------------------------------------
# Noncentral chi density (the Marcum integrand)
# ---------------------------------------------------------------------------


@njit
def log_integrand(nu, a, t):
    """log f(t) with f the noncentral chi density of 2nu degrees of freedom."""
    if a == 0.0:
        return ((2.0 * nu - 1.0) * math.log(t) - 0.5 * t * t
                - (nu - 1.0) * math.log(2.0) - math.lgamma(nu))
    lv, _ = log_ive(nu - 1.0, a * t)
    d = t - a
    return nu * math.log(t) - (nu - 1.0) * math.log(a) - 0.5 * d * d + lv


@njit
def log_integrand_grid(nu, a, ts):
    out = np.empty(ts.shape[0])
    for i in range(ts.shape[0]):
        out[i] = log_integrand(nu, a, ts[i])
    return out


# ---------------------------------------------------------------------------
# Adaptive Gauss-Kronrod (7/15) quadrature
# ---------------------------------------------------------------------------

_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])

# integrand selectors for integrand()
K_MARCUM = 0
K_ORACLE_DEN = 1
K_ORACLE_NUM = 2
K_ORACLE_DEN_SUB = 3
K_ORACLE_NUM_SUB = 4
K_POLY = 5


@njit
def _scaled_cosh(t, s):
    # cosh(t s) e^{-t}, finite for any t >= 0, 0 <= s <= 1
    return 0.5 * (math.exp(t * (s - 1.0)) + math.exp(-t * (s + 1.0)))


@njit
def integrand(kind, x, p):
    """Integrands known to :func:`gk_adaptive`, parameters packed in ``p``."""
    if kind == K_MARCUM:
        return math.exp(log_integrand(p[0], p[1], x))
    if kind == K_ORACLE_DEN:
        return (1.0 - x * x) ** (p[0] - 1.5) * _scaled_cosh(p[1], x)
    if kind == K_ORACLE_NUM:
        return (1.0 - x * x) ** (p[0] - 0.5) * _scaled_cosh(p[1], x)
    if kind == K_ORACLE_DEN_SUB or kind == K_ORACLE_NUM_SUB:
        nu, t, pw = p[0], p[1], p[2]
        up = x ** pw
        s = 1.0 - up
        if kind == K_ORACLE_DEN_SUB:
            return (pw * x ** (pw * (nu - 0.5) - 1.0) * (2.0 - up) ** (nu - 1.5)
                    * _scaled_cosh(t, s))
        return (pw * x ** (pw * (nu + 0.5) - 1.0) * (2.0 - up) ** (nu - 0.5)
                * _scaled_cosh(t, s))
    # K_POLY: x ** p[0], used to test the rule itself
    return x ** p[0]


@njit
def _gk15(kind, p, lo, hi):
    c = 0.5 * (lo + hi)
    hw = 0.5 * (hi - lo)
    fc = integrand(kind, c, p)
    rk = fc * _WGK[7]
    rg = fc * _WG[3]
    for j in range(7):
        dx = hw * _XGK[j]
        f1 = integrand(kind, c - dx, p)
        f2 = integrand(kind, c + dx, p)
        rk += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            rg += _WG[j // 2] * (f1 + f2)
    rk *= hw
    rg *= hw
    # plain Gauss/Kronrod difference: pessimistic, never optimistic
    return rk, abs(rk - rg)


@njit
def gk_adaptive(kind, p, breaks, atol, rtol, limit):
    """Globally adaptive GK15 over the partition given by ``breaks``.

    Returns (value, abs_err_estimate, n_intervals, converged).
    """
    nb = breaks.shape[0] - 1
    cap = max(limit, nb + 1)
    los = np.empty(cap)
    his = np.empty(cap)
    vals = np.empty(cap)
    errs = np.empty(cap)
    n = 0
    for i in range(nb):
        v, e = _gk15(kind, p, breaks[i], breaks[i + 1])
        los[n] = breaks[i]
        his[n] = breaks[i + 1]
        vals[n] = v
        errs[n] = e
        n += 1
    while True:
        total = 0.0
        etot = 0.0
        worst = 0
        for i in range(n):
            total += vals[i]
            etot += errs[i]
            if errs[i] > errs[worst]:
                worst = i
        if etot <= max(atol, rtol * abs(total)):
            return total, etot, n, True
        if n >= cap:
            return total, etot, n, False
        lo = los[worst]
        hi = his[worst]
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return total, etot, n, False
        v1, e1 = _gk15(kind, p, lo, mid)
        v2, e2 = _gk15(kind, p, mid, hi)
        his[worst] = mid
        vals[worst] = v1
        errs[worst] = e1
        los[n] = mid
        his[n] = hi
        vals[n] = v2
        errs[n] = e2
        n += 1


# ---------------------------------------------------------------------------
# Regularized incomplete gamma and the Poisson mixture
# ---------------------------------------------------------------------------

GAMMA_MAX_ITER = 100000


@njit
def gamma_pq(s, x):
    """Regularized lower and upper incomplete gamma (P, Q) for s > 0, x >= 0.

    The smaller of the two is computed directly, so both carry relative
    accuracy.  Returns (P, Q, converged).
    """
    if x <= 0.0:
        return 0.0, 1.0, True
    lp = s * math.log(x) - x - math.lgamma(s)
    if x < s + 1.0:
        ap = s
        term = 1.0 / s
        acc = term
        for _ in range(GAMMA_MAX_ITER):
            ap += 1.0
            term *= x / ap
            acc += term
            if term < acc * SERIES_STOP:
                p = acc * math.exp(lp)
                return p, 1.0 - p if p < 1.0 else 0.0, True
        p = acc * math.exp(lp)
        return p, 1.0 - p, False
    b = x + 1.0 - s
    c = 1.0 / TINY
    d = 1.0 / b
    hcf = d
    for i in range(1, GAMMA_MAX_ITER):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < TINY:
            d = TINY
        c = b + an / c
        if abs(c) < TINY:
            c = TINY
        d = 1.0 / d
        delta = d * c
        hcf *= delta
        if abs(delta - 1.0) < EPS:
            q = math.exp(lp) * hcf
            return 1.0 - q, q, True
    q = math.exp(lp) * hcf
    return 1.0 - q, q, False


POISSON_MAX_TERMS = 200000


@njit
def poisson_mixture(nu, lam, x, atol, rtol):
    """Sum_k Pois(k; lam) * (Q(nu+k, x), P(nu+k, x)).

    Summed outward from the modal index.  Each direction stops once the
    neglected Poisson weight, times the largest incomplete-gamma factor it
    can multiply, is below max(atol, rtol * partial sum) for both sums.
    Returns (Q, P, errQ, errP, n_terms, converged).
    """
    m = int(math.floor(lam))
    wm = math.exp(-lam + m * math.log(lam) - math.lgamma(m + 1.0)) if lam > 0.0 else 1.0
    pk, qk, ok = gamma_pq(nu + m, x)
    sq = wm * qk
    sp = wm * pk
    n = 1
    good = ok
    # upward: Q factors grow toward 1, P factors shrink
    w = wm
    k = m
    eq_up = 0.0
    ep_up = 0.0
    while True:
        k += 1
        w *= lam / k
        pk, qk, ok = gamma_pq(nu + k, x)
        good = good and ok
        sq += w * qk
        sp += w * pk
        n += 1
        rho = lam / (k + 1.0)
        rem = w * rho / (1.0 - rho) if rho < 1.0 else math.inf
        eq_up = rem
        ep_up = rem * pk
        if eq_up <= max(atol, rtol * sq) and ep_up <= max(atol, rtol * sp):
            break
        if w == 0.0 or n > POISSON_MAX_TERMS:
            good = good and w == 0.0
            break
    # downward: P factors grow toward 1, Q factors shrink
    w = wm
    k = m
    eq_dn = 0.0
    ep_dn = 0.0
    while k > 0:
        w *= k / lam
        k -= 1
        pk, qk, ok = gamma_pq(nu + k, x)
        good = good and ok
        sq += w * qk
        sp += w * pk
        n += 1
        if k == 0:
            eq_dn = 0.0
            ep_dn = 0.0
            break
        rho = k / lam
        rem = w * rho / (1.0 - rho)
        eq_dn = rem * qk
        ep_dn = rem
        if eq_dn <= max(atol, rtol * sq) and ep_dn <= max(atol, rtol * sp):
            break
        if w == 0.0 or n > POISSON_MAX_TERMS:
            good = good and w == 0.0
            break
    sq = min(sq, 1.0)
    sp = min(sp, 1.0)
    round_q = 4.0 * n * EPS * sq
    round_p = 4.0 * n * EPS * sp
    return sq, sp, eq_up + eq_dn + round_q, ep_up + ep_dn + round_p, n, good


@njit
def marcum_pair(nu, a, b, atol, rtol):
    """(Q_nu(a, b), 1 - Q_nu(a, b)) with errors, via closed form or Poisson mixture.

    Returns (Q, P, errQ, errP, converged).
    """
    x = 0.5 * b * b
    if b == 0.0:
        return 1.0, 0.0, 0.0, 0.0, True
    if a == 0.0:
        p, q, ok = gamma_pq(nu, x)
        return q, p, 8.0 * EPS * q, 8.0 * EPS * p, ok
    q, p, eq, ep, n, ok = poisson_mixture(nu, 0.5 * a * a, x, atol, rtol)
    return q, p, eq, ep, ok


@njit
def marcum_pair_many(nus, as_, bs, atol, rtol):
    n = nus.shape[0]
    qs = np.empty(n)
    ps = np.empty(n)
    eqs = np.empty(n)
    eps_ = np.empty(n)
    oks = np.empty(n, dtype=np.bool_)
    for i in range(n):
        q, p, eq, ep, ok = marcum_pair(nus[i], as_[i], bs[i], atol, rtol)
        qs[i] = q
        ps[i] = p
        eqs[i] = eq
        eps_[i] = ep
        oks[i] = ok
    return qs, ps, eqs, eps_, oks
