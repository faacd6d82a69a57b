"""Grid verification of the log-concavity results.

Every check returns a :class:`ScanReport` made of cells.  A cell is one
line scan (for example Q_nu(a, .) over a b-grid at fixed nu, a) and gets
one of four verdicts:

``pass`` / ``fail``
    the property is claimed on this cell and does / does not hold;
``expected_violation``
    the cell lies outside the hypothesis where a violation is predicted,
    and one was found (not finding it is a ``fail``);
``exploratory``
    nothing is claimed (open problems, regions no result covers); the
    outcome is recorded but never affects the verdict.

Log-concavity along an axis is tested with second differences of log
values on a uniform grid.  A window is a violation when its second
difference exceeds ``slack``, by default ``1e-9 + 4 * max relative
evaluation error in the window``; every apparent violation is recomputed
with a ten times tighter tolerance before it is reported.

CSV rows carry ``property_id, nu, a, b_lo, b_hi, worst_margin, verdict``.
``b_lo``/``b_hi`` always bound the scanned axis.  When that axis is nu or
a, the corresponding column holds the location of the worst window;
parameters that fit no column are appended to ``property_id`` in brackets.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels as _k
from .concavity import scan_sign
from .errors import DomainError
from .marcum import marcum_q_and_complement_many
from .nu0 import solve_nu0

UNDERFLOW = 1e-300
BASE_SLACK = 1e-9
RTOL = 1e-14

DEFAULT_NU = (0.3, 0.5, 0.6, None, 0.9, 1.0, 1.5, 2.0, 3.0, 7.0)  # None -> nu_0
DEFAULT_A = (0.0, 0.5, 1.0, 2.0, 5.0, 10.0)
DEFAULT_N = 400

PROPERTIES = (
    "logconcave-q-b",      # Q_nu(a, b) in b
    "logconcave-1mq-b",    # 1 - Q_nu(a, b) in b
    "finner-roters",       # six statements in the squared parameterization
    "tp2",                 # cosh kernel of the ratio's integral form
    "small-b",             # -log Q_nu(0, b) ~ C b^(2 nu)
    "curvature-bound",     # d^2 log f <= a^2 - 1 for nu >= 1/2, a <= 1
    "psi-monotone",        # f'(t)/(t f(t)) decreasing for nu >= 1/2
    "h-sign",              # h_nu <= 0 iff nu >= nu_0
    "rice",                # Rice pdf, cdf, survival function log-concave
)

CSV_COLUMNS = ("property_id", "nu", "a", "b_lo", "b_hi", "worst_margin", "verdict")


_NU0: float | None = None


def nu0() -> float:
    global _NU0
    if _NU0 is None:
        _NU0 = solve_nu0(1e-13).root
    return _NU0


@dataclass
class ScanConfig:
    property_id: str
    nu_grid: tuple = ()
    a_grid: tuple = ()
    b_grid: tuple = ()
    second_difference_step: float | None = None
    slack: float | None = None
    t1: float | None = None
    t2: float | None = None

    def __post_init__(self):
        if self.property_id not in PROPERTIES:
            raise DomainError(f"unknown property {self.property_id!r}")
        for name in ("nu_grid", "a_grid", "b_grid"):
            setattr(self, name, tuple(float(x) for x in getattr(self, name)))


@dataclass
class Cell:
    property_id: str
    nu: float
    a: float
    b_lo: float
    b_hi: float
    worst_margin: float
    verdict: str

    def __post_init__(self):
        for name in ("nu", "a", "b_lo", "b_hi", "worst_margin"):
            setattr(self, name, float(getattr(self, name)))

    def row(self) -> list[str]:
        return [self.property_id] + [_fmt(getattr(self, c)) for c in CSV_COLUMNS[1:-1]] + [self.verdict]


@dataclass
class ScanReport:
    property_id: str
    cells_checked: int = 0
    violations: list[tuple[Cell, float]] = field(default_factory=list)
    worst_margin: float = -math.inf
    verdict: str = "exploratory"
    cells: list[Cell] = field(default_factory=list)
    skipped: int = 0
    error: str | None = None

    def add(self, cell: Cell) -> None:
        self.cells.append(cell)
        self.cells_checked += 1
        if cell.verdict in ("pass", "fail"):
            self.worst_margin = max(self.worst_margin, cell.worst_margin)
        if cell.verdict == "fail":
            self.violations.append((cell, cell.worst_margin))

    def finish(self) -> "ScanReport":
        asserted = any(c.verdict in ("pass", "fail", "expected_violation") for c in self.cells)
        if self.error is not None:
            self.verdict = "error"
        elif self.violations:
            self.verdict = "fail"
        elif asserted:
            self.verdict = "pass"
        else:
            self.verdict = "exploratory"
        return self

    def summary(self) -> dict:
        counts: dict[str, int] = {}
        for c in self.cells:
            counts[c.verdict] = counts.get(c.verdict, 0) + 1
        return {
            "property_id": self.property_id,
            "verdict": self.verdict,
            "cells_checked": self.cells_checked,
            "violations": len(self.violations),
            "worst_margin": None if not math.isfinite(self.worst_margin) else self.worst_margin,
            "skipped_windows": self.skipped,
            "cell_verdicts": dict(sorted(counts.items())),
            "error": self.error,
        }


def _fmt(x: float) -> str:
    return format(x, ".17g")


# ---------------------------------------------------------------------------
# second-difference machinery
# ---------------------------------------------------------------------------


def _log_values(kind: str, nus, as_, bs, rtol: float):
    q, c, eq, ec = marcum_q_and_complement_many(nus, as_, bs, rtol)
    v, e = (q, eq) if kind == "q" else (c, ec)
    with np.errstate(divide="ignore", invalid="ignore"):
        logv = np.log(v)
        rel = np.where(v > 0, e / v, np.inf)
    return v, logv, rel


def _second_difference_margins(kind, nus, as_, bs, slack=None, rtol=RTOL):
    """Margins d2 - slack for every interior window of a uniform line.

    Returns (margins, usable mask).  Windows with a value below the
    underflow floor are unusable; apparent violations are re-evaluated at
    rtol / 10 and kept only if they survive.
    """
    nus, as_, bs = np.broadcast_arrays(*(np.asarray(x, dtype=float) for x in (nus, as_, bs)))
    v, logv, rel = _log_values(kind, nus, as_, bs, rtol)
    ok = v >= UNDERFLOW
    usable = ok[:-2] & ok[1:-1] & ok[2:]
    with np.errstate(invalid="ignore"):  # -inf logs sit in unusable windows
        d2 = logv[:-2] + logv[2:] - 2.0 * logv[1:-1]
    if slack is None:
        win_rel = np.maximum(np.maximum(rel[:-2], rel[1:-1]), rel[2:])
        s = BASE_SLACK + 4.0 * win_rel
    else:
        s = np.full(d2.shape, float(slack))
    with np.errstate(invalid="ignore"):
        margins = np.where(usable, d2 - s, -np.inf)
    for i in np.flatnonzero(margins > 0):
        sl = slice(i, i + 3)
        v2, lv2, rel2 = _log_values(kind, nus[sl], as_[sl], bs[sl], rtol / 10)
        d2b = lv2[0] + lv2[2] - 2.0 * lv2[1]
        sb = BASE_SLACK + 4.0 * rel2.max() if slack is None else float(slack)
        margins[i] = d2b - sb
    return margins, usable


def _uniform(grid, name):
    g = np.asarray(grid, dtype=float)
    if g.size < 3:
        raise DomainError(f"{name} needs at least 3 points")
    d = np.diff(g)
    if np.any(d <= 0) or np.ptp(d) > 1e-9 * max(1.0, abs(g).max()):
        raise DomainError(f"{name} must be uniform and increasing")
    return g


def _nu_default(nu_grid):
    return tuple(nu0() if x is None else x for x in nu_grid) if nu_grid else \
        tuple(nu0() if x is None else x for x in DEFAULT_NU)


def default_b_grid(a: float, n: int = DEFAULT_N) -> np.ndarray:
    return np.linspace(0.0, a + 10.0, n)


def _cell_verdict(claimed: bool, expect_violation: bool, margin: float) -> str:
    if claimed:
        return "fail" if margin > 0 else "pass"
    if expect_violation:
        return "expected_violation" if margin > 0 else "fail"
    return "exploratory"


def _worst(margins):
    return float(margins.max()) if margins.size else -math.inf


# ---------------------------------------------------------------------------
# Q and 1 - Q in b
# ---------------------------------------------------------------------------


def _b_axis_scan(config: ScanConfig, kind: str, classify) -> ScanReport:
    rep = ScanReport(config.property_id)
    nus = _nu_default(config.nu_grid)
    as_ = config.a_grid or DEFAULT_A
    for nu in nus:
        if nu <= 0:
            raise DomainError(f"nu must be > 0, got {nu}")
        for a in as_:
            if a < 0:
                raise DomainError(f"a must be >= 0, got {a}")
            bs = _uniform(config.b_grid, "b_grid") if config.b_grid else default_b_grid(a)
            margins, usable = _second_difference_margins(kind, nu, a, bs, config.slack)
            rep.skipped += int((~usable).sum())
            claimed, expect = classify(nu, a)
            m = _worst(margins)
            rep.add(Cell(config.property_id, nu, a, bs[0], bs[-1], m,
                         _cell_verdict(claimed, expect, m)))
    return rep.finish()


def check_logconcave_Q_in_b(config: ScanConfig) -> ScanReport:
    """Q_nu(a, b) log-concave in b: claimed for nu >= 1/2, and for
    nu < 1/2 with a = 0 a violation near b = 0 is expected."""
    def classify(nu, a):
        return nu >= 0.5, nu < 0.5 and a == 0.0
    return _b_axis_scan(config, "q", classify)


def check_logconcave_oneminusQ_in_b(config: ScanConfig) -> ScanReport:
    """1 - Q_nu(a, b) log-concave in b: claimed when nu >= 1/2 and a <= 1, or
    nu >= nu_0; the strip 1/2 <= nu < nu_0, a > 1 is an open problem."""
    n0 = nu0()

    def classify(nu, a):
        return (nu >= 0.5 and a <= 1.0) or nu >= n0, False
    return _b_axis_scan(config, "cdf", classify)


# ---------------------------------------------------------------------------
# Finner-Roters statements, squared parameterization
# ---------------------------------------------------------------------------

FR_B_FIXED = (0.5, 2.0, 8.0, 30.0)
FR_NU_AXIS = (0.2, 5.0)
FR_A_AXIS = (0.0, 100.0)


def check_finner_roters(config: ScanConfig) -> ScanReport:
    """Six log-concavity statements for F = Q_nu(sqrt A, sqrt B).

    1 - F in B (nu > 0), in nu (nu > 0), in A (A >= 0); F in B (nu >= 1),
    in nu (nu >= 1/2), in A (A >= 0).  Grids here are in A and B directly:
    ``a_grid`` holds A values, ``b_grid`` B values.
    """
    pid = config.property_id
    rep = ScanReport(pid)
    nus = _nu_default(config.nu_grid)
    big_a = config.a_grid or tuple(x * x for x in DEFAULT_A)
    n = DEFAULT_N

    def add_line(tag, kind, nu_v, a_v, b_v, axis, claimed_fn):
        sq_a = np.sqrt(np.asarray(a_v, dtype=float))
        sq_b = np.sqrt(np.asarray(b_v, dtype=float))
        margins, usable = _second_difference_margins(kind, nu_v, sq_a, sq_b, config.slack)
        rep.skipped += int((~usable).sum())
        ax = np.asarray({"b": b_v, "nu": nu_v, "a": a_v}[axis], dtype=float)
        centre = ax[1:-1]
        claim = np.array([claimed_fn(lo, hi) for lo, hi in zip(ax[:-2], ax[2:])])
        for is_claimed in (True, False):
            sel = claim == is_claimed
            if not sel.any():
                continue
            m = margins[sel]
            worst = _worst(m)
            where = float(centre[sel][int(np.argmax(m))]) if m.size else math.nan
            nu_col = float(np.atleast_1d(nu_v)[0]) if axis != "nu" else where
            a_col = float(np.atleast_1d(a_v)[0]) if axis != "a" else where
            lo, hi = float(ax[:-2][sel][0]), float(ax[2:][sel][-1])
            rep.add(Cell(f"{pid}/{tag}", nu_col, a_col, lo, hi, worst,
                         _cell_verdict(is_claimed, False, worst)))

    always = lambda lo, hi: True  # noqa: E731
    for nu in nus:
        for big in big_a:
            bs = _uniform(config.b_grid, "b_grid") if config.b_grid else \
                np.linspace(0.0, (math.sqrt(big) + 10.0) ** 2, n)
            add_line("1mq-in-b", "cdf", nu, big, bs, "b", always)
            add_line("q-in-b", "q", nu, big, bs, "b", lambda lo, hi, nu=nu: nu >= 1.0)
    nu_axis = np.linspace(*FR_NU_AXIS, n)
    for big in big_a:
        for b_fixed in FR_B_FIXED:
            add_line(f"1mq-in-nu[b={b_fixed:g}]", "cdf", nu_axis, big, b_fixed, "nu", always)
            add_line(f"q-in-nu[b={b_fixed:g}]", "q", nu_axis, big, b_fixed, "nu",
                     lambda lo, hi: lo >= 0.5)
    a_axis = np.linspace(*FR_A_AXIS, n)
    for nu in nus:
        for b_fixed in FR_B_FIXED:
            add_line(f"1mq-in-a[b={b_fixed:g}]", "cdf", nu, a_axis, b_fixed, "a", always)
            add_line(f"q-in-a[b={b_fixed:g}]", "q", nu, a_axis, b_fixed, "a", always)
    return rep.finish()


# ---------------------------------------------------------------------------
# TP2 kernel and small-b asymptotics
# ---------------------------------------------------------------------------


def _log_cosh(x):
    x = np.abs(x)
    return x + np.log1p(np.exp(-2.0 * x)) - math.log(2.0)


def log_tp2_kernel(s, t, nu: float = 1.0):
    """log g(s, t) = (nu - 3/2) log(1 - s^2) + log cosh(t s)."""
    s = np.asarray(s, dtype=float)
    return (nu - 1.5) * np.log1p(-s * s) + _log_cosh(t * s)


def check_tp2_kernel(t1: float, t2: float, s_grid=None, nu: float = 1.0,
                     slack: float = 1e-12) -> ScanReport:
    """g(s, t2) / g(s, t1) nondecreasing in s on ``s_grid`` for t1 <= t2."""
    t1, t2 = float(t1), float(t2)
    if not 0 < t1 <= t2:
        raise DomainError(f"need 0 < t1 <= t2, got t1={t1}, t2={t2}")
    s = np.linspace(0.0, 1.0, 202)[1:-1] if s_grid is None else np.asarray(s_grid, dtype=float)
    if s.size < 2 or np.any((s <= 0) | (s >= 1)) or np.any(np.diff(s) <= 0):
        raise DomainError("s_grid must be increasing inside (0, 1)")
    d = log_tp2_kernel(s, t2, nu) - log_tp2_kernel(s, t1, nu)
    inc = np.diff(d)
    margin = float((-inc).max() - slack)
    pid = f"tp2[t1={t1:g},t2={t2:g}]"
    rep = ScanReport(pid)
    rep.add(Cell(pid, nu, math.nan, float(s[0]), float(s[-1]), margin,
                 _cell_verdict(True, False, margin)))
    return rep.finish()


def small_b_ratios(nu: float, b_grid) -> np.ndarray:
    """-log Q_nu(0, b) / (C b^(2 nu)) with C = 2^-nu / Gamma(nu + 1)."""
    b = np.asarray(b_grid, dtype=float)
    log_c = -nu * math.log(2.0) - math.lgamma(nu + 1.0)
    out = np.empty(b.shape)
    for i, bi in enumerate(b.ravel()):
        p, _, _ = _k.gamma_pq(nu, 0.5 * bi * bi)
        out.flat[i] = -math.log1p(-p) / math.exp(log_c + 2.0 * nu * math.log(bi))
    return out


def check_small_b_asymptotic(nu: float, b_grid=None) -> ScanReport:
    """Ratio within 2% of 1 at the smallest b, deviation shrinking toward b = 0."""
    nu = float(nu)
    if nu <= 0:
        raise DomainError(f"nu must be > 0, got {nu}")
    b = np.geomspace(0.2, 1e-3, 24) if b_grid is None else np.asarray(b_grid, dtype=float)
    if b.size < 2 or np.any(b <= 0) or np.any(b > 0.2) or np.any(np.diff(b) >= 0):
        raise DomainError("b_grid must decrease toward 0 inside (0, 0.2]")
    dev = np.abs(small_b_ratios(nu, b) - 1.0)
    growth = float(np.diff(dev).max())  # > 0 means the deviation grew toward 0
    margin = max(float(dev[-1]) - 0.02, growth - 1e-12)
    rep = ScanReport("small-b")
    rep.add(Cell("small-b", nu, 0.0, float(b[-1]), float(b[0]), margin,
                 _cell_verdict(True, False, margin)))
    return rep.finish()


# ---------------------------------------------------------------------------
# density diagnostics and the Rice distribution
# ---------------------------------------------------------------------------

T_GRID = (1e-3, 60.0)


def _t_grid(n=512):
    return np.geomspace(*T_GRID, n)


def check_curvature_bound(config: ScanConfig) -> ScanReport:
    """d^2/dt^2 log f <= a^2 - 1 <= 0 for nu >= 1/2, 0 < a <= 1.

    At nu = 1/2 with a > 1 the curvature tends to a^2 - 1 > 0 as t -> 0, so
    a positive value is expected there.
    """
    pid = config.property_id
    rep = ScanReport(pid)
    ts = _t_grid()
    slack = 1e-10 if config.slack is None else config.slack
    for nu in _nu_default(config.nu_grid):
        for a in config.a_grid or (0.25, 0.5, 1.0, 1.5, 2.0):
            if a <= 0:
                continue
            c = _k.curvature_grid(nu, a, ts)
            if nu >= 0.5 and a <= 1.0:
                m = float((c - (a * a - 1.0)).max() - slack)
                m = max(m, float(c.max() - slack))
                verdict = _cell_verdict(True, False, m)
            else:
                m = float(c.max() - slack)
                verdict = _cell_verdict(False, nu == 0.5 and a > 1.0, m)
            rep.add(Cell(pid, nu, a, ts[0], ts[-1], m, verdict))
    return rep.finish()


def check_psi_monotone(config: ScanConfig) -> ScanReport:
    """f'(t)/(t f(t)) decreasing in t for nu >= 1/2.

    Adjacent samples must satisfy psi[i+1] <= psi[i] + slack (1e-12); at
    nu = 1/2, a = 0 the statistic is the constant -1.
    """
    pid = config.property_id
    rep = ScanReport(pid)
    ts = _t_grid()
    slack = 1e-12 if config.slack is None else config.slack
    for nu in _nu_default(config.nu_grid):
        for a in config.a_grid or DEFAULT_A:
            psi = _k.lemma2_grid(nu, a, ts)
            m = float(np.diff(psi).max() - slack)
            rep.add(Cell(pid, nu, a, ts[0], ts[-1], m, _cell_verdict(nu >= 0.5, False, m)))
    return rep.finish()


def check_h_sign(config: ScanConfig) -> ScanReport:
    """h_nu <= 0 on (0, inf) iff nu >= nu_0; a positive value is expected below."""
    pid = config.property_id
    rep = ScanReport(pid)
    n0 = nu0()
    lo, hi = 1e-3, 1e3
    for nu in _nu_default(config.nu_grid):
        cr = scan_sign("h", nu, (lo, hi), 4000)
        m = cr.witness[1]
        rep.add(Cell(pid, nu, math.nan, lo, hi, m, _cell_verdict(nu >= n0, nu < n0, m)))
    return rep.finish()


def check_rice(config: ScanConfig) -> ScanReport:
    """Rice (nu = 1) density, CDF and survival function are log-concave."""
    pid = config.property_id
    rep = ScanReport(pid)
    ts = _t_grid()
    for a in config.a_grid or DEFAULT_A:
        if a > 0:
            c = _k.curvature_grid(1.0, a, ts)
        else:
            c = -1.0 / ts**2 - 1.0
        m = float(c.max() - 1e-10)
        rep.add(Cell(f"{pid}/pdf", 1.0, a, ts[0], ts[-1], m, _cell_verdict(True, False, m)))
        bs = default_b_grid(a)
        for kind, tag in (("q", "sf"), ("cdf", "cdf")):
            margins, usable = _second_difference_margins(kind, 1.0, a, bs, config.slack)
            rep.skipped += int((~usable).sum())
            m = _worst(margins)
            rep.add(Cell(f"{pid}/{tag}", 1.0, a, bs[0], bs[-1], m, _cell_verdict(True, False, m)))
    return rep.finish()


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

SMALL_B_NU = (0.3, 0.5, 1.0, 2.0)
TP2_PAIRS = ((1.0, 2.0), (0.1, 10.0), (1.5, 1.5), (0.5, 30.0))


def _run_one(config: ScanConfig) -> ScanReport | list[ScanReport]:
    pid = config.property_id
    if pid == "logconcave-q-b":
        return check_logconcave_Q_in_b(config)
    if pid == "logconcave-1mq-b":
        return check_logconcave_oneminusQ_in_b(config)
    if pid == "finner-roters":
        return check_finner_roters(config)
    if pid == "tp2":
        if config.t1 is not None:
            return check_tp2_kernel(config.t1, config.t2 if config.t2 is not None else config.t1,
                                    config.b_grid or None)
        return [check_tp2_kernel(t1, t2) for t1, t2 in TP2_PAIRS]
    if pid == "small-b":
        return [check_small_b_asymptotic(nu, config.b_grid or None)
                for nu in (config.nu_grid or SMALL_B_NU)]
    if pid == "curvature-bound":
        return check_curvature_bound(config)
    if pid == "psi-monotone":
        return check_psi_monotone(config)
    if pid == "h-sign":
        return check_h_sign(config)
    return check_rice(config)


def _safe_run(config: ScanConfig) -> list[ScanReport]:
    try:
        out = _run_one(config)
    except Exception as exc:  # isolate failures per scan
        rep = ScanReport(config.property_id, error=f"{type(exc).__name__}: {exc}")
        return [rep.finish()]
    return out if isinstance(out, list) else [out]


def default_suite() -> list[ScanConfig]:
    configs = [ScanConfig(p) for p in PROPERTIES]
    hsign = next(c for c in configs if c.property_id == "h-sign")
    hsign.nu_grid = (0.3, 0.5, 0.55, 0.6, 0.7, 0.78, 0.79, 0.9, 1.0, 1.2, 1.5, 3.0, 7.0)
    return configs


def run_suite(configs, workers: int = 1) -> list[ScanReport]:
    """Run every config; reports come back in config order whatever ``workers`` is."""
    configs = list(configs)
    if not configs:
        raise DomainError("run_suite needs at least one config")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            nested = list(pool.map(_safe_run, configs))
    else:
        nested = [_safe_run(c) for c in configs]
    return [rep for group in nested for rep in group]


def suite_passed(reports) -> bool:
    return all(r.verdict in ("pass", "exploratory") for r in reports)


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for rep in reports:
        if rep.error is not None:
            w.writerow([rep.property_id, "nan", "nan", "nan", "nan", "nan", "error"])
        for cell in rep.cells:
            w.writerow(cell.row())
    return buf.getvalue()


def summary_json(reports) -> str:
    data = {"passed": suite_passed(reports), "reports": [r.summary() for r in reports]}
    return json.dumps(data, indent=2, sort_keys=True)


def summary_text(reports) -> str:
    lines = []
    for r in reports:
        s = r.summary()
        extra = f" error={r.error}" if r.error else ""
        lines.append(
            f"{r.property_id:<28} {r.verdict:<12} cells={r.cells_checked:<5} "
            f"violations={len(r.violations):<3} worst_margin="
            f"{'n/a' if s['worst_margin'] is None else format(s['worst_margin'], '.3e')}{extra}")
    lines.append("ALL ASSERTED PROPERTIES HOLD" if suite_passed(reports)
                 else "PROPERTY REGRESSION DETECTED")
    return "\n".join(lines)


__all__ = [
    "ScanConfig", "ScanReport", "Cell", "PROPERTIES", "CSV_COLUMNS",
    "check_logconcave_Q_in_b", "check_logconcave_oneminusQ_in_b", "check_finner_roters",
    "check_tp2_kernel", "check_small_b_asymptotic", "check_curvature_bound",
    "check_psi_monotone", "check_h_sign", "check_rice",
    "run_suite", "default_suite", "to_csv", "summary_json", "summary_text",
]
