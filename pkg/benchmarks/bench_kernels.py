"""Time the hot kernels with numba on and off.

Each mode runs in its own interpreter because the MARCUMLC_DISABLE_JIT flag
is read at import time.  JIT timings exclude compilation (one warm-up call).

    python3 benchmarks/bench_kernels.py [--repeat 3] [--scale 1.0]
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKER = r"""
import json, sys, timeit
import numpy as np
from marcumlc import _jit, _kernels as K

scale, repeat = float(sys.argv[1]), int(sys.argv[2])
n = lambda k: max(4, int(k * scale))

ts = np.geomspace(1e-3, 200.0, n(4000))
nus = np.full(n(2000), 1.3)
as_ = np.full(n(2000), 4.0)
bs = np.linspace(0.0, 14.0, n(2000))
quad_b = np.linspace(0.5, 8.0, n(40))

def ratio_grid():
    for t in ts:
        K.ratio_kernel(0.8, t)

def h_grid():
    K.h_grid(0.7, ts)

def marcum_pairs():
    K.marcum_pair_many(nus, as_, bs, 1e-320, 1e-14)

def quadrature():
    p = np.array([1.3, 4.0])
    for b in quad_b:
        K.gk_adaptive(K.K_MARCUM, p, np.array([b, b + 5.0, 54.0]), 2.5e-11, 0.0, 5000)

out = {"jit": _jit.JIT_ENABLED, "timings": {}}
for name, fn in [("ratio_kernel x%d" % ts.size, ratio_grid),
                 ("h_grid x%d" % ts.size, h_grid),
                 ("marcum_pair_many x%d" % bs.size, marcum_pairs),
                 ("gk_adaptive Q x%d" % quad_b.size, quadrature)]:
    fn()  # compile / warm caches
    out["timings"][name] = min(timeit.repeat(fn, number=1, repeat=repeat))
print(json.dumps(out))
"""


def run(disable_jit: bool, scale: float, repeat: int) -> dict:
    env = dict(os.environ, MARCUMLC_DISABLE_JIT="1" if disable_jit else "0")
    proc = subprocess.run([sys.executable, "-c", WORKER, str(scale), str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scale", type=float, default=1.0, help="multiply workload sizes")
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    jit = run(False, args.scale, args.repeat)
    pure = run(True, args.scale, args.repeat)
    if not jit["jit"]:
        print("warning: numba not available, both columns are pure Python")

    print(f"{'kernel':<28}{'numba [s]':>12}{'python [s]':>12}{'speedup':>10}")
    for name, tj in jit["timings"].items():
        tp = pure["timings"][name]
        print(f"{name:<28}{tj:>12.4f}{tp:>12.4f}{tp / tj:>9.1f}x")
    print(f"total wall time {time.perf_counter() - t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
