"""Compare the compiled and pure-Python kernel backends.

Usage::

    python benchmarks/bench_kernels.py [--repeat 5]

Kernel timings call each backend module directly.  The end-to-end timing
runs the forward map in a subprocess per backend, because the backend is
fixed at import time (``RADIALHOMEO_PURE_PYTHON=1`` selects the fallback).
"""
import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from radialhomeo import kernels

A = np.ascontiguousarray([[-1.0, 0.0, 0.0], [-1.0, 1.0, 0.0], [-1.0, 0.0, 1.0]])
B = np.ones(3)
C = np.array([0.1, 0.0, 0.0])
V = np.array([-1.0, -0.5, 0.7])
P = np.array([1.0, 1.0])

CASES = {
    "poly_shifted_gauge": lambda k: k.poly_shifted_gauge(A, B, C, V),
    "smooth_shifted_gauge": lambda k: k.smooth_shifted_gauge(0, P, np.zeros(2),
                                                             np.array([-0.4, 1.3]), 1e-12, 80),
    "dob_root": lambda k: k.dob_root(0.7, -0.3, 0.1),
    "theta_inverse": lambda k: k.theta_inverse(1.3, 1.9),
    "profiles": lambda k: k.profiles(0.8, 0.1),
}

END_TO_END = """
import time, numpy as np
from radialhomeo.maps import MapVariant, forward
from radialhomeo.verify import counterexample_frame
fr = counterexample_frame(); v = MapVariant.dob()
X = np.random.default_rng(0).uniform(-5, 5, (2000, 3))
best = float("inf")
for _ in range(REPEAT):
    t = time.perf_counter()
    for x in X:
        forward(v, fr, x)
    best = min(best, time.perf_counter() - t)
print(best)
"""


def bench_kernels(repeat, number=2000):
    rows = []
    for name, fn in CASES.items():
        row = [name]
        for backend in kernels.available_backends():
            mod = kernels.load_backend(backend)
            best = min(timeit.repeat(lambda: fn(mod), number=number, repeat=repeat))
            row.append((backend, best / number * 1e6))
        rows.append(row)
    return rows


def bench_forward(backend, repeat):
    env = dict(os.environ)
    env["RADIALHOMEO_PURE_PYTHON"] = "1" if backend == "python" else "0"
    out = subprocess.run([sys.executable, "-c", f"REPEAT = {repeat}\n" + END_TO_END], env=env, check=True,
                         capture_output=True, text=True)
    return float(out.stdout)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (selected: {kernels.BACKEND})")
    print(f"{'kernel':<22}" + "".join(f"{b + ' us/call':>18}" for b in backends) + f"{'speedup':>10}")
    for name, *timings in bench_kernels(args.repeat):
        us = [t for _, t in timings]
        speed = f"{us[-1] / us[0]:9.1f}x" if len(us) == 2 else ""
        print(f"{name:<22}" + "".join(f"{t:18.2f}" for t in us) + f"{speed:>10}")
    times = {b: bench_forward(b, args.repeat) for b in backends}
    line = ", ".join(f"{b} {t:.3f} s" for b, t in times.items())
    print(f"forward(dob) on 2000 points, best of {args.repeat}: {line}")


if __name__ == "__main__":
    main()
