"""Acceptance criteria, each at its stated tolerance.

Every criterion records one ``PASS``/``FAIL`` line (printed in the pytest
terminal summary, or to stdout when this file is run as a script).
"""
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE  # noqa: E402

from radialhomeo.body import PolyhedralBody, SmoothBody, bessaga_pelczynski_body  # noqa: E402
from radialhomeo.frame import build_frame  # noqa: E402
from radialhomeo.maps import MapVariant, forward  # noqa: E402
from radialhomeo.verify import (CONVERGENCE_NS, bepe_counterexample,  # noqa: E402
                                gamma_condition_check, gauge_oracle_check, halfspace_image_suite,
                                mink_continuity_check, monotone_checks, normalization_check,
                                quadratic_oracle_check, roundtrip_suite, smoothness_probe)

SEED = 42


def _frames():
    bp = build_frame(bessaga_pelczynski_body(), [1.0, 0.0, 0.0])
    bowl = build_frame(SmoothBody("parabolic", 2, {"curvature": 1.0, "depth": 1.0}), [1.0, 0.0])
    return bp, bowl


BP, BOWL = _frames()
CORRECTED = (MapVariant.bk(0.5), MapVariant.c1(), MapVariant.c2(), MapVariant.dob(0.1))


def record(n, ok, detail):
    ACCEPTANCE[n] = f"{'PASS' if ok else 'FAIL'}  criterion {n}: {detail}"
    return ok


def criterion_1():
    r = bepe_counterexample(1000)
    m = r.metadata
    return record(1, r.passed,
                  f"BePe closed forms max err {r.max_error:.1e} (tol 1e-9), H(x)=x err "
                  f"{m['fixed_point_error']:.0e}, tail gap in [{m['gap_min']:.4f}, "
                  f"{m['gap_max']:.4f}]")


def criterion_2():
    x = np.array([-1.0, -1.0, 0.0])
    ns = list(range(100, 1001)) + list(CONVERGENCE_NS)
    worst = {}
    for v in CORRECTED:
        base = forward(v, BP, x)
        gaps = [np.linalg.norm(forward(v, BP, [-1.0, -1.0, 1.0 / n]) - base) for n in ns]
        i = int(np.argmax(gaps))
        worst[v.label] = (gaps[i], ns[i])
    ok = all(g <= 0.02 for g, _ in worst.values())
    detail = ", ".join(f"{k} {g:.3g}@n={n}" for k, (g, n) in worst.items())
    return record(2, ok, f"max gap for n>=100 (tol 0.02): {detail}")


def criterion_3():
    reports = [roundtrip_suite(v, BP, 10_000, SEED, tol=1e-7) for v in CORRECTED]
    return record(3, all(r.passed for r in reports),
                  "roundtrip 1e4 samples (tol 1e-7): "
                  + ", ".join(f"{r.metadata['variant']} {r.max_error:.1e}" for r in reports))


def criterion_4():
    reports = [halfspace_image_suite(v, BP, 10_000, SEED) for v in CORRECTED]
    return record(4, all(r.passed for r in reports),
                  "half-space image 1e4 + 1e3 boundary (tol 1e-6): "
                  + ", ".join(f"{r.metadata['variant']} {r.max_error:.1e}" for r in reports))


def criterion_5():
    dob = MapVariant.dob(0.1)
    g = gamma_condition_check(0.1, 10_000)
    m = monotone_checks(dob, BP, 1000, SEED)
    nz = normalization_check(dob, BP, 1000, SEED, tol=1e-7)
    ok = g.passed and m.passed and nz.passed
    return record(5, ok, f"gamma condition min margin {g.metadata['min_margin']:.2e} "
                         f"({g.verdict}); dF/da<0, dtheta/da>0 ({m.verdict}); "
                         f"H(u(z))=z max err {nz.max_error:.1e} ({nz.verdict})")


def criterion_6():
    a = mink_continuity_check(BP.body, BP, 1000, 3, tol=1e-6)
    b = mink_continuity_check(BOWL.body, BOWL, 1000, 3, tol=1e-6)
    return record(6, a.passed and b.passed,
                  f"shifted-gauge continuity 1e3 sequences (tol 1e-6): polyhedral "
                  f"{a.max_error:.1e}, parabolic {b.max_error:.1e}")


def criterion_7():
    box = PolyhedralBody.box(3).classify()
    slab = PolyhedralBody.slab(3).classify()
    bp = bessaga_pelczynski_body().classify()
    ok = (box.kind, box.m) == ("i", 3) and (slab.kind, slab.m) == ("i", 1) \
        and bp.kind == "iii" and bp.witness.tolist() == [1.0, 0.0, 0.0]
    return record(7, ok, f"box: {box}; slab: {slab}; counterexample body: {bp}")


def criterion_8():
    r = smoothness_probe(MapVariant.dob(0.1), BOWL, 100, 11)
    m = r.metadata
    ok = r.passed and 1.8 <= m["ratio_min"] and m["ratio_max"] <= 2.2
    return record(8, ok, f"Richardson ratios at 100 points in [{m['ratio_min']:.4f}, "
                         f"{m['ratio_max']:.4f}] (need [1.8, 2.2])")


def criterion_9():
    g = gauge_oracle_check(BP.body, 10_000, 9, tol=1e-9)
    q = quadratic_oracle_check(1000, 13, tol=1e-9)
    return record(9, g.passed and q.passed,
                  f"gauge vs membership bisection {g.max_error:.1e}, quadratic roots vs "
                  f"bisection {q.max_error:.1e} (tol 1e-9)")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda f: f.__name__)
def test_acceptance(criterion):
    ok = criterion()
    print(ACCEPTANCE[int(criterion.__name__.split("_")[1])])
    assert ok, ACCEPTANCE[int(criterion.__name__.split("_")[1])]


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for key in sorted(ACCEPTANCE):
        print(ACCEPTANCE[key])
    sys.exit(0 if all(results) else 1)
