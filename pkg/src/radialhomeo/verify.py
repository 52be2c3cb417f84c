"""Verification suites for the radial constructions.

Every suite returns a :class:`Report`.  Reports are deterministic functions of
their inputs and seed; nothing here reads the clock or global state.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .body import PolyhedralBody, as_vector, bessaga_pelczynski_body, sample_box
from .errors import InvalidInputError
from .frame import build_frame
from .maps import (IDENTITY, MapVariant, Covered, bepe_trace, bk_alpha, c1_alpha, c2_alpha,
                   decompose, dob_F, exit_gauge, forward, inverse)

SAMPLE_HALF_WIDTH = 5.0
ROUNDTRIP_TOL_POLY = 1e-7
ROUNDTRIP_TOL_SMOOTH = 1e-6
CONTINUITY_TOL = 0.02


@dataclass(frozen=True, eq=False)
class Report:
    """Outcome of one suite.

    ``verdict`` is ``"pass"`` exactly when ``max_error <= tolerance``.
    ``asserted`` is False for suites run only to be reported (the
    discontinuous recipe), whose failure is expected.
    """

    suite_name: str
    per_point_errors: np.ndarray
    tolerance: float
    metadata: dict = field(default_factory=dict)
    asserted: bool = True

    def __post_init__(self):
        errs = np.asarray(self.per_point_errors, dtype=np.float64).ravel()
        if errs.size == 0:
            raise InvalidInputError(f"{self.suite_name}: a report needs at least one error value")
        errs.flags.writeable = False
        object.__setattr__(self, "per_point_errors", errs)

    @property
    def max_error(self):
        return float(self.per_point_errors.max())

    @property
    def mean_error(self):
        return float(self.per_point_errors.mean())

    @property
    def passed(self):
        return self.max_error <= self.tolerance

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def summary(self):
        flag = self.verdict.upper() if self.asserted else f"{self.verdict.upper()} (not asserted)"
        return (f"{flag:<22} {self.suite_name}: max={self.max_error:.3e} "
                f"mean={self.mean_error:.3e} tol={self.tolerance:.1e} n={self.per_point_errors.size}")

    def to_dict(self, full=False):
        out = {
            "suite": self.suite_name,
            "verdict": self.verdict,
            "asserted": self.asserted,
            "max_error": self.max_error,
            "mean_error": self.mean_error,
            "tolerance": self.tolerance,
            "count": int(self.per_point_errors.size),
            "metadata": _jsonable(self.metadata),
        }
        if full:
            out["per_point_errors"] = self.per_point_errors.tolist()
        return out

    def to_json(self, full=False):
        return json.dumps(self.to_dict(full), sort_keys=True, indent=2)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


def _need_samples(n, name="sample_count"):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInputError(f"{name} must be a positive integer, got {n!r}")


def _is_smooth(frame):
    return not isinstance(frame.body, PolyhedralBody)


def sample_Z(frame, rng, count, half_width=SAMPLE_HALF_WIDTH):
    """Points of ``Z`` obtained by sliding box samples along ``y``."""
    X = sample_box(rng, count, frame.dim, half_width)
    return np.array([frame.project_to_Z(x) for x in X])


# -- roundtrip and image suites -----------------------------------------------

def roundtrip_suite(variant, frame, sample_count, seed, tol=None):
    """Max over box samples of ``|H^-1(H(x)) - x|`` and ``|H(H^-1(x)) - x|``."""
    _need_samples(sample_count)
    if tol is None:
        tol = ROUNDTRIP_TOL_SMOOTH if _is_smooth(frame) else ROUNDTRIP_TOL_POLY
    X = sample_box(np.random.default_rng(seed), sample_count, frame.dim, SAMPLE_HALF_WIDTH)
    errs = np.empty(sample_count)
    covered = 0
    for i, x in enumerate(X):
        a = np.linalg.norm(inverse(variant, frame, forward(variant, frame, x)) - x)
        b = np.linalg.norm(forward(variant, frame, inverse(variant, frame, x)) - x)
        errs[i] = max(a, b)
        covered += decompose(variant, frame, x) is not IDENTITY
    return Report(f"roundtrip[{variant.label}]", errs, tol,
                  {"variant": variant.label, "seed": seed, "samples": sample_count,
                   "covered": covered, "backend": kernels.BACKEND},
                  asserted=variant.kind != "bepe")


def halfspace_image_suite(variant, frame, sample_count, seed, tol=1e-6,
                          boundary_count=1000, band=1e-6, slack=1e-7):
    """Check that ``H`` sends ``U`` onto ``{phi >= -1}`` and ``bd U`` onto ``Z``.

    A box sample whose membership in ``U`` disagrees with the membership of
    its image in the half-space counts as an error unless it lies within
    ``band`` of the boundary (``|w_U(x) - 1| <= band``).  Boundary samples
    are radial projections that land back in the sampling box; each
    contributes ``|phi(H(b)) + 1|``.
    """
    _need_samples(sample_count)
    rng = np.random.default_rng(seed)
    body, phi = frame.body, frame.phi
    X = sample_box(rng, sample_count, frame.dim, SAMPLE_HALF_WIDTH)
    errs = []
    exceptions = 0
    for x in X:
        w = body.minkowski(x)
        p = phi(forward(variant, frame, x))
        if (w <= 1.0) == (p >= -1.0 - slack):
            errs.append(0.0)
        elif abs(w - 1.0) <= band:
            errs.append(0.0)
            exceptions += 1
        else:
            errs.append(max(abs(w - 1.0), abs(p + 1.0)))
    edge_errs = []
    while len(edge_errs) < boundary_count:
        x = sample_box(rng, 1, frame.dim, SAMPLE_HALF_WIDTH)[0]
        w = body.minkowski(x)
        if w == 0.0:
            continue
        b = x / w
        if np.abs(b).max() > SAMPLE_HALF_WIDTH:
            continue
        edge_errs.append(abs(phi(forward(variant, frame, b)) + 1.0))
    return Report(f"halfspace_image[{variant.label}]", np.array(errs + edge_errs), tol,
                  {"variant": variant.label, "seed": seed, "samples": sample_count,
                   "boundary_samples": boundary_count, "band_exceptions": exceptions,
                   "boundary_max": max(edge_errs) if edge_errs else 0.0},
                  asserted=variant.kind != "bepe")


def normalization_check(variant, frame, sample_count, seed, tol=1e-7):
    """``H(u(z)) = z`` for sampled ``z`` in ``Z``, ``u(z)`` the exit point of ``[c(z), z]``."""
    _need_samples(sample_count)
    Z = sample_Z(frame, np.random.default_rng(seed), sample_count)
    errs = []
    skipped = 0
    for z in Z:
        dec = decompose(variant, frame, z)
        if dec is IDENTITY or not frame.body.is_interior(dec.c):
            skipped += 1
            continue
        u = dec.c + (z - dec.c) / exit_gauge(variant, frame, z)
        errs.append(float(np.linalg.norm(forward(variant, frame, u) - z)))
    return Report(f"normalization[{variant.label}]", np.array(errs), tol,
                  {"variant": variant.label, "seed": seed, "skipped": skipped})


# -- continuity -------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ProbeSequence:
    """``x_k = base + step(k) * direction`` for ``k = 1..count``.

    ``rule="harmonic"`` uses ``step(k) = 1/k``, ``rule="geometric"`` uses
    ``2**-k``.
    """

    base_point: np.ndarray
    direction: np.ndarray
    count: int = 1000
    rule: str = "harmonic"
    name: str = ""

    def __post_init__(self):
        base = as_vector(self.base_point, name="base_point")
        d = as_vector(self.direction, base.shape[0], "direction")
        if self.rule not in ("harmonic", "geometric"):
            raise InvalidInputError(f"unknown probe rule {self.rule!r}")
        _need_samples(self.count, "count")
        object.__setattr__(self, "base_point", base)
        object.__setattr__(self, "direction", d)

    def steps(self):
        k = np.arange(1, self.count + 1, dtype=np.float64)
        return 1.0 / k if self.rule == "harmonic" else 0.5 ** k

    def points(self):
        return self.base_point + self.steps()[:, None] * self.direction


def continuity_probe(variant, frame, probe, tol=CONTINUITY_TOL):
    """Errors ``|H(x_k) - H(x)|`` over the second half of the sequence."""
    base_image = forward(variant, frame, probe.base_point)
    pts = probe.points()
    errs = np.array([np.linalg.norm(forward(variant, frame, p) - base_image) for p in pts])
    fixed = sum(np.array_equal(forward(variant, frame, p), p) for p in pts[len(pts) // 2:])
    tail = errs[(probe.count - 1) // 2:]
    meta = {"variant": variant.label, "probe": probe.name, "count": probe.count,
            "head_max": float(errs.max()), "last_error": float(errs[-1]),
            "tail_fixed_points": int(fixed), "base_image": base_image}
    if variant.kind == "c1":
        last = decompose(variant, frame, pts[-1])
        if isinstance(last, Covered):
            target = max(frame.phi(probe.base_point), -1.0) * frame.y
            meta["base_point_limit_gap"] = float(np.linalg.norm(last.c - target))
    return Report(f"continuity[{variant.label}:{probe.name}]", tail, tol, meta,
                  asserted=variant.kind != "bepe")


def counterexample_sequence(count=1000):
    return ProbeSequence([-1.0, -1.0, 0.0], [0.0, 0.0, 1.0], count, name="x_n=(-1,-1,1/n)")


def continuity_battery(count=1000):
    """Fixed sequences for the three-dimensional counterexample body."""
    return [
        counterexample_sequence(count),
        ProbeSequence([1.0, -1.0, 0.0], [0.0, 0.0, 1.0], count, name="into (1,-1,0)"),
        ProbeSequence([-1.0, 0.0, 0.0], [0.0, 1.0, 1.0], count, name="along Z into -y"),
        ProbeSequence([-0.5, 0.3, 0.2], [0.1, 0.2, -0.3], count, name="interior covered"),
        ProbeSequence([2.0, 0.0, 0.0], [0.3, 0.5, -0.4], count, name="into the y axis"),
    ]


def counterexample_frame():
    return build_frame(bessaga_pelczynski_body(), [1.0, 0.0, 0.0], phi=[1.0, 0.0, 0.0])


def counterexample_table(n_max=1000):
    """Rows ``(n, x_n, H(x_n), err)`` for the discontinuous recipe.

    ``err`` is the largest coordinate deviation of ``H(x_n)``, ``c``, ``u``
    and ``v`` from their closed forms.
    """
    frame = counterexample_frame()
    rows = []
    for n in range(1, n_max + 1):
        x = np.array([-1.0, -1.0, 1.0 / n])
        tr = bepe_trace(frame, x)
        expected = {
            "image": np.array([-1.0 - 1.5 / n, -2.5, 2.5 / n]),
            "c": np.array([-1.0 + 1.0 / n, 0.0, 0.0]),
            "u": np.array([-1.0 + 0.5 / n, -0.5, 0.5 / n]),
            "v": np.array([-1.0 + 0.75 / n, -0.25, 0.25 / n]),
        }
        err = max(float(np.abs(getattr(tr, k) - v).max()) for k, v in expected.items())
        rows.append((n, x, tr.image, err))
    return rows


CONVERGENCE_NS = (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6, 10 ** 7, 10 ** 8)


def _interval_excess(value, lo, hi):
    return max(0.0, lo - value, value - hi)


def bepe_counterexample(n_max=1000, tol=1e-9):
    """Reproduce the discontinuity of ``c(z) = (w_U(z+y) - 1) y`` on R^3.

    Passes when the recipe reproduces every closed form, fixes
    ``x = (-1,-1,0)``, keeps a gap in ``[1.49, 1.51]`` for ``n >= 100``,
    and the four corrected constructions converge to their value at ``x``
    along the same sequence (gaps decreasing over ``n = 10^2..10^8`` and
    below ``1e-3`` at the end).
    """
    frame = counterexample_frame()
    bepe = MapVariant.bepe()
    x = np.array([-1.0, -1.0, 0.0])
    rows = counterexample_table(n_max)
    errs = [r[3] for r in rows]
    Hx = forward(bepe, frame, x)
    fixed_err = float(np.abs(Hx - x).max())
    errs.append(fixed_err)
    gaps = np.array([np.linalg.norm(r[2] - Hx) for r in rows if r[0] >= 100])
    errs.extend(_interval_excess(g, 1.49, 1.51) for g in gaps)
    convergence = {}
    for variant in (MapVariant.bk(), MapVariant.c1(), MapVariant.c2(), MapVariant.dob()):
        base = forward(variant, frame, x)
        g = [float(np.linalg.norm(forward(variant, frame, [-1.0, -1.0, 1.0 / n]) - base))
             for n in CONVERGENCE_NS]
        monotone = all(b <= a for a, b in zip(g, g[1:]))
        convergence[variant.label] = {"gaps": g, "decreasing": monotone}
        errs.append(0.0 if monotone else 1.0)
        errs.append(max(0.0, g[-1] - 1e-3))
    meta = {
        "n_max": n_max,
        "fixed_point_error": fixed_err,
        "gap_min": float(gaps.min()) if gaps.size else None,
        "gap_max": float(gaps.max()) if gaps.size else None,
        "limit_gap": 1.5,
        "H_x": Hx,
        "convergence_ns": list(CONVERGENCE_NS),
        "convergence": convergence,
    }
    return Report("bepe_counterexample", np.array(errs), tol, meta)


# -- smooth profile and monotonicity checks -------------------------------------

def gamma_condition_check(delta, grid_size, fd_rtol=1e-6):
    """``0 <= gamma'(t) < (gamma(t) + 1)/t`` with margin ``1e-12`` on a log grid.

    The closed-form derivative is also compared with a central difference.
    """
    _need_samples(grid_size, "grid_size")
    grid = np.geomspace(1e-6, 100.0, grid_size)
    errs = np.empty(grid_size)
    worst_margin = math.inf
    worst_fd = 0.0
    for i, t in enumerate(grid):
        _, g, gp = kernels.profiles(float(t), delta)
        margin = (g + 1.0) / t - gp
        worst_margin = min(worst_margin, margin)
        h = 1e-6 * max(1.0, t)
        fd = (kernels.gamma(t + h, delta) - kernels.gamma(t - h, delta)) / (2.0 * h)
        mismatch = abs(fd - gp) / (1.0 + abs(gp))
        worst_fd = max(worst_fd, mismatch)
        errs[i] = max(0.0, 1e-12 - margin, -gp, mismatch - fd_rtol)
    return Report(f"gamma_condition[delta={delta:g}]", errs, 0.0,
                  {"delta": delta, "grid_size": grid_size, "min_margin": worst_margin,
                   "max_fd_mismatch": worst_fd})


def monotone_checks(variant, frame, grid_size, seed=5):
    """Finite-difference signs: ``dF/dalpha < 0``, ``dtheta/dalpha > 0``, and
    radial monotonicity of every construction along sampled halflines."""
    _need_samples(grid_size, "grid_size")
    if variant.kind != "dob":
        raise InvalidInputError("monotone_checks needs the dob variant")
    rng = np.random.default_rng(seed)
    alphas = np.geomspace(1e-3, 1e3, 20)
    n_pts = max(1, -(-grid_size // len(alphas)))
    delta = variant.delta
    y = frame.y

    def slope(f, a):
        h = 1e-6 * a
        return (f(a + h) - f(a - h)) / (2.0 * h)

    f_errs, t_errs, case1, ident = [], [], [], []
    X = sample_box(rng, n_pts, frame.dim, SAMPLE_HALF_WIDTH)
    for x in X:
        for a in alphas:
            f_errs.append(max(0.0, slope(lambda t: dob_F(frame, delta, x, t), a) + 1e-12))
    for x in np.linspace(-5.0, 5.0, 11)[:, None] * y:
        for a in alphas:
            s = slope(lambda t: dob_F(frame, delta, x, t), a)
            case1.append(abs(s + 1.0))
    for z in sample_Z(frame, rng, n_pts):
        W = exit_gauge(variant, frame, z)
        for a in alphas:
            s = slope(lambda t: kernels.theta(t, W), a)
            t_errs.append(max(0.0, 1e-12 - s))
            if (1 + 1e-6) * a * W <= 0.5:
                ident.append(abs(s - 1.0))
    radial = []
    for other in (MapVariant.bk(), MapVariant.c1(), MapVariant.c2(), variant):
        for z in sample_Z(frame, rng, max(1, n_pts // 4)):
            dec = decompose(other, frame, z)
            if dec is IDENTITY:
                continue
            c = dec.c
            kappa = frame.phi(c)
            vals = [(frame.phi(forward(other, frame, c + a * (z - c))) - kappa) / (-1.0 - kappa)
                    for a in alphas]
            radial.extend(max(0.0, u - v) for u, v in zip(vals, vals[1:]))
    errs = np.array(f_errs + t_errs + radial
                    + [max(0.0, e - 1e-6) for e in case1 + ident])
    return Report(f"monotone[{variant.label}]", errs, 0.0,
                  {"variant": variant.label, "F_points": len(f_errs),
                   "theta_points": len(t_errs), "radial_pairs": len(radial),
                   "case1_max_slope_error": max(case1), "identity_branch_max_slope_error":
                   max(ident) if ident else 0.0})


def smoothness_probe(variant, frame, sample_count, seed, h=1e-3, tol=0.2, floor=1e-8,
                     max_draws=100_000):
    """Richardson ratio of directional difference quotients at covered points.

    For ``D(h) = (H(x + h d) - H(x)) / h`` the ratio
    ``|D(h) - D(h/2)| / |D(h/2) - D(h/4)|`` tends to 2 for a C^2 map.
    Draws whose second differences sit below ``floor`` are locally affine
    along ``d`` (no ratio exists); they are skipped and counted, and
    sampling continues until ``sample_count`` ratios are collected.
    """
    _need_samples(sample_count)
    if h / 4.0 < 1e-12:
        raise InvalidInputError("step below the 1e-12 roundoff floor")
    rng = np.random.default_rng(seed)
    ratios = []
    affine = 0
    draws = 0
    while len(ratios) < sample_count:
        draws += 1
        if draws > max_draws:
            raise InvalidInputError("too few covered, non-affine sample points")
        x = sample_box(rng, 1, frame.dim, 3.0)[0]
        if decompose(variant, frame, x) is IDENTITY:
            continue
        d = rng.normal(size=frame.dim)
        d /= np.linalg.norm(d)
        fx = forward(variant, frame, x)
        D = [(forward(variant, frame, x + s * d) - fx) / s for s in (h, h / 2.0, h / 4.0)]
        top, bottom = np.linalg.norm(D[0] - D[1]), np.linalg.norm(D[1] - D[2])
        if bottom <= floor:
            affine += 1
            continue
        ratios.append(float(top / bottom))
    errs = np.abs(np.array(ratios) - 2.0)
    return Report(f"smoothness[{variant.label}]", errs, tol,
                  {"variant": variant.label, "seed": seed, "h": h, "locally_affine_skipped": affine,
                   "ratio_min": min(ratios), "ratio_max": max(ratios)})


# -- gauge continuity and oracle equivalence ----------------------------------

def shifted_gauge_sequence_errors(body, c, v, dc, dv, steps):
    """``|w_{U-c_k}(v_k) - w_{U-c}(v)|`` for ``(c_k, v_k) = (c, v) + 2^-k (dc, dv)``."""
    ref = body.shifted_minkowski(c, v)
    return np.array([abs(body.shifted_minkowski(c + 0.5 ** k * dc, v + 0.5 ** k * dv) - ref)
                     for k in range(1, steps + 1)])


def mink_continuity_check(body, frame=None, grid_size=1000, seed=3, tol=1e-6, steps=64):
    """Continuity of ``(c, v) -> w_{U-c}(v)`` on ``Int U x R^n`` along geometric sequences.

    ``frame`` is accepted for interface symmetry and not used.
    """
    _need_samples(grid_size, "grid_size")
    rng = np.random.default_rng(seed)
    errs = np.empty(grid_size)
    for i in range(grid_size):
        while True:
            c = sample_box(rng, 1, body.dim, 3.0)[0]
            if body.minkowski(c) <= 0.5:
                break
        v = sample_box(rng, 1, body.dim, SAMPLE_HALF_WIDTH)[0]
        dc, dv = rng.normal(size=body.dim), rng.normal(size=body.dim)
        # keep the whole segment [c, c + dc] well inside U
        while body.minkowski(c + dc) > 0.75:
            dc *= 0.5
        e = shifted_gauge_sequence_errors(body, c, v, dc, dv, steps)
        errs[i] = e[steps // 2:].max()
    return Report(f"mink_continuity[{type(body).__name__}]", errs, tol,
                  {"grid_size": grid_size, "seed": seed, "steps": steps})


def membership_gauge(contains, x, rtol=1e-14, floor=1e-12):
    """Gauge from a membership oracle alone, by bracketing and bisection.

    Values below ``floor`` are reported as 0.
    """
    if contains(x):
        hi = 1.0
        lo = 0.5
        while contains(x / lo):
            hi = lo
            lo *= 0.5
            if lo < floor:
                return 0.0
    else:
        lo, hi = 1.0, 2.0
        while not contains(x / hi):
            lo, hi = hi, 2.0 * hi
    for _ in range(200):
        if hi - lo <= rtol * hi:
            break
        mid = 0.5 * (lo + hi)
        if contains(x / mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def gauge_oracle_check(body, sample_count=10_000, seed=9, tol=1e-9):
    """Exact gauges against :func:`membership_gauge` on box samples."""
    _need_samples(sample_count)
    X = sample_box(np.random.default_rng(seed), sample_count, body.dim, SAMPLE_HALF_WIDTH)
    errs = np.array([abs(body.minkowski(x) - membership_gauge(body.contains, x)) for x in X])
    return Report(f"gauge_oracle[{type(body).__name__}]", errs, tol,
                  {"samples": sample_count, "seed": seed})


def _bisect_decreasing(g):
    # root of a strictly decreasing function on (0, inf)
    lo, hi = 1.0, 1.0
    while g(lo) < 0.0:
        lo *= 0.5
    while g(hi) > 0.0:
        hi *= 2.0
    if lo == hi:
        return lo
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid


def quadratic_oracle_check(count=1000, seed=13, tol=1e-9):
    """Closed-form Step-1 roots against bisection on the unreduced equations.

    For each construction the unreduced equation is
    ``phi = (1 - alpha) kappa(w / alpha) - alpha`` with ``kappa(s) = s``
    (bk, ``w`` the gauge of ``W``), ``sqrt(s) - 1`` (c1) or ``s + 1`` (c2).
    Differences are measured relative to ``max(1, alpha)``: for large roots
    the unreduced equation cancels terms of size ``alpha`` and its own
    bisection is only accurate to ``eps * alpha / |slope|``.
    """
    _need_samples(count, "count")
    rng = np.random.default_rng(seed)
    phis = rng.uniform(-5.0, 5.0, count)
    ws = np.exp(rng.uniform(np.log(1e-3), np.log(10.0), count))
    cases = (
        ("bk", bk_alpha, lambda s: s),
        ("c1", c1_alpha, lambda s: math.sqrt(s) - 1.0),
        ("c2", c2_alpha, lambda s: s + 1.0),
    )
    errs = []
    for phi, w in zip(phis, ws):
        for _, closed, kappa in cases:
            ref = _bisect_decreasing(lambda a: (1.0 - a) * kappa(w / a) - a - phi)
            a = closed(phi, w)
            errs.append(abs(a - ref) / max(1.0, abs(a)))
    return Report("quadratic_oracle", np.array(errs), tol,
                  {"configurations": count, "equations": [c[0] for c in cases], "seed": seed,
                   "scale": "relative to max(1, alpha)"})


def run_all(variant, frame, seed=42, sample_count=10_000):
    """Every suite applicable to ``variant`` on ``frame``, in a fixed order."""
    reports = [
        roundtrip_suite(variant, frame, sample_count, seed),
        halfspace_image_suite(variant, frame, sample_count, seed),
        mink_continuity_check(frame.body, frame, 1000, seed),
    ]
    if variant.kind != "bepe":
        reports.append(normalization_check(variant, frame, 1000, seed))
    if frame.dim == 3 and isinstance(frame.body, PolyhedralBody):
        reports.extend(continuity_probe(variant, frame, p) for p in continuity_battery())
    if variant.kind == "dob":
        reports.append(gamma_condition_check(variant.delta, 10_000))
        reports.append(monotone_checks(variant, frame, 1000, seed))
        if _is_smooth(frame):
            reports.append(smoothness_probe(variant, frame, 100, seed))
    return reports
