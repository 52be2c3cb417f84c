"""Pure-Python implementation of the numerical kernels.

This module is the fallback used when the compiled ``_kernels`` extension is
unavailable.  Both modules expose the same functions with the same
signatures; ``radialhomeo.kernels`` picks one at import time.
"""
from math import exp, log1p

import numpy as np

from .errors import PreconditionError, RootBracketError

BACKEND = "python"

PARABOLIC = 0
ELLIPSOID_CYLINDER = 1

MAX_BRACKET_STEPS = 200
MAX_GAUGE_BRACKET = 2000


# -- smooth profiles -----------------------------------------------------------

def bump(t):
    a = 2.0 * t - 1.0
    b = 2.0 - 2.0 * t
    if a <= 0.0:
        return 0.0
    if b <= 0.0:
        return 1.0
    ga = exp(-1.0 / a)
    gb = exp(-1.0 / b)
    return ga / (ga + gb)


def bump_prime(t):
    a = 2.0 * t - 1.0
    b = 2.0 - 2.0 * t
    if a <= 0.0 or b <= 0.0:
        return 0.0
    ga = exp(-1.0 / a)
    gb = exp(-1.0 / b)
    s = ga + gb
    return 2.0 * ga * gb * (1.0 / (a * a) + 1.0 / (b * b)) / (s * s)


def gamma(t, delta):
    if t <= 0.5:
        return 0.0
    return delta * bump(t) * log1p(t)


def profiles(t, delta):
    """Return ``(lambda(t), gamma(t), gamma'(t))``."""
    lam = bump(t)
    if t <= 0.5:
        return lam, 0.0, 0.0
    gam = delta * lam * log1p(t)
    dgam = delta * (bump_prime(t) * log1p(t) + lam / (1.0 + t))
    return lam, gam, dgam


# -- Dobrowolski scalar equations ----------------------------------------------

def dob_F(w, phi, alpha, delta):
    return (1.0 - alpha) * gamma(w / alpha, delta) - alpha - phi


def bracket_start(w, phi):
    a0 = min(1.0, max(-phi, 2.0 * w))
    return a0 if a0 > 0.0 else 1.0


def dob_root(w, phi, delta):
    """Unique positive root of ``alpha -> dob_F(w, phi, alpha, delta)``.

    The function is strictly decreasing in alpha.  gamma vanishes for
    ``w/alpha <= 1/2``, so for ``phi >= -1`` the root is at most
    ``max(-phi, 2w)``; the bracket is grown by doubling or halving from
    ``a0 = min(1, max(-phi, 2w))`` and then bisected until the interval
    cannot shrink further in double precision.
    """
    a0 = bracket_start(w, phi)
    f = dob_F(w, phi, a0, delta)
    if f == 0.0:
        return a0
    if f > 0.0:
        lo, hi = a0, 2.0 * a0
        for _ in range(MAX_BRACKET_STEPS):
            f = dob_F(w, phi, hi, delta)
            if f == 0.0:
                return hi
            if f < 0.0:
                break
            lo, hi = hi, 2.0 * hi
        else:
            raise RootBracketError(f"no sign change within {MAX_BRACKET_STEPS} bracket steps "
                                   f"for w={w!r}, phi={phi!r}")
    else:
        lo, hi = 0.5 * a0, a0
        for _ in range(MAX_BRACKET_STEPS):
            f = dob_F(w, phi, lo, delta)
            if f == 0.0:
                return lo
            if f > 0.0:
                break
            lo, hi = 0.5 * lo, lo
        else:
            raise RootBracketError(f"no sign change within {MAX_BRACKET_STEPS} bracket steps "
                                   f"for w={w!r}, phi={phi!r}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f = dob_F(w, phi, mid, delta)
        if f > 0.0:
            lo = mid
        elif f < 0.0:
            hi = mid
        else:
            return mid


def theta(alpha, W):
    return alpha * bump(alpha * W) * (W - 1.0) + alpha


def theta_prime(alpha, W):
    aw = alpha * W
    return (bump(aw) + aw * bump_prime(aw)) * (W - 1.0) + 1.0


def theta_inverse(s, W):
    if s * W <= 0.5:
        return s
    # theta(a) lies between a and a*W, which brackets the root
    lo, hi = s / W, s
    if lo > hi:
        lo, hi = hi, lo
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f = theta(mid, W) - s
        if f < 0.0:
            lo = mid
        elif f > 0.0:
            hi = mid
        else:
            return mid


# -- polyhedral gauges ---------------------------------------------------------

def poly_gauge(A, b, x):
    r = float(np.max((A @ x) / b))
    return r if r > 0.0 else 0.0


def poly_shifted_gauge(A, b, c, v):
    slack = b - A @ c
    if not np.all(slack > 0.0):
        raise PreconditionError("shift point is not interior to the body")
    r = float(np.max((A @ v) / slack))
    return r if r > 0.0 else 0.0


def poly_contains(A, b, x):
    return bool(np.all(A @ x <= b))


def poly_in_cone(A, x):
    return bool(np.all(A @ x <= 0.0))


# -- cataloged smooth bodies ---------------------------------------------------

def smooth_g(kind, params, x):
    """Defining function: the body is ``{x : smooth_g(x) <= 0}``."""
    if kind == PARABOLIC:
        k, d = params[0], params[1]
        s = 0.0
        for i in range(1, len(x)):
            s += x[i] * x[i]
        return k * s - x[0] - d
    s = 0.0
    for i in range(len(x)):
        s += params[i] * x[i] * x[i]
    return s - 1.0


def smooth_shifted_gauge(kind, params, c, v, tol, max_steps):
    """Gauge of ``U - c`` at ``v`` by bracketing and bisection on the ray.

    ``v`` must not be a recession direction; the caller decides that case
    exactly before calling.
    """
    params = [float(p) for p in params]
    c = [float(t) for t in c]
    v = [float(t) for t in v]
    n = len(c)

    def inside(t):
        return smooth_g(kind, params, [c[i] + v[i] / t for i in range(n)]) <= 0.0

    if inside(1.0):
        lo, hi = 0.5, 1.0
        for _ in range(MAX_GAUGE_BRACKET):
            if not inside(lo):
                break
            if 0.5 * lo == 0.0:
                return lo  # gauge below the smallest double; lo bounds it above
            lo, hi = 0.5 * lo, lo
        else:
            raise RootBracketError("gauge bracket not found (direction in the recession cone?)")
    else:
        lo, hi = 1.0, 2.0
        for _ in range(MAX_GAUGE_BRACKET):
            if inside(hi):
                break
            lo, hi = hi, 2.0 * hi
        else:
            raise RootBracketError("gauge bracket not found")
    for _ in range(max_steps):
        if hi - lo <= tol * hi:
            break
        mid = 0.5 * (lo + hi)
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
