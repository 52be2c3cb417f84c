# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numerical kernels.

Mirrors ``_kernels_py`` function for function; see that module for the
reference semantics.
"""
from libc.math cimport exp, log1p

import numpy as np

from .errors import PreconditionError, RootBracketError

BACKEND = "cython"

PARABOLIC = 0
ELLIPSOID_CYLINDER = 1

cdef int MAX_BRACKET_STEPS = 200
cdef int MAX_GAUGE_BRACKET = 2000


cdef inline double _bump(double t) nogil:
    cdef double a = 2.0 * t - 1.0
    cdef double b = 2.0 - 2.0 * t
    cdef double ga, gb
    if a <= 0.0:
        return 0.0
    if b <= 0.0:
        return 1.0
    ga = exp(-1.0 / a)
    gb = exp(-1.0 / b)
    return ga / (ga + gb)


cdef inline double _bump_prime(double t) nogil:
    cdef double a = 2.0 * t - 1.0
    cdef double b = 2.0 - 2.0 * t
    cdef double ga, gb, s
    if a <= 0.0 or b <= 0.0:
        return 0.0
    ga = exp(-1.0 / a)
    gb = exp(-1.0 / b)
    s = ga + gb
    return 2.0 * ga * gb * (1.0 / (a * a) + 1.0 / (b * b)) / (s * s)


cdef inline double _gamma(double t, double delta) nogil:
    if t <= 0.5:
        return 0.0
    return delta * _bump(t) * log1p(t)


cdef inline double _dob_F(double w, double phi, double alpha, double delta) nogil:
    return (1.0 - alpha) * _gamma(w / alpha, delta) - alpha - phi


cdef inline double _theta(double alpha, double W) nogil:
    return alpha * _bump(alpha * W) * (W - 1.0) + alpha


def bump(double t):
    return _bump(t)


def bump_prime(double t):
    return _bump_prime(t)


def gamma(double t, double delta):
    return _gamma(t, delta)


def profiles(double t, double delta):
    cdef double lam = _bump(t)
    if t <= 0.5:
        return lam, 0.0, 0.0
    return (lam, delta * lam * log1p(t),
            delta * (_bump_prime(t) * log1p(t) + lam / (1.0 + t)))


def dob_F(double w, double phi, double alpha, double delta):
    return _dob_F(w, phi, alpha, delta)


cdef inline double _bracket_start(double w, double phi) nogil:
    cdef double a0 = -phi
    if 2.0 * w > a0:
        a0 = 2.0 * w
    if a0 > 1.0:
        a0 = 1.0
    return a0 if a0 > 0.0 else 1.0


def bracket_start(double w, double phi):
    return _bracket_start(w, phi)


def dob_root(double w, double phi, double delta):
    cdef double lo, hi, mid, f
    cdef double a0 = _bracket_start(w, phi)
    cdef int i
    cdef bint found = False
    f = _dob_F(w, phi, a0, delta)
    if f == 0.0:
        return a0
    if f > 0.0:
        lo = a0
        hi = 2.0 * a0
        for i in range(MAX_BRACKET_STEPS):
            f = _dob_F(w, phi, hi, delta)
            if f == 0.0:
                return hi
            if f < 0.0:
                found = True
                break
            lo = hi
            hi = 2.0 * hi
    else:
        lo = 0.5 * a0
        hi = a0
        for i in range(MAX_BRACKET_STEPS):
            f = _dob_F(w, phi, lo, delta)
            if f == 0.0:
                return lo
            if f > 0.0:
                found = True
                break
            hi = lo
            lo = 0.5 * lo
    if not found:
        raise RootBracketError(f"no sign change within {MAX_BRACKET_STEPS} bracket steps "
                               f"for w={w!r}, phi={phi!r}")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f = _dob_F(w, phi, mid, delta)
        if f > 0.0:
            lo = mid
        elif f < 0.0:
            hi = mid
        else:
            return mid


def theta(double alpha, double W):
    return _theta(alpha, W)


def theta_prime(double alpha, double W):
    cdef double aw = alpha * W
    return (_bump(aw) + aw * _bump_prime(aw)) * (W - 1.0) + 1.0


def theta_inverse(double s, double W):
    cdef double lo, hi, mid, f
    if s * W <= 0.5:
        return s
    lo = s / W
    hi = s
    if lo > hi:
        lo, hi = hi, lo
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        f = _theta(mid, W) - s
        if f < 0.0:
            lo = mid
        elif f > 0.0:
            hi = mid
        else:
            return mid


cdef inline double _row_dot(const double[:, ::1] A, Py_ssize_t i, const double[::1] x) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t j
    for j in range(A.shape[1]):
        s += A[i, j] * x[j]
    return s


def poly_gauge(const double[:, ::1] A, const double[::1] b, const double[::1] x):
    cdef double r = 0.0, t
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        t = _row_dot(A, i, x) / b[i]
        if t > r:
            r = t
    return r


def poly_shifted_gauge(const double[:, ::1] A, const double[::1] b,
                       const double[::1] c, const double[::1] v):
    cdef double r = 0.0, t, slack
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        slack = b[i] - _row_dot(A, i, c)
        if not slack > 0.0:
            raise PreconditionError("shift point is not interior to the body")
        t = _row_dot(A, i, v) / slack
        if t > r:
            r = t
    return r


def poly_contains(const double[:, ::1] A, const double[::1] b, const double[::1] x):
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        if _row_dot(A, i, x) > b[i]:
            return False
    return True


def poly_in_cone(const double[:, ::1] A, const double[::1] x):
    cdef Py_ssize_t i
    for i in range(A.shape[0]):
        if _row_dot(A, i, x) > 0.0:
            return False
    return True


cdef double _smooth_g_ray(int kind, const double[::1] p, const double[::1] c,
                          const double[::1] v, double t) nogil:
    # defining function evaluated at c + v / t
    cdef Py_ssize_t i, n = c.shape[0]
    cdef double s = 0.0, xi
    if kind == 0:
        for i in range(1, n):
            xi = c[i] + v[i] / t
            s += xi * xi
        return p[0] * s - (c[0] + v[0] / t) - p[1]
    for i in range(n):
        xi = c[i] + v[i] / t
        s += p[i] * xi * xi
    return s - 1.0


def smooth_g(int kind, params, x):
    cdef const double[::1] p = np.ascontiguousarray(params, dtype=np.float64)
    cdef const double[::1] xv = np.ascontiguousarray(x, dtype=np.float64)
    cdef double[::1] zero = np.zeros(xv.shape[0])
    return _smooth_g_ray(kind, p, zero, xv, 1.0)


def smooth_shifted_gauge(int kind, params, c, v, double tol, int max_steps):
    cdef const double[::1] p = np.ascontiguousarray(params, dtype=np.float64)
    cdef const double[::1] cv = np.ascontiguousarray(c, dtype=np.float64)
    cdef const double[::1] vv = np.ascontiguousarray(v, dtype=np.float64)
    cdef double lo, hi, mid
    cdef int i
    cdef bint found = False
    if _smooth_g_ray(kind, p, cv, vv, 1.0) <= 0.0:
        lo = 0.5
        hi = 1.0
        for i in range(MAX_GAUGE_BRACKET):
            if not _smooth_g_ray(kind, p, cv, vv, lo) <= 0.0:
                found = True
                break
            if 0.5 * lo == 0.0:
                return lo
            hi = lo
            lo = 0.5 * lo
        if not found:
            raise RootBracketError("gauge bracket not found (direction in the recession cone?)")
    else:
        lo = 1.0
        hi = 2.0
        for i in range(MAX_GAUGE_BRACKET):
            if _smooth_g_ray(kind, p, cv, vv, hi) <= 0.0:
                found = True
                break
            lo = hi
            hi = 2.0 * hi
        if not found:
            raise RootBracketError("gauge bracket not found")
    for i in range(max_steps):
        if hi - lo <= tol * hi:
            break
        mid = 0.5 * (lo + hi)
        if _smooth_g_ray(kind, p, cv, vv, mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)
