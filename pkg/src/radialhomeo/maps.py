"""Radial homeomorphisms of ``(X, U)`` onto ``(X, {phi >= -1})``.

Every construction assigns to each ``z`` in ``Z = {phi = -1}`` a base point
``c(z)`` on the ``y`` axis and acts along the halfline
``c(z) + (0, inf) (z - c(z))`` by a monotone reparametrization of the radial
parameter ``alpha``.  Points on no halfline form the identity region.

Variants (``MapVariant.kind``):

``bk``    ``c(z) = w_W(z+y) y`` with ``W = V & -V & Ker phi``, ``V = s U``;
          three-piece transfer ``F``.
``bepe``  ``c(z) = (w_U(z+y) - 1) y``; the recipe known to be discontinuous.
``c1``    ``c(z) = (sqrt(w_U(z+y)) - 1) y``; transfer ``G1``/``G2``.
``c2``    ``c(z) = (w_U(z+y) + 1) y``; transfer ``G1``/``G2``.
``dob``   ``c(z) = gamma(w_U(z+y)) y`` with smooth profiles; transfer
          ``theta``, root of the implicit equation by bisection.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .body import as_vector
from .errors import InternalConsistencyError, InvalidInputError, PreconditionError

KINDS = ("bk", "bepe", "c1", "c2", "dob")
RECONSTRUCTION_TOL = 1e-6
QUADRATIC_RESIDUAL_TOL = 1e-9
GAMMA_GRID = 10_000


@functools.lru_cache(maxsize=64)
def _gamma_condition_holds(delta):
    from .verify import gamma_condition_check
    return gamma_condition_check(delta, GAMMA_GRID).passed


@dataclass(frozen=True)
class MapVariant:
    """One of the five constructions together with its parameter.

    ``v_scale`` is only used by ``bk`` (``V = v_scale * U``), ``delta`` only
    by ``dob``.
    """

    kind: str
    v_scale: float = 0.5
    delta: float = 0.1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidInputError(f"unknown map kind {self.kind!r}; expected one of {KINDS}")
        if self.kind == "bk" and not 0.0 < self.v_scale < 1.0:
            raise InvalidInputError("v_scale must lie in (0, 1)")
        if self.kind == "dob":
            if not (math.isfinite(self.delta) and self.delta > 0.0):
                raise InvalidInputError("delta must be finite and > 0")
            if not _gamma_condition_holds(float(self.delta)):
                raise PreconditionError(
                    f"delta={self.delta} violates 0 <= gamma' < (gamma + 1)/t")

    @classmethod
    def bk(cls, v_scale=0.5):
        return cls("bk", v_scale=v_scale)

    @classmethod
    def bepe(cls):
        return cls("bepe")

    @classmethod
    def c1(cls):
        return cls("c1")

    @classmethod
    def c2(cls):
        return cls("c2")

    @classmethod
    def dob(cls, delta=0.1):
        return cls("dob", delta=delta)

    @property
    def label(self):
        if self.kind == "bk":
            return f"bk{{{self.v_scale:g}}}"
        if self.kind == "dob":
            return f"dob{{{self.delta:g}}}"
        return self.kind

    def to_spec(self):
        spec = {"kind": self.kind}
        if self.kind == "bk":
            spec["v_scale"] = self.v_scale
        if self.kind == "dob":
            spec["delta"] = self.delta
        return spec


class IdentityRegion:
    """Marker for points on no covered halfline; every map fixes them."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "IdentityRegion()"


IDENTITY = IdentityRegion()


@dataclass(frozen=True, eq=False)
class Covered:
    """``x = c + alpha (z - c)`` with ``phi(z) = -1`` and ``c`` on the ``y`` axis."""

    alpha: float
    z: np.ndarray
    c: np.ndarray

    def reconstruct(self):
        return self.c + self.alpha * (self.z - self.c)


# -- scalar transfer functions ---------------------------------------------

def transfer_F(alpha, beta, gamma, delta):
    """Three-piece transfer: identity up to ``beta``, then ``[beta, gamma]``
    affinely onto ``[beta, delta]``, then a translation.

    ``F(., beta, delta, gamma)`` inverts ``F(., beta, gamma, delta)``.
    """
    if not (alpha > 0 and beta > 0 and gamma > beta and delta > beta):
        raise PreconditionError(
            f"(alpha, beta, gamma, delta)=({alpha}, {beta}, {gamma}, {delta}) outside the domain")
    if alpha <= beta:
        return alpha
    if alpha <= gamma:
        return beta + (delta - beta) / (gamma - beta) * (alpha - beta)
    return alpha + delta - gamma


def transfer_G(alpha, beta, direction="forward"):
    """Two-piece transfer fixing ``alpha <= beta/2`` and sending ``beta`` to 1.

    ``direction="forward"`` evaluates G1, ``"inverse"`` evaluates G2.
    """
    if not 0.0 < beta < 2.0:
        raise PreconditionError(f"beta={beta} outside (0, 2)")
    half = 0.5 * beta
    if alpha <= half:
        return alpha
    if direction == "forward":
        return half + (2.0 - beta) / beta * (alpha - half)
    if direction == "inverse":
        return half + beta / (2.0 - beta) * (alpha - half)
    raise InvalidInputError(f"direction must be 'forward' or 'inverse', got {direction!r}")


def smooth_profiles(t, delta):
    """``(lambda(t), gamma(t), gamma'(t))`` for the bump ratio and
    ``gamma = delta * lambda * log(1 + t)``."""
    return kernels.profiles(float(t), float(delta))


# -- Step-1 quadratics ------------------------------------------------------

def _check_quadratic(a, b, c, root):
    resid = a * root * root + b * root + c
    scale = abs(a * root * root) + abs(b * root) + abs(c)
    if abs(resid) > QUADRATIC_RESIDUAL_TOL * max(scale, 1e-300):
        raise InternalConsistencyError(f"quadratic residual {resid!r} at root {root!r}")
    return root


def _positive_root(a, b, c):
    # larger root of a t^2 + b t + c with a > 0, c <= 0, without cancellation
    disc = math.sqrt(b * b - 4.0 * a * c)
    if b >= 0.0:
        return -2.0 * c / (b + disc) if b + disc > 0.0 else 0.0
    return (-b + disc) / (2.0 * a)


def bk_alpha(phi_x, omega):
    """Positive root of ``alpha^2 + alpha (phi + omega) - omega = 0``."""
    if omega == 0.0:
        return -phi_x
    return _check_quadratic(1.0, phi_x + omega, -omega,
                            _positive_root(1.0, phi_x + omega, -omega))


def c1_alpha(phi_x, w):
    """``s^2`` where ``s`` is the positive root of ``sqrt(w) s^2 + (phi + 1) s - sqrt(w) = 0``."""
    r = math.sqrt(w)
    s = _check_quadratic(r, phi_x + 1.0, -r, _positive_root(r, phi_x + 1.0, -r))
    return s * s


def c2_alpha(phi_x, w):
    """Positive root of ``2 alpha^2 + alpha (phi - 1 + w) - w = 0``."""
    b = phi_x - 1.0 + w
    if w == 0.0:
        return -0.5 * b
    return _check_quadratic(2.0, b, -w, _positive_root(2.0, b, -w))


def bepe_alpha(phi_x, w):
    return w / ((phi_x + 1.0) + w)


# -- decomposition ------------------------------------------------------------

def _bk_omega(variant, frame, q):
    if abs(frame.phi(q)) > frame.tol * max(1.0, float(np.abs(q).max(initial=0.0))):
        raise PreconditionError("horizontal part is not in Ker phi")
    body = frame.body
    return max(body.minkowski(q), body.minkowski(-q)) / variant.v_scale


def _base_coefficient(variant, s):
    # c(z) = coefficient * y, where s is the relevant gauge of z + y
    kind = variant.kind
    if kind == "bk":
        return s
    if kind == "bepe":
        return s - 1.0
    if kind == "c1":
        return math.sqrt(s) - 1.0
    if kind == "c2":
        return s + 1.0
    return kernels.gamma(s, variant.delta)


def _base_offset(variant, s):
    # 1 + coefficient, formed without cancellation (c1 at tiny s gives sqrt(s))
    kind = variant.kind
    if kind == "bk":
        return 1.0 + s
    if kind == "bepe":
        return s
    if kind == "c1":
        return math.sqrt(s)
    if kind == "c2":
        return s + 2.0
    return 1.0 + kernels.gamma(s, variant.delta)


def _radial_parameter(variant, frame, x):
    """Return ``(alpha, s)`` for covered ``x`` or ``None`` for the identity region.

    ``s`` is the gauge of ``z + y`` that enters ``c(z)`` (``w_W`` for bk,
    ``w_U`` otherwise); it equals ``w(q) / alpha`` by homogeneity.
    """
    phi_x = frame.phi(x)
    q = x - phi_x * frame.y
    kind = variant.kind
    if kind == "bk":
        w = _bk_omega(variant, frame, q)
        if w == 0.0 and phi_x >= 0.0:
            return None
        alpha = bk_alpha(phi_x, w)
    else:
        w = frame.body.minkowski(q)
        if kind == "bepe":
            if w == 0.0 or (phi_x + 1.0) + w <= 0.0:
                return None
            alpha = bepe_alpha(phi_x, w)
        elif kind == "c1":
            if w == 0.0:
                return None
            alpha = c1_alpha(phi_x, w)
        elif kind == "c2":
            if w == 0.0 and phi_x >= 1.0:
                return None
            alpha = c2_alpha(phi_x, w)
        else:
            if w == 0.0:
                if phi_x >= 0.0:
                    return None
                alpha = -phi_x
            else:
                alpha = kernels.dob_root(w, phi_x, variant.delta)
    if not alpha > 0.0:
        raise InternalConsistencyError(f"non-positive radial parameter {alpha!r}")
    return alpha, w / alpha, q


def decompose(variant, frame, x):
    """Locate ``x`` on its covered halfline.

    Returns :data:`IDENTITY` when ``x`` is on no halfline, otherwise
    ``Covered(alpha, z, c)`` with ``x = c + alpha (z - c)``.
    """
    x = as_vector(x, frame.dim)
    found = _radial_parameter(variant, frame, x)
    if found is None:
        return IDENTITY
    alpha, s, q = found
    z = q / alpha - frame.y
    c = _base_coefficient(variant, s) * frame.y
    dec = Covered(alpha=alpha, z=z, c=c)
    resid = float(np.linalg.norm(dec.reconstruct() - x))
    if resid > RECONSTRUCTION_TOL * max(1.0, float(np.linalg.norm(x))):
        raise InternalConsistencyError(f"reconstruction residual {resid!r} at x={x.tolist()}")
    return dec


# -- Dobrowolski pieces -------------------------------------------------------

def dob_F(frame, delta, x, alpha):
    """``(1 - alpha) gamma(w_U(q) / alpha) - alpha - phi(x)``, decreasing in alpha."""
    if not alpha > 0.0:
        raise PreconditionError("alpha must be > 0")
    x = as_vector(x, frame.dim)
    q = frame.horizontal_part(x)
    return kernels.dob_F(frame.body.minkowski(q), frame.phi(x), float(alpha), float(delta))


def _require_dob(variant):
    if variant.kind != "dob":
        raise InvalidInputError("theta is only defined for the dob variant")


def _on_Z(frame, z):
    z = as_vector(z, frame.dim, "z")
    if abs(frame.phi(z) + 1.0) > 1e-8 * max(1.0, float(np.linalg.norm(z))):
        raise PreconditionError("z must satisfy phi(z) = -1")
    return z


def exit_gauge(variant, frame, z):
    """``w_{U - c(z)}(z - c(z))`` for ``z`` in ``Z``; always at least 1."""
    z = _on_Z(frame, z)
    s = frame.body.minkowski(z + frame.y)
    if variant.kind == "bk":
        s = max(s, frame.body.minkowski(-(z + frame.y))) / variant.v_scale
    c = _base_coefficient(variant, s) * frame.y
    return frame.body.shifted_minkowski(c, z - c)


def theta(frame, variant, alpha, z):
    """``alpha lambda(alpha W) (W - 1) + alpha`` with ``W = w_{U-c(z)}(z - c(z))``."""
    _require_dob(variant)
    if not alpha > 0.0:
        raise PreconditionError("alpha must be > 0")
    return kernels.theta(float(alpha), exit_gauge(variant, frame, z))


def theta_inverse(frame, variant, s, z):
    """The unique ``alpha`` with ``theta(alpha, z) = s``."""
    _require_dob(variant)
    if not s > 0.0:
        raise PreconditionError("s must be > 0")
    return kernels.theta_inverse(float(s), exit_gauge(variant, frame, z))


# -- maps ---------------------------------------------------------------------

def exit_point(body, c, z):
    """Last point of the ray from ``c`` through ``z`` inside the body.

    When ``c`` is not interior (the degenerate base ``c = -y``) the recipe
    takes ``z`` itself.
    """
    if not body.is_interior(c):
        return np.array(z, dtype=np.float64)
    return c + (z - c) / body.shifted_minkowski(c, z - c)


@dataclass(frozen=True, eq=False)
class BePeTrace:
    """Intermediate points of the discontinuous recipe at one covered point."""

    alpha: float
    z: np.ndarray
    c: np.ndarray
    u: np.ndarray
    v: np.ndarray
    beta: float
    image: np.ndarray


def bepe_trace(frame, x):
    """Evaluate the discontinuous recipe step by step, or ``None`` off its halflines.

    ``u`` is the exit point of ``[c, z]``, ``v = (u + c)/2``; the map is the
    identity on ``(c, v]`` and the affine map fixing ``v`` and sending ``u``
    to ``z`` beyond it.
    """
    x = as_vector(x, frame.dim)
    dec = decompose(MapVariant.bepe(), frame, x)
    if dec is IDENTITY:
        return None
    c, z = dec.c, dec.z
    u = exit_point(frame.body, c, z)
    v = 0.5 * (u + c)
    beta = 1.0 / frame.body.shifted_minkowski(c, z - c)
    if dec.alpha <= 0.5 * beta:
        image = x.copy()
    else:
        image = v + (1.0 - 0.5 * beta) / (beta - 0.5 * beta) * (x - v)
    return BePeTrace(dec.alpha, z, c, u, v, beta, image)


def _bepe_inverse(frame, x):
    dec = decompose(MapVariant.bepe(), frame, x)
    if dec is IDENTITY:
        return x.copy()
    c, z = dec.c, dec.z
    u = exit_point(frame.body, c, z)
    v = 0.5 * (u + c)
    beta = 1.0 / frame.body.shifted_minkowski(c, z - c)
    if dec.alpha <= 0.5 * beta:
        return x.copy()
    return v + (beta - 0.5 * beta) / (1.0 - 0.5 * beta) * (x - v)


def _radial_map(variant, frame, x, inverse):
    found = _radial_parameter(variant, frame, x)
    if found is None:
        return x.copy()
    alpha, s, q = found
    y = frame.y
    body = frame.body
    c = _base_coefficient(variant, s) * y
    offset = _base_offset(variant, s)
    # alpha (z - c) without forming x - c, which cancels when alpha is tiny
    d = q - alpha * offset * y
    W = body.axis_shifted_minkowski(y, offset, d) / alpha
    kind = variant.kind
    if kind == "bk":
        sc = variant.v_scale
        W_V = body.shifted_minkowski(c / sc, d) / (sc * alpha)
        if inverse:
            t = transfer_F(alpha, 1.0 / W_V, 1.0, 1.0 / W)
        else:
            t = transfer_F(alpha, 1.0 / W_V, 1.0 / W, 1.0)
    elif kind == "dob":
        t = kernels.theta_inverse(alpha, W) if inverse else kernels.theta(alpha, W)
    else:
        t = transfer_G(alpha, 1.0 / W, "inverse" if inverse else "forward")
    if t == alpha:
        return x.copy()
    return c + (t / alpha) * d


def forward(variant, frame, x):
    """Image of ``x`` under the homeomorphism ``H`` of the given variant."""
    x = as_vector(x, frame.dim)
    if variant.kind == "bepe":
        tr = bepe_trace(frame, x)
        return x.copy() if tr is None else tr.image
    return _radial_map(variant, frame, x, inverse=False)


def inverse(variant, frame, x):
    """Preimage of ``x`` under ``H``; each covered halfline is mapped onto itself."""
    x = as_vector(x, frame.dim)
    if variant.kind == "bepe":
        return _bepe_inverse(frame, x)
    return _radial_map(variant, frame, x, inverse=True)


def forward_many(variant, frame, X):
    return np.array([forward(variant, frame, x) for x in np.asarray(X, dtype=np.float64)])


def inverse_many(variant, frame, X):
    return np.array([inverse(variant, frame, x) for x in np.asarray(X, dtype=np.float64)])
