"""Frames: a body, a recession direction ``y`` and a supporting functional ``phi``.

A frame satisfies ``w_U(-y) = 1`` (so ``-y`` lies on the boundary),
``phi(-y) = -1`` and ``phi >= -1`` on ``U``.  The hyperplane
``Z = {phi = -1}`` is the boundary of the target half-space and every point
splits as ``x = q + phi(x) y`` with ``phi(q) = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .body import PolyhedralBody, SmoothBody, as_vector, project_to_boundary, sample_inside
from .errors import CaseMismatchError, InconsistentFrameError

DEFAULT_TOL = 1e-10
SUPPORT_SAMPLES = 10_000
SUPPORT_SEED = 20_240_917
SUPPORT_SLACK = 1e-9


@dataclass(frozen=True)
class LinearFunctional:
    coefficients: np.ndarray

    def __post_init__(self):
        coef = as_vector(self.coefficients, name="phi")
        coef.flags.writeable = False
        object.__setattr__(self, "coefficients", coef)

    def __call__(self, x):
        return float(self.coefficients @ x)

    def __eq__(self, other):
        if not isinstance(other, LinearFunctional):
            return NotImplemented
        return np.array_equal(self.coefficients, other.coefficients)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Frame:
    body: object
    y: np.ndarray
    phi: LinearFunctional
    tol: float = DEFAULT_TOL

    @property
    def dim(self):
        return self.body.dim

    def horizontal_part(self, x):
        """``q = x - phi(x) y``, the component of ``x`` in ``Ker phi``."""
        x = as_vector(x, self.dim)
        return x - self.phi(x) * self.y

    def project_to_Z(self, x):
        """Translate ``x`` along ``y`` onto the hyperplane ``phi = -1``."""
        x = as_vector(x, self.dim)
        return x - (self.phi(x) + 1.0) * self.y

    def fingerprint(self):
        return self.y.tobytes() + self.phi.coefficients.tobytes()


def normalize_direction(body, y_raw):
    """Rescale a one-sided recession direction so that ``w_U(-y) = 1``.

    Raises
    ------
    CaseMismatchError
        If ``y_raw`` is not in the recession cone or ``-y_raw`` is (then
        ``w_U(-y_raw) = 0`` and no rescaling exists).
    """
    y_raw = as_vector(y_raw, body.dim, "y")
    if not body.char_cone_contains(y_raw):
        raise CaseMismatchError(f"y={y_raw.tolist()} is not a recession direction of the body")
    if body.char_cone_contains(-y_raw):
        raise CaseMismatchError(f"-y={(-y_raw).tolist()} is also a recession direction")
    return y_raw / body.minkowski(-y_raw)


def supporting_functional(body, y, tol=DEFAULT_TOL):
    """Linear functional with ``phi(-y) = -1`` and ``phi >= -1`` on the body.

    For a polyhedron the lowest-index constraint active at ``-y`` is used,
    ``phi = -a_i / b_i``.  For a smooth body the gradient ``n`` of the
    defining function at ``p = -y`` gives ``phi(x) = -(n . x) / (n . p)``.
    """
    y = as_vector(y, body.dim, "y")
    p = -y
    if isinstance(body, PolyhedralBody):
        active = body.active_constraints(p, tol)
        if active.size == 0:
            raise InconsistentFrameError("no constraint is active at -y; normalize y first")
        i = int(active[0])
        return LinearFunctional(-body.A[i] / body.b[i] + 0.0)
    if isinstance(body, SmoothBody):
        if abs(body.minkowski(p) - 1.0) > max(tol, 10 * body.gauge_tolerance):
            raise InconsistentFrameError("-y is not on the boundary; normalize y first")
        n = body.gradient(p)
        scale = float(n @ p)
        if not scale > 0.0:
            raise InconsistentFrameError("degenerate supporting hyperplane at -y")
        return LinearFunctional(-n / scale + 0.0)
    raise TypeError(f"unsupported body type {type(body).__name__}")


def _support_samples(body):
    rng = np.random.default_rng(SUPPORT_SEED)
    inner = sample_inside(body, rng, SUPPORT_SAMPLES, half_width=10.0)
    # radial projections put part of the sample exactly on the boundary
    edge = [project_to_boundary(body, x) for x in inner[: SUPPORT_SAMPLES // 10]]
    edge = [e for e in edge if e is not None]
    if edge:
        return np.vstack([inner, np.array(edge)])
    return inner


def check_support(body, phi, y):
    """Raise :class:`InconsistentFrameError` unless ``phi`` supports the body at ``-y``."""
    if abs(phi(-y) + 1.0) > 1e-12:
        raise InconsistentFrameError(f"phi(-y) = {phi(-y)!r}, expected -1")
    values = _support_samples(body) @ phi.coefficients
    worst = float(values.min()) if values.size else 0.0
    if worst < -1.0 - SUPPORT_SLACK:
        raise InconsistentFrameError(f"phi takes value {worst!r} < -1 on the body")


def build_frame(body, y_raw, phi=None, tol=DEFAULT_TOL):
    """Validate the full setup and return a :class:`Frame`.

    ``phi`` may be given (as a :class:`LinearFunctional` or coefficient
    vector) to override the derived supporting functional; it is then
    checked on 10^4 sampled body points.
    """
    case = body.classify()
    if case.kind != "iii":
        raise CaseMismatchError(f"body is {case}; a frame needs a non-subspace recession cone")
    y = normalize_direction(body, y_raw)
    if phi is None:
        phi = supporting_functional(body, y, tol)
    elif not isinstance(phi, LinearFunctional):
        phi = LinearFunctional(as_vector(phi, body.dim, "phi"))
    if phi.coefficients.shape[0] != body.dim:
        raise InconsistentFrameError("phi has the wrong dimension")
    check_support(body, phi, y)
    if abs(phi(y) - 1.0) > 1e-12:
        raise InconsistentFrameError("phi(y) must equal 1")
    y.flags.writeable = False
    return Frame(body=body, y=y, phi=phi, tol=float(tol))


def horizontal_part(frame, x):
    return frame.horizontal_part(x)
