"""Closed convex bodies in R^n with 0 in the interior.

Two representations are supported:

* :class:`PolyhedralBody` -- an H-representation ``{x : a_i . x <= b_i}``
  with every ``b_i > 0``.  Gauges are evaluated by the exact ratio formula.
* :class:`SmoothBody` -- a fixed catalog of smooth sublevel sets whose
  recession cone is known in closed form.  Gauges are found by bisection
  along the ray; a zero gauge is decided by the exact cone predicate.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import (InternalConsistencyError, InvalidInputError,
                     PreconditionError)

DEFAULT_GAUGE_TOLERANCE = 1e-12
GAUGE_BISECTION_STEPS = 80


def as_vector(x, dim=None, name="x"):
    """Validate ``x`` as a finite float vector of length ``dim``."""
    try:
        arr = np.ascontiguousarray(x, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"{name} is not a numeric vector") from exc
    if arr.ndim != 1:
        raise InvalidInputError(f"{name} must be one-dimensional, got shape {arr.shape}")
    if dim is not None and arr.shape[0] != dim:
        raise InvalidInputError(f"{name} has dimension {arr.shape[0]}, expected {dim}")
    if not np.all(np.isfinite(arr)):
        raise InvalidInputError(f"{name} has non-finite coordinates")
    return arr


def format_vector(x):
    return "(" + ",".join(f"{float(t):.17g}" for t in x) + ")"


@dataclass(frozen=True)
class Case:
    """Outcome of the Bessaga-Klee classification.

    ``kind`` is ``"i"`` when the recession cone is a linear subspace (``m`` is
    its codimension) and ``"iii"`` otherwise, in which case ``witness`` is a
    direction ``y`` with ``y`` in the cone and ``-y`` not.  Case (ii) needs
    infinite codimension and cannot occur in R^n.
    """

    kind: str
    m: int | None = None
    witness: np.ndarray | None = None

    def __str__(self):
        if self.kind == "i":
            return f"case i, m={self.m}"
        return f"case iii, witness y={format_vector(self.witness)}"

    def __eq__(self, other):
        if not isinstance(other, Case):
            return NotImplemented
        if self.kind != other.kind or self.m != other.m:
            return False
        if self.witness is None or other.witness is None:
            return self.witness is other.witness
        return np.array_equal(self.witness, other.witness)

    __hash__ = None


class ConvexBody:
    """Common interface; see :class:`PolyhedralBody` and :class:`SmoothBody`."""

    dim: int
    gauge_tolerance: float = DEFAULT_GAUGE_TOLERANCE

    def _vec(self, x, name="x"):
        return as_vector(x, self.dim, name)

    def contains(self, x):
        raise NotImplementedError

    def minkowski(self, x):
        raise NotImplementedError

    def shifted_minkowski(self, c, v):
        raise NotImplementedError

    def char_cone_contains(self, x):
        raise NotImplementedError

    def is_interior(self, c):
        raise NotImplementedError

    def classify(self):
        raise NotImplementedError

    def to_spec(self):
        raise NotImplementedError

    def axis_shifted_minkowski(self, y, offset, v):
        """Gauge of ``U - c`` at ``v`` for ``c = (offset - 1) y``.

        Subclasses may use ``offset`` directly to avoid the cancellation in
        ``offset - 1`` when ``c`` approaches ``-y``.
        """
        return self.shifted_minkowski((offset - 1.0) * self._vec(y, "y"), v)

    def lineality_contains(self, x):
        """True iff the whole line through 0 in direction ``x`` is a recession line."""
        x = self._vec(x)
        return self.char_cone_contains(x) and self.char_cone_contains(-x)

    def minkowski_many(self, X):
        X = np.asarray(X, dtype=np.float64)
        return np.array([self.minkowski(x) for x in X])


class PolyhedralBody(ConvexBody):
    """Intersection of half-spaces ``a_i . x <= b_i`` with every ``b_i > 0``.

    Parameters
    ----------
    normals : array_like, shape (m, n)
        Constraint normals ``a_i``; each must be nonzero.
    offsets : array_like, shape (m,)
        Right-hand sides ``b_i``; each must be strictly positive so that 0 is
        an interior point.
    """

    def __init__(self, normals, offsets):
        A = np.array(normals, dtype=np.float64, ndmin=2)
        b = np.array(offsets, dtype=np.float64, ndmin=1)
        if A.ndim != 2 or b.ndim != 1 or A.shape[0] != b.shape[0] or A.shape[0] == 0:
            raise InvalidInputError("normals must be (m, n) and offsets (m,) with m >= 1")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b))):
            raise InvalidInputError("constraints must be finite")
        if np.any(b <= 0.0):
            raise InvalidInputError("every offset b_i must be > 0 (0 must be interior)")
        if np.any(np.linalg.norm(A, axis=1) == 0.0):
            raise InvalidInputError("every normal a_i must be nonzero")
        A.flags.writeable = False
        b.flags.writeable = False
        self.A = A
        self.b = b
        self.dim = A.shape[1]

    @classmethod
    def from_constraints(cls, constraints):
        """Build from a list of ``(a, b)`` pairs or ``{"a": ..., "b": ...}`` dicts."""
        normals, offsets = [], []
        for con in constraints:
            if isinstance(con, dict):
                a, b = con["a"], con["b"]
            else:
                a, b = con
            normals.append(a)
            offsets.append(b)
        return cls(normals, offsets)

    @classmethod
    def box(cls, dim, half_width=1.0):
        eye = np.eye(dim)
        return cls(np.vstack([eye, -eye]), np.full(2 * dim, float(half_width)))

    @classmethod
    def slab(cls, dim, axis=0, half_width=1.0):
        e = np.zeros(dim)
        e[axis] = 1.0
        return cls([e, -e], [half_width, half_width])

    def __repr__(self):
        return f"PolyhedralBody(dim={self.dim}, constraints={self.A.shape[0]})"

    def to_spec(self):
        return {"type": "polyhedral",
                "constraints": [{"a": a.tolist(), "b": float(b)}
                                for a, b in zip(self.A, self.b)]}

    def contains(self, x):
        return kernels.poly_contains(self.A, self.b, self._vec(x))

    def minkowski(self, x):
        return kernels.poly_gauge(self.A, self.b, self._vec(x))

    def is_interior(self, c):
        c = self._vec(c, "c")
        return bool(np.all(self.b - self.A @ c > 0.0))

    def shifted_minkowski(self, c, v):
        """Gauge of ``U - c`` at ``v``: ``max(0, max_i a_i.v / (b_i - a_i.c))``."""
        c = self._vec(c, "c")
        v = self._vec(v, "v")
        return kernels.poly_shifted_gauge(self.A, self.b, c, v)

    def axis_shifted_minkowski(self, y, offset, v):
        # slack b - a.c = (b + a.y) - offset a.y; the first term is exactly 0
        # on facets through -y, so the slack keeps full relative precision
        ay = self.A @ self._vec(y, "y")
        slack = (self.b + ay) - offset * ay
        if not np.all(slack > 0.0):
            raise PreconditionError("shift point is not interior to the body")
        return kernels.poly_gauge(self.A, np.ascontiguousarray(slack), self._vec(v, "v"))

    def char_cone_contains(self, x):
        return kernels.poly_in_cone(self.A, self._vec(x))

    def active_constraints(self, x, tol):
        x = self._vec(x)
        resid = np.abs(self.A @ x - self.b)
        return np.flatnonzero(resid <= tol * np.maximum(1.0, np.abs(self.b)))

    def _is_witness(self, d):
        return self.char_cone_contains(d) and not self.char_cone_contains(-d)

    def recession_witness(self):
        """Direction in the recession cone whose negative is not, or ``None``.

        Coordinate axes and inward constraint normals are tried first so that
        simple bodies get a clean witness; otherwise one LP per constraint
        minimizes ``a_i . x`` over the recession cone inside the unit box.
        """
        n = self.dim
        candidates = []
        for k in range(n):
            e = np.zeros(n)
            e[k] = 1.0
            candidates.extend([e, -e])
        candidates.extend(-a / np.max(np.abs(a)) for a in self.A)
        for d in candidates:
            if self._is_witness(d):
                return d

        from scipy.optimize import linprog

        zeros = np.zeros(self.A.shape[0])
        for a in self.A:
            res = linprog(a, A_ub=self.A, b_ub=zeros, bounds=[(-1.0, 1.0)] * n,
                          method="highs")
            if res.status != 0 or res.fun > -1e-9:
                continue
            for digits in (12, 9, 6):
                d = np.round(res.x, digits) + 0.0
                if self._is_witness(d):
                    return d
            raise InternalConsistencyError(
                "LP found a one-sided recession direction that fails the exact cone test")
        return None

    def classify(self):
        witness = self.recession_witness()
        if witness is None:
            return Case("i", m=int(np.linalg.matrix_rank(self.A)))
        return Case("iii", witness=witness)


class SmoothBody(ConvexBody):
    """Cataloged smooth convex body ``{x : g(x) <= 0}``.

    Kinds
    -----
    ``"parabolic"``
        ``x_0 >= k * sum_{i>=1} x_i**2 - d`` with params ``curvature`` (k > 0)
        and ``depth`` (d > 0).  Recession cone: the ray through ``e_0``.
    ``"ellipsoid_cylinder"``
        ``sum_{i not free} (x_i / r_i)**2 <= 1`` with params ``radii`` (one
        positive radius per coordinate) and ``free_axes`` (coordinates left
        unbounded).  Recession cone: the span of the free axes.
    """

    KINDS = ("parabolic", "ellipsoid_cylinder")

    def __init__(self, kind, dim, params=None, gauge_tolerance=DEFAULT_GAUGE_TOLERANCE):
        params = dict(params or {})
        if kind not in self.KINDS:
            raise InvalidInputError(f"unknown smooth body kind {kind!r}")
        if not (isinstance(dim, (int, np.integer)) and dim >= 1):
            raise InvalidInputError("dim must be a positive integer")
        if not (np.isfinite(gauge_tolerance) and gauge_tolerance > 0):
            raise InvalidInputError("gauge_tolerance must be positive")
        self.kind = kind
        self.dim = int(dim)
        self.gauge_tolerance = float(gauge_tolerance)
        self._ray_axes = np.zeros(self.dim, dtype=bool)
        self._line_axes = np.zeros(self.dim, dtype=bool)
        if kind == "parabolic":
            if self.dim < 2:
                raise InvalidInputError("parabolic body needs dim >= 2")
            k = float(params.pop("curvature", 1.0))
            d = float(params.pop("depth", 1.0))
            if not (k > 0 and d > 0 and np.isfinite(k) and np.isfinite(d)):
                raise InvalidInputError("curvature and depth must be finite and > 0")
            self.params = {"curvature": k, "depth": d}
            self._code = kernels.PARABOLIC
            self._kparams = np.array([k, d])
            self._ray_axes[0] = True
        else:
            radii = params.pop("radii", None)
            free = params.pop("free_axes", [])
            if radii is None or len(radii) != self.dim:
                raise InvalidInputError("ellipsoid_cylinder needs one radius per coordinate")
            radii = np.asarray(radii, dtype=np.float64)
            if not np.all(np.isfinite(radii) & (radii > 0)):
                raise InvalidInputError("radii must be finite and > 0")
            free = sorted({int(i) for i in free})
            if any(i < 0 or i >= self.dim for i in free):
                raise InvalidInputError("free_axes out of range")
            if len(free) == self.dim:
                raise InvalidInputError("at least one axis must be bounded")
            self._line_axes[free] = True
            self.params = {"radii": radii.tolist(), "free_axes": free}
            self._code = kernels.ELLIPSOID_CYLINDER
            self._kparams = np.where(self._line_axes, 0.0, 1.0 / radii ** 2)
        if params:
            raise InvalidInputError(f"unknown parameters for {kind}: {sorted(params)}")
        self._kparams.flags.writeable = False
        self._zero = np.zeros(self.dim)

    def __repr__(self):
        return f"SmoothBody({self.kind!r}, dim={self.dim}, params={self.params})"

    @property
    def char_cone_generators(self):
        """Declared recession cone as ``(rays, lines)`` of unit axis vectors."""
        eye = np.eye(self.dim)
        return eye[self._ray_axes], eye[self._line_axes]

    def to_spec(self):
        return {"type": "smooth", "kind": self.kind, "params": dict(self.params),
                "gauge_tolerance": self.gauge_tolerance}

    def defining_function(self, x):
        return kernels.smooth_g(self._code, self._kparams, self._vec(x))

    def gradient(self, x):
        x = self._vec(x)
        if self._code == kernels.PARABOLIC:
            g = 2.0 * self.params["curvature"] * x
            g[0] = -1.0
            return g
        return 2.0 * self._kparams * x

    def contains(self, x):
        return self.defining_function(x) <= 0.0

    def is_interior(self, c):
        return self.defining_function(c) < 0.0

    def char_cone_contains(self, x):
        x = self._vec(x)
        bounded = ~(self._ray_axes | self._line_axes)
        return bool(np.all(x[bounded] == 0.0) and np.all(x[self._ray_axes] >= 0.0))

    def minkowski(self, x):
        x = self._vec(x)
        if self.char_cone_contains(x):
            return 0.0
        return kernels.smooth_shifted_gauge(self._code, self._kparams, self._zero, x,
                                            self.gauge_tolerance, GAUGE_BISECTION_STEPS)

    def shifted_minkowski(self, c, v):
        c = self._vec(c, "c")
        v = self._vec(v, "v")
        if not self.is_interior(c):
            raise PreconditionError("shift point is not interior to the body")
        if self.char_cone_contains(v):
            return 0.0
        return kernels.smooth_shifted_gauge(self._code, self._kparams, c, v,
                                            self.gauge_tolerance, GAUGE_BISECTION_STEPS)

    def classify(self):
        if self._ray_axes.any():
            return Case("iii", witness=np.eye(self.dim)[int(np.argmax(self._ray_axes))])
        return Case("i", m=int(self.dim - self._line_axes.sum()))


def body_from_spec(spec, dim):
    """Build a body from its scenario-file description."""
    kind = spec.get("type")
    if kind == "polyhedral":
        body = PolyhedralBody.from_constraints(spec["constraints"])
    elif kind == "smooth":
        body = SmoothBody(spec["kind"], dim, spec.get("params"),
                          spec.get("gauge_tolerance", DEFAULT_GAUGE_TOLERANCE))
    else:
        raise InvalidInputError(f"unknown body type {kind!r}")
    if body.dim != dim:
        raise InvalidInputError(f"body has dimension {body.dim}, scenario declares {dim}")
    return body


def bessaga_pelczynski_body():
    """The R^3 body ``x_1 >= max(x_2, 0) - 1  and  x_1 >= max(x_3, 0) - 1``."""
    return PolyhedralBody([[-1.0, 0.0, 0.0], [-1.0, 1.0, 0.0], [-1.0, 0.0, 1.0]],
                          [1.0, 1.0, 1.0])


def sample_box(rng, count, dim, half_width):
    return rng.uniform(-half_width, half_width, size=(count, dim))


def sample_inside(body, rng, count, half_width=10.0, max_rounds=1000):
    """Uniform samples of ``U`` intersected with the cube ``[-h, h]^n`` by rejection."""
    out = []
    have = 0
    for _ in range(max_rounds):
        X = sample_box(rng, max(count, 64), body.dim, half_width)
        keep = X[[body.contains(x) for x in X]]
        out.append(keep)
        have += len(keep)
        if have >= count:
            break
    return np.concatenate(out)[:count]


def project_to_boundary(body, x):
    """Radial projection ``x / w_U(x)`` onto the boundary, or ``None`` when ``w_U(x) = 0``."""
    w = body.minkowski(x)
    if w == 0.0:
        return None
    return np.asarray(x, dtype=np.float64) / w
