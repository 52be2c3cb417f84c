import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from radialhomeo.body import (Case, PolyhedralBody, SmoothBody, body_from_spec,
                              bessaga_pelczynski_body, format_vector, project_to_boundary)
from radialhomeo.errors import InvalidInputError, PreconditionError
from radialhomeo.verify import membership_gauge

coord = st.floats(-20, 20, allow_nan=False)
vec3 = st.lists(coord, min_size=3, max_size=3).map(np.array)
vec2 = st.lists(coord, min_size=2, max_size=2).map(np.array)
scale = st.floats(1e-3, 1e3)


def bowl_gauge(x, k=1.0, d=1.0):
    # positive root of d t^2 + x0 t - k |x'|^2 = 0
    S = float(np.sum(x[1:] ** 2))
    return (-x[0] + math.sqrt(x[0] ** 2 + 4 * d * k * S)) / (2 * d) if S > 0 else max(-x[0] / d, 0.0)


class TestPolyhedralConstruction:
    def test_rejects_zero_offset(self):
        with pytest.raises(InvalidInputError, match="b_i"):
            PolyhedralBody([[1.0, 0.0]], [0.0])

    def test_rejects_zero_normal(self):
        with pytest.raises(InvalidInputError, match="nonzero"):
            PolyhedralBody([[0.0, 0.0]], [1.0])

    def test_rejects_nan(self):
        with pytest.raises(InvalidInputError):
            PolyhedralBody([[np.nan, 0.0]], [1.0])

    def test_arrays_are_read_only(self, bp_body):
        with pytest.raises(ValueError):
            bp_body.A[0, 0] = 3.0

    def test_spec_roundtrip(self, bp_body):
        again = body_from_spec(bp_body.to_spec(), 3)
        assert np.array_equal(again.A, bp_body.A) and np.array_equal(again.b, bp_body.b)

    def test_dimension_mismatch(self, bp_body):
        with pytest.raises(InvalidInputError):
            bp_body.contains([1.0, 2.0])


class TestCounterexampleBody:
    def test_membership(self, bp_body):
        assert bp_body.contains([-1.0, -1.0, 0.0])
        assert bp_body.contains(np.zeros(3))
        assert not bp_body.contains([-2.0, 0.0, 0.0])

    def test_gauge_values(self, bp_body):
        assert bp_body.minkowski([0.0, -1.0, 0.5]) == 0.5
        assert bp_body.minkowski(np.zeros(3)) == 0.0
        assert bp_body.minkowski([0.0, -1.0, 0.0]) == 0.0

    def test_shifted_gauge_exit_parameter(self, bp_body):
        # u(x_2) sits halfway along [c, x_2]
        c = np.array([-0.5, 0.0, 0.0])
        x2 = np.array([-1.0, -1.0, 0.5])
        assert bp_body.shifted_minkowski(c, x2 - c) == 2.0

    def test_shifted_gauge_against_bisection(self, bp_body):
        c = np.array([2.0, 0.0, 0.0])
        v = np.array([-3.0, -1.0, 1.0])
        oracle = membership_gauge(lambda p: bp_body.contains(c + p), v)
        assert bp_body.shifted_minkowski(c, v) == pytest.approx(4.0 / 3.0, rel=1e-15)
        assert oracle == pytest.approx(4.0 / 3.0, rel=1e-12)

    def test_shifted_gauge_needs_interior(self, bp_body):
        with pytest.raises(PreconditionError):
            bp_body.shifted_minkowski([-1.0, 0.0, 0.0], [1.0, 0.0, 0.0])

    def test_cone(self, bp_body):
        assert bp_body.char_cone_contains([1.0, 0.0, 0.0])
        assert bp_body.char_cone_contains(np.zeros(3))
        assert not bp_body.char_cone_contains([-1.0, 0.0, 0.0])
        # oracle: far points along the ray stay inside
        assert all(bp_body.contains([0.5, 0.2, 0.1] + t * np.array([1.0, 0, 0]))
                   for t in (1e2, 1e4, 1e6))

    @given(vec3)
    def test_lineality_trivial(self, x):
        assume(np.any(x != 0))
        assert not bessaga_pelczynski_body().lineality_contains(x)

    def test_active_constraints_tie_break(self, bp_body):
        assert bp_body.active_constraints([-1.0, -1.0, -1.0], 1e-10).tolist() == [0]
        assert bp_body.active_constraints([-1.0, 0.0, 0.0], 1e-10).tolist() == [0, 1, 2]


class TestClassifier:
    def test_box(self, box3):
        assert box3.classify() == Case("i", m=3)

    def test_slab(self, slab3):
        assert slab3.classify() == Case("i", m=1)
        assert slab3.lineality_contains([0.0, 1.0, 1.0])

    def test_counterexample_body(self, bp_body):
        case = bp_body.classify()
        assert case.kind == "iii"
        assert np.array_equal(case.witness, [1.0, 0.0, 0.0])
        assert str(case) == "case iii, witness y=(1,0,0)"

    def test_lp_fallback_finds_witness(self, monkeypatch):
        # narrow cone x_i <= 2 x_j around (1,1,1): no axis or inward normal is a witness
        rows = [np.eye(3)[i] - 2 * np.eye(3)[j] for i in range(3) for j in range(3) if i != j]
        body = PolyhedralBody(rows, np.ones(len(rows)))
        import scipy.optimize
        calls = []
        real = scipy.optimize.linprog
        monkeypatch.setattr(scipy.optimize, "linprog",
                            lambda *a, **k: calls.append(1) or real(*a, **k))
        case = body.classify()
        assert calls
        assert case.kind == "iii"
        assert body.char_cone_contains(case.witness)
        assert not body.char_cone_contains(-case.witness)

    def test_smooth_cases(self, bowl):
        assert bowl.classify().kind == "iii"
        cyl = SmoothBody("ellipsoid_cylinder", 3, {"radii": [1, 2, 1], "free_axes": [2]})
        assert cyl.classify() == Case("i", m=2)

    def test_format(self):
        assert format_vector([1.0, -0.5, 0.0]) == "(1,-0.5,0)"


class TestGaugeProperties:
    @given(vec3, scale)
    def test_positive_homogeneity(self, x, t):
        body = bessaga_pelczynski_body()
        assert body.minkowski(t * x) == pytest.approx(t * body.minkowski(x), rel=1e-12, abs=1e-12)

    @given(vec3, vec3)
    def test_subadditivity(self, x, y):
        body = bessaga_pelczynski_body()
        assert body.minkowski(x + y) <= body.minkowski(x) + body.minkowski(y) + 1e-12

    @given(vec3)
    def test_membership_consistency(self, x):
        body = bessaga_pelczynski_body()
        assert body.contains(x) == (body.minkowski(x) <= 1.0)

    @given(vec3)
    def test_zero_set_is_cone(self, x):
        body = bessaga_pelczynski_body()
        assert (body.minkowski(x) == 0.0) == body.char_cone_contains(x)

    @given(vec3)
    def test_zero_shift(self, v):
        body = bessaga_pelczynski_body()
        assert body.shifted_minkowski(np.zeros(3), v) == body.minkowski(v)


class TestSmoothBody:
    def test_unknown_kind(self):
        with pytest.raises(InvalidInputError):
            SmoothBody("torus", 2)

    def test_unknown_params(self):
        with pytest.raises(InvalidInputError, match="unknown parameters"):
            SmoothBody("parabolic", 2, {"curvature": 1, "tilt": 2})

    @given(vec2)
    def test_bowl_gauge_closed_form(self, x):
        from radialhomeo.body import SmoothBody as SB
        bowl = SB("parabolic", 2, {"curvature": 1.0, "depth": 1.0})
        assume(np.abs(x).max() > 1e-6)
        assert bowl.minkowski(x) == pytest.approx(bowl_gauge(x), rel=1e-10, abs=1e-12)

    def test_bowl_cone_exact(self, bowl):
        assert bowl.minkowski([3.0, 0.0]) == 0.0
        assert bowl.minkowski([3.0, 1e-9]) > 0.0
        assert bowl.minkowski([-1.0, 0.0]) == pytest.approx(1.0, rel=1e-12)

    def test_bowl_gradient(self, bowl):
        assert bowl.gradient([-1.0, 0.0]).tolist() == [-1.0, 0.0]

    def test_projection_to_boundary(self, bowl):
        b = project_to_boundary(bowl, np.array([0.3, 2.0]))
        assert abs(bowl.defining_function(b)) < 1e-10
        assert project_to_boundary(bowl, np.array([1.0, 0.0])) is None

    def test_cylinder_gauge(self):
        cyl = SmoothBody("ellipsoid_cylinder", 3, {"radii": [2, 1, 1], "free_axes": [2]})
        assert cyl.minkowski([2.0, 0.0, 7.0]) == pytest.approx(1.0, rel=1e-11)
        assert cyl.minkowski([0.0, 0.0, -7.0]) == 0.0


class TestAxisShiftedGauge:
    @given(st.floats(0.01, 3.0), vec3)
    def test_matches_shifted_gauge(self, offset, v):
        body = bessaga_pelczynski_body()
        y = np.array([1.0, 0.0, 0.0])
        a = body.axis_shifted_minkowski(y, offset, v)
        b = body.shifted_minkowski((offset - 1.0) * y, v)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-12)

    def test_keeps_precision_near_minus_y(self, bp_body):
        # c = (1e-20 - 1) y rounds to -y, yet the slack on the first facet is 1e-20
        y = np.array([1.0, 0.0, 0.0])
        assert bp_body.axis_shifted_minkowski(y, 1e-20, [-1.0, 0.0, 0.0]) == pytest.approx(1e20)

    def test_smooth_default(self, bowl):
        y = np.array([1.0, 0.0])
        v = np.array([-0.5, 1.0])
        assert bowl.axis_shifted_minkowski(y, 2.0, v) == bowl.shifted_minkowski(y, v)
