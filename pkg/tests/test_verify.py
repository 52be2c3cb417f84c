import json
import math

import numpy as np
import pytest

from radialhomeo.errors import InvalidInputError
from radialhomeo.maps import MapVariant
from radialhomeo.verify import (ProbeSequence, Report, bepe_counterexample, continuity_battery,
                                continuity_probe, counterexample_sequence, counterexample_table,
                                gamma_condition_check, gauge_oracle_check, halfspace_image_suite,
                                membership_gauge, mink_continuity_check, monotone_checks,
                                normalization_check, quadratic_oracle_check, roundtrip_suite,
                                shifted_gauge_sequence_errors, smoothness_probe)


class TestReport:
    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            Report("x", [], 1.0)

    def test_verdict(self):
        r = Report("x", [0.1, 0.3], 0.2)
        assert (r.max_error, r.verdict, r.passed) == (0.3, "fail", False)
        assert r.mean_error == pytest.approx(0.2)

    def test_json(self):
        r = Report("x", [0.0], 1.0, {"arr": np.arange(2), "f": np.float64(1.5)})
        d = json.loads(r.to_json(full=True))
        assert d["metadata"] == {"arr": [0, 1], "f": 1.5}
        assert d["per_point_errors"] == [0.0]

    def test_summary_marks_unasserted(self):
        assert "not asserted" in Report("x", [1.0], 0.0, asserted=False).summary()


class TestProbeSequence:
    def test_points_converge(self):
        p = ProbeSequence([1.0, 0.0], [0.0, 1.0], 10)
        d = np.linalg.norm(p.points() - p.base_point, axis=1)
        assert np.all(np.diff(d) < 0)

    def test_geometric(self):
        assert ProbeSequence([0.0], [1.0], 3, "geometric").steps().tolist() == [0.5, 0.25, 0.125]

    def test_bad_rule(self):
        with pytest.raises(InvalidInputError):
            ProbeSequence([0.0], [1.0], 3, "cubic")


def test_roundtrip_rejects_empty(bp_frame):
    with pytest.raises(InvalidInputError):
        roundtrip_suite(MapVariant.c1(), bp_frame, 0, 1)


def test_roundtrip_is_deterministic(bp_frame):
    a = roundtrip_suite(MapVariant.c2(), bp_frame, 200, 42)
    b = roundtrip_suite(MapVariant.c2(), bp_frame, 200, 42)
    assert np.array_equal(a.per_point_errors, b.per_point_errors)
    assert a.passed


def test_roundtrip_bepe_not_asserted(bp_frame):
    assert not roundtrip_suite(MapVariant.bepe(), bp_frame, 50, 7).asserted


def test_halfspace_suite(bp_frame):
    assert halfspace_image_suite(MapVariant.bk(), bp_frame, 300, 7, boundary_count=100).passed


def test_normalization(bp_frame):
    assert normalization_check(MapVariant.dob(), bp_frame, 100, 1).passed


def test_continuity_c2(bp_frame):
    assert continuity_probe(MapVariant.c2(), bp_frame, counterexample_sequence()).passed


def test_continuity_dob_eventual_identity(bp_frame):
    r = continuity_probe(MapVariant.dob(), bp_frame, continuity_battery()[1])
    assert r.passed
    assert r.metadata["tail_fixed_points"] == 500


def test_continuity_bepe_fails(bp_frame):
    r = continuity_probe(MapVariant.bepe(), bp_frame, counterexample_sequence())
    assert not r.passed and r.max_error >= 1.49


def test_counterexample_table_first_row():
    n, x, hx, err = counterexample_table(1)[0]
    assert n == 1 and hx.tolist() == [-2.5, -2.5, 2.5] and err == 0.0


def test_bepe_counterexample():
    r = bepe_counterexample(200)
    assert r.passed
    assert r.metadata["gap_min"] >= 1.49 and r.metadata["gap_max"] <= 1.51


class TestGammaCondition:
    def test_default_delta(self):
        assert gamma_condition_check(0.1, 10_000).passed

    def test_huge_delta(self):
        assert not gamma_condition_check(1e6, 10_000).passed

    def test_empty_grid(self):
        with pytest.raises(InvalidInputError):
            gamma_condition_check(0.1, 0)


def test_mink_continuity(bp_body, bowl):
    assert mink_continuity_check(bp_body, grid_size=100, seed=3).passed
    assert mink_continuity_check(bowl, grid_size=50, seed=3).passed


def test_constant_sequence_error_zero(bp_body):
    e = shifted_gauge_sequence_errors(bp_body, np.zeros(3), np.ones(3), np.zeros(3),
                                      np.zeros(3), 10)
    assert np.all(e == 0.0)


def test_monotone(bp_frame):
    assert monotone_checks(MapVariant.dob(), bp_frame, 100).passed


def test_monotone_needs_dob(bp_frame):
    with pytest.raises(InvalidInputError):
        monotone_checks(MapVariant.c2(), bp_frame, 10)


def test_smoothness(bowl_frame):
    r = smoothness_probe(MapVariant.dob(), bowl_frame, 20, 11)
    assert r.passed
    assert 1.8 <= r.metadata["ratio_min"] <= r.metadata["ratio_max"] <= 2.2


def test_smoothness_step_floor(bowl_frame):
    with pytest.raises(InvalidInputError):
        smoothness_probe(MapVariant.dob(), bowl_frame, 5, 1, h=1e-12)


def test_membership_gauge_matches_closed_form():
    # unit disk: gauge is the Euclidean norm
    inside = lambda p: float(p @ p) <= 1.0
    assert membership_gauge(inside, np.array([3.0, 4.0])) == pytest.approx(5.0, rel=1e-13)
    assert membership_gauge(inside, np.array([0.03, 0.04])) == pytest.approx(0.05, rel=1e-13)


def test_gauge_oracle(bp_body):
    assert gauge_oracle_check(bp_body, 500, 9).passed


def test_quadratic_oracle():
    r = quadratic_oracle_check(200, 13)
    assert r.passed and r.per_point_errors.size == 600


def test_c1_gap_rate(bp_frame):
    # the c1 gap along (-1,-1,1/n) decays like n^-1/2, not 1/n
    c1 = MapVariant.c1()
    from radialhomeo.maps import forward
    base = forward(c1, bp_frame, [-1.0, -1.0, 0.0])
    for n in (10 ** 4, 10 ** 6, 10 ** 8):
        gap = np.linalg.norm(forward(c1, bp_frame, [-1.0, -1.0, 1.0 / n]) - base)
        assert gap * math.sqrt(n) == pytest.approx(1.0, abs=2.0 / math.sqrt(n))
