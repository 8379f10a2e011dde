import itertools
import math

import pytest

from ampent.channels import ASYMMETRIC, SYMMETRIC, AmplifierSpec, apply_phase_insensitive, composed_squeeze_magnitude
from ampent.errors import BracketFailure, NonPositiveSqueeze
from ampent.states import SqueezeSpec, entanglement_report, tmsv
from ampent.thresholds import (
    asymmetric_critical_gain,
    asymmetric_nu_minus,
    bisect_critical_gain,
    critical_phase_mismatch,
    hfm_nonclassicality_bound,
    symmetric_critical_gain,
    symmetric_nu_minus,
)

GRID_R = [0.25, 0.5, 1.0, 2.0]
GRID_ETA = [0.0, 0.5, 1.0, 2.0]


def channel_report(r, g, eta, selection):
    return entanglement_report(apply_phase_insensitive(tmsv(SqueezeSpec(r)), AmplifierSpec(g, eta), selection))


class TestSymmetric:
    def test_fully_inverted(self):
        result = symmetric_critical_gain(1.0, 0.0)
        assert result.critical_gain == pytest.approx(2 / (1 + math.exp(-2)), abs=1e-12)
        assert result.critical_gain == pytest.approx(1.761594, abs=1e-6)
        assert result.finite and result.solver == "closed_form"

    def test_large_squeeze_limit(self):
        assert symmetric_critical_gain(50.0, 0.0).critical_gain == pytest.approx(2.0, abs=1e-10)

    def test_partial_inversion(self):
        assert symmetric_critical_gain(1.0, 0.5).critical_gain == pytest.approx(1.404932, abs=1e-6)

    def test_zero_squeeze(self):
        assert symmetric_critical_gain(0.0, 0.7).critical_gain == 1.0

    @pytest.mark.parametrize("r,eta", list(itertools.product(GRID_R, GRID_ETA)))
    def test_bracketing(self, r, eta):
        g = symmetric_critical_gain(r, eta).critical_gain
        assert channel_report(r, g - 1e-4, eta, SYMMETRIC).entangled
        assert not channel_report(r, g + 1e-4, eta, SYMMETRIC).entangled

    def test_monotone(self):
        for eta in GRID_ETA:
            values = [symmetric_critical_gain(r, eta).critical_gain for r in GRID_R]
            assert values == sorted(values)
        for r in GRID_R:
            values = [symmetric_critical_gain(r, eta).critical_gain for eta in GRID_ETA]
            assert values == sorted(values, reverse=True)


class TestAsymmetric:
    def test_fully_inverted_never_separates(self):
        result = asymmetric_critical_gain(1.0, 0.0)
        assert not result.finite
        assert math.isinf(result.critical_gain)
        assert result.format_gain() == "inf"

    @pytest.mark.parametrize("r,eta", list(itertools.product(GRID_R, [0.5, 1.0, 2.0, 0.05])))
    def test_matches_algebraic_root(self, r, eta):
        # squaring ν(g) = 1/2 leaves g(k - 1) = k + 1 with k = 1 + 2η
        result = asymmetric_critical_gain(r, eta)
        assert result.solver == "bisection" and result.finite
        assert result.critical_gain == pytest.approx((1 + eta) / eta, rel=1e-8)
        assert abs(asymmetric_nu_minus(result.critical_gain, r, eta) - 0.5) <= 1e-9

    def test_reference_values(self):
        assert asymmetric_critical_gain(1.0, 0.5).critical_gain == pytest.approx(3.0, abs=1e-8)
        assert asymmetric_critical_gain(1.0, 2.0).critical_gain == pytest.approx(1.5, abs=1e-8)

    @pytest.mark.parametrize("r,eta", list(itertools.product(GRID_R, [0.5, 1.0, 2.0])))
    def test_bracketing(self, r, eta):
        g = asymmetric_critical_gain(r, eta).critical_gain
        assert channel_report(r, g - 1e-4, eta, ASYMMETRIC).entangled
        assert not channel_report(r, g + 1e-4, eta, ASYMMETRIC).entangled

    def test_decreasing_in_eta(self):
        values = [asymmetric_critical_gain(1.0, eta).critical_gain for eta in (0.5, 1.0, 2.0)]
        assert values == sorted(values, reverse=True)

    def test_bracket_failure(self):
        with pytest.raises(BracketFailure):
            asymmetric_critical_gain(1.0, 1e-14)

    @pytest.mark.parametrize("r,eta", list(itertools.product(GRID_R, GRID_ETA)))
    def test_more_robust_than_symmetric(self, r, eta):
        for g in (1.1, 1.5, 2.0, 3.0, 10.0):
            assert channel_report(r, g, eta, ASYMMETRIC).nu_minus < channel_report(r, g, eta, SYMMETRIC).nu_minus


class TestBisection:
    def test_symmetric_closed_form_recovered(self):
        for r, eta in itertools.product(GRID_R, GRID_ETA):
            root = bisect_critical_gain(lambda g: symmetric_nu_minus(g, r, eta))
            assert root == pytest.approx(symmetric_critical_gain(r, eta).critical_gain, abs=1e-8)


class TestHfm:
    def test_values(self):
        assert hfm_nonclassicality_bound(0.0) == 2.0
        assert hfm_nonclassicality_bound(0.5) == 1.5
        assert hfm_nonclassicality_bound(1e6) == pytest.approx(1 + 5e-7, abs=1e-9)

    @pytest.mark.parametrize("r,eta", list(itertools.product(GRID_R + [0.0, 5.0], GRID_ETA)))
    def test_symmetric_threshold_never_exceeds_bound(self, r, eta):
        assert symmetric_critical_gain(r, eta).critical_gain <= hfm_nonclassicality_bound(eta)


class TestCriticalPhase:
    def test_r1_rp05(self):
        alpha0 = critical_phase_mismatch(1.0, 0.5)
        assert alpha0 == pytest.approx(math.acos(-math.tanh(0.5) / math.tanh(2.0)), abs=1e-15)
        assert alpha0 == pytest.approx(2.070723, abs=1e-6)

    def test_equal_squeezes(self):
        assert critical_phase_mismatch(1.0, 1.0) == pytest.approx(2.481626, abs=1e-6)

    def test_branches_symmetric(self):
        assert critical_phase_mismatch(0.4, 1.3) == critical_phase_mismatch(1.3, 0.4)

    def test_non_positive(self):
        with pytest.raises(NonPositiveSqueeze):
            critical_phase_mismatch(0.0, 1.0)

    @pytest.mark.parametrize("r,rp", list(itertools.product([0.3, 0.7, 1.2, 2.0], repeat=2)))
    def test_identity_and_crossing(self, r, rp):
        alpha0 = critical_phase_mismatch(r, rp)
        assert math.pi / 2 < alpha0 <= math.pi
        big = max(r, rp)
        assert composed_squeeze_magnitude(r, rp, alpha0) == pytest.approx(big, abs=1e-9)
        assert composed_squeeze_magnitude(r, rp, alpha0 - 0.01) > big
        assert composed_squeeze_magnitude(r, rp, alpha0 + 0.01) < big
