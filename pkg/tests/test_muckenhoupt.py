"""Discrete and continuous weight-ratio scans."""

import math

import numpy as np
import pytest

from pwcis import (
    InvalidInput,
    MuckenhouptReport,
    NumericFailure,
    PositiveSequence,
    SignedCriticalSequence,
    continuous_a2_scan,
    discrete_ratio,
    log_increment_bound,
    neighbor_tip_bound,
    power_law_sequence,
    signed_from_weights,
    ungl_inequality,
    weights_from_signed,
)

LOG2_HALF = 0.34657359027997264  # 0.5 * ln 2


def test_positive_sequence_validation():
    with pytest.raises(InvalidInput):
        PositiveSequence(n_min=0, values=np.array([1.0, 0.0]))
    with pytest.raises(InvalidInput):
        PositiveSequence(n_min=0, values=np.array([1.0, -2.0]))
    with pytest.raises(InvalidInput):
        PositiveSequence(n_min=0, values=np.array([np.inf]))
    with pytest.raises(InvalidInput):
        PositiveSequence(n_min=0, values=np.array([]))


def test_signed_sequence_sign_pattern():
    SignedCriticalSequence(n_min=-2, values=np.array([0.3, -0.1, 0.2, -0.5, 0.4]))
    with pytest.raises(InvalidInput):
        SignedCriticalSequence(n_min=0, values=np.array([1.0, 1.0]))
    with pytest.raises(InvalidInput):
        SignedCriticalSequence(n_min=1, values=np.array([1.0, -1.0]))  # odd start
    # zeros satisfy the pattern but have no log
    c = SignedCriticalSequence(n_min=0, values=np.array([0.0, -1.0]))
    with pytest.raises(InvalidInput):
        c.log_moduli()


def test_constant_weight_ratio_floor():
    d = PositiveSequence(n_min=-20, values=np.full(41, 2.5))
    rep = discrete_ratio(d)
    assert rep.max_ratio == pytest.approx(1.0, rel=1e-13)
    assert -20 <= rep.witness[0] <= rep.witness[1] <= 20
    assert rep.window_cap == 41


def test_alternating_weight_closed_form():
    """Window {1, e} gives (1 + cosh 1)/2, the worst cap-2 ratio."""
    vals = np.array([1.0, math.e, 1.0, math.e, 1.0, math.e, 1.0])
    rep = discrete_ratio(PositiveSequence(n_min=0, values=vals), window_cap=2)
    assert rep.max_ratio == pytest.approx((1.0 + math.cosh(1.0)) / 2.0, rel=1e-14)
    assert rep.max_ratio == pytest.approx(1.2715403174076219, rel=1e-14)
    assert rep.witness == (0, 1)


def test_discrete_ratio_random_window_oracle():
    # frozen from a direct fsum enumeration over all windows, same seed
    rng = np.random.default_rng(1234)
    d = PositiveSequence(n_min=-7, values=np.exp(rng.uniform(-1.0, 1.0, size=40)))
    rep = discrete_ratio(d)
    assert rep.max_ratio == pytest.approx(2.1065898126021683, rel=1e-12)
    assert rep.witness == (17, 18)
    rep3 = discrete_ratio(d, p=3.0)
    assert rep3.max_ratio == pytest.approx(1.778999703825906, rel=1e-12)
    assert rep3.witness == (17, 18)


def test_discrete_ratio_argument_checks():
    d = power_law_sequence(0.25, 0, 10)
    with pytest.raises(InvalidInput):
        discrete_ratio(d, p=1.0)
    with pytest.raises(InvalidInput):
        discrete_ratio(d, window_cap=0)
    with pytest.raises(InvalidInput):
        discrete_ratio(d, window_cap=12)


def test_report_rejects_subunit_ratio_at_p2():
    """Cauchy-Schwarz forces ratio >= 1 at p = 2; below it means a broken scan."""
    with pytest.raises(NumericFailure):
        MuckenhouptReport(p=2.0, max_ratio=0.5, witness=(0, 0), window_cap=1)
    # other exponents carry no such floor
    MuckenhouptReport(p=3.0, max_ratio=0.5, witness=(0, 0), window_cap=1)


def test_power_law_sequence_values():
    d = power_law_sequence(0.5, -3, 3)
    assert d.n_min == -3
    assert np.allclose(d.values, [4.0, 3.0, 2.0, 1.0, 2.0, 3.0, 4.0])
    with pytest.raises(InvalidInput):
        power_law_sequence(0.5, 2, 1)


def test_power_law_ratio_grows_only_at_half():
    """The exponent 2a = 1 sits on the boundary: the window ratio of
    (1+|n|)^(2a) diverges like log for a = 1/2 and stabilizes for a < 1/2."""
    quarter = [
        discrete_ratio(power_law_sequence(0.25, -n, n)).max_ratio for n in (256, 512)
    ]
    assert abs(quarter[1] - quarter[0]) / quarter[0] <= 0.10
    half = [
        discrete_ratio(power_law_sequence(0.5, -n, n)).max_ratio for n in (64, 4096)
    ]
    assert half[1] >= 1.5 * half[0]


def test_weight_critical_round_trip():
    d = power_law_sequence(0.3, -5, 5)
    c = signed_from_weights(d)
    back = weights_from_signed(c)
    assert back.n_min == d.n_min
    assert np.allclose(back.values, d.values, rtol=1e-15)
    signs = (-1.0) ** np.arange(-5, 6)
    assert np.all(signs * c.values > 0.0)
    with pytest.raises(InvalidInput):
        weights_from_signed(SignedCriticalSequence(n_min=0, values=np.array([0.0, -1.0])))


def test_neighbor_tip_bound_power_law():
    # largest neighbor log-increment of (1+|n|)^a sits at n = 0 -> 1: a ln 2
    c = signed_from_weights(power_law_sequence(0.5, -10, 10))
    assert neighbor_tip_bound(c) == pytest.approx(LOG2_HALF, rel=1e-14)
    with pytest.raises(InvalidInput):
        neighbor_tip_bound(SignedCriticalSequence(n_min=0, values=np.array([1.0])))


def test_log_increment_bound_reports_worst_pair():
    c = signed_from_weights(power_law_sequence(0.5, -8, 8))
    out = log_increment_bound(c, C_ratio=4.0)
    assert out["holds"]
    # an enormous spike violates any modest-ratio increment bound
    vals = np.array([1.0, -1.0, 1e8, -1.0, 1.0])
    bad = log_increment_bound(SignedCriticalSequence(n_min=0, values=vals), C_ratio=4.0)
    assert not bad["holds"]
    assert 2 in bad["worst_pair"]
    with pytest.raises(InvalidInput):
        log_increment_bound(c, C_ratio=0.0)


def test_continuous_scan_constant_weight():
    rep = continuous_a2_scan(lambda x: 2.0, lengths=[1.0, 3.0], centers=[0.0, 5.0])
    assert rep.max_ratio == pytest.approx(1.0, rel=1e-9)
    assert rep.p == 2.0
    assert rep.interval is not None


def test_continuous_scan_absolute_value_weight():
    """w(x) = |x| is the canonical borderline weight; with the reciprocal
    floored at 1e-9 the centered-interval ratio is (1 + log(L/2f))/2."""
    rep = continuous_a2_scan(lambda x: abs(x), lengths=[1.0, 4.0], centers=[0.0])
    closed = (1.0 + math.log(4.0 / 2e-9)) / 2.0
    assert rep.max_ratio == pytest.approx(closed, rel=1e-6)
    assert rep.witness == (0, 1)
    assert rep.interval == (-2.0, 2.0)


def test_continuous_scan_validation():
    with pytest.raises(InvalidInput):
        continuous_a2_scan(lambda x: 1.0, lengths=[], centers=[0.0])
    with pytest.raises(InvalidInput):
        continuous_a2_scan(lambda x: 1.0, lengths=[-1.0], centers=[0.0])
    with pytest.raises(InvalidInput):
        continuous_a2_scan(lambda x: 1.0, lengths=[1.0], centers=[0.0], w_floor=0.0)


def test_ungl_inequality_samples():
    rng = np.random.default_rng(42)
    for _ in range(2000):
        p, q = np.exp(rng.uniform(-3.0, 3.0, size=2))
        alpha = rng.uniform(-0.5, 0.5)
        assert ungl_inequality(p, q, alpha)


def test_ungl_inequality_edge_cases():
    assert ungl_inequality(1.0, 1.0, 0.5)
    assert ungl_inequality(2.0, 2.0, -0.5)
    assert ungl_inequality(1e-8, 1e8, 0.0)
