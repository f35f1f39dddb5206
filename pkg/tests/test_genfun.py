"""Generating functions: products, exact tails, critical data, line bounds."""

import cmath
import math

import numpy as np
import pytest

from pwcis import (
    IndexedSequence,
    InvalidInput,
    NumericFailure,
    PoleEvaluation,
    SineTail,
    SymmetricProduct,
    WeightTrace,
    auto_representation,
    cartwright_integral,
    critical_data,
    derivative_at_zeros,
    evaluate,
    line_modulus_bounds,
    log_derivative,
    log_modulus,
    node_derivative,
    node_distance,
    sine,
    tail_completion,
    type_estimate,
)

PI = math.pi


def closed_sine(z):
    return cmath.sin(PI * z) / PI


def integer_window(n):
    k = np.arange(-n, n + 1)
    return IndexedSequence(n_min=-n, values=k.astype(float))


def jitter_window(n, amp, seed=5):
    rng = np.random.default_rng(seed)
    k = np.arange(-n, n + 1)
    return IndexedSequence(n_min=-n, values=k + rng.uniform(-amp, amp, size=k.size))


# ---------------------------------------------------------------------------
# exact tail representation


def test_sine_matches_library_sine():
    F = sine()
    rng = np.random.default_rng(3)
    for _ in range(50):
        z = complex(rng.uniform(-30, 30), rng.uniform(-4, 4))
        want = closed_sine(z)
        got = evaluate(F, z)
        assert got == pytest.approx(want, rel=1e-13, abs=1e-300)


def test_sine_zeros_are_exact():
    F = sine()
    for n in (-7, -1, 0, 1, 12, 305):
        assert evaluate(F, complex(n)) == 0


def test_real_axis_values_are_structurally_real():
    for F in (sine(), SineTail(np.array([-2.0, -0.9, 0.1, 1.2, 2.0]))):
        v = evaluate(F, complex(0.37))
        assert v.imag == 0.0


def test_sinetail_merge_branch_agrees_with_direct_product():
    """Near a core integer the rearranged branch must join the plain formula."""
    core = np.array([-2.0, -1.3, 0.2, 0.8, 2.0])
    F = SineTail(core)

    def direct(z):
        w = closed_sine(z)
        for n, lam in zip(range(-2, 3), core):
            w *= (z - lam) / (z - n)
        return w

    for z in (1.0 + 0.4j, 0.97, 1.03 - 0.02j, -1.51, 0.5j):
        assert evaluate(F, z) == pytest.approx(direct(z), rel=1e-10)
    # exactly at a tail-adjacent core integer the direct form is 0/0 but the
    # function value is finite; check against the factored finite product
    k = 1
    want = (-1.0) ** k * (k - core[k + 2])
    for n, lam in zip((-2, -1, 0, 2), core[[0, 1, 2, 4]]):
        want *= (k - lam) / (k - n)
    assert evaluate(F, complex(k)) == pytest.approx(want, rel=1e-13)


def test_sinetail_validation():
    with pytest.raises(InvalidInput):
        SineTail(np.array([-1.0, 0.0]))  # even length has no center index
    with pytest.raises(InvalidInput):
        SineTail(np.array([-1.0, 0.0, 2.5]))  # right end beyond N + 1
    with pytest.raises(InvalidInput):
        SineTail(np.array([-2.5, 0.0, 1.0]))
    with pytest.raises(InvalidInput):
        SineTail(np.array([0.0, 0.0, 1.0]))
    with pytest.raises(InvalidInput):
        SineTail(np.array([0.0, np.nan, 1.0]))
    with pytest.raises(InvalidInput):
        SineTail(np.array([-1.0, 0.0, 1.0]), normalization=0.0)


def test_sinetail_overflow_guard():
    F = sine()
    with pytest.raises(NumericFailure):
        evaluate(F, 300.0j)
    # the log path keeps working far beyond the overflow line
    assert log_modulus(F, 300.0j) == pytest.approx(300.0 * PI - math.log(2.0 * PI), rel=1e-12)


# ---------------------------------------------------------------------------
# truncated symmetric product


def test_symmetric_product_truncation_error_shrinks():
    grid = [complex(a, b) for a in (-1.6, 0.3, 1.7) for b in (-2.0, 0.25, 2.0)]
    errs = []
    for R in (2000.0, 20000.0):
        n = int(R) - 1
        F = SymmetricProduct(integer_window(n), radius_R=R)
        worst = max(
            abs(evaluate(F, z) - closed_sine(z)) / abs(closed_sine(z)) for z in grid
        )
        errs.append(worst)
    assert errs[0] < 2e-2
    assert errs[1] < errs[0] / 5.0


def test_symmetric_product_validation():
    win = integer_window(10)
    with pytest.raises(InvalidInput):
        SymmetricProduct(win, radius_R=9.0)  # nodes outside the radius
    with pytest.raises(InvalidInput):
        SymmetricProduct(win, radius_R=20.0, normalization=0.0)


def test_symmetric_product_zero_node_factor():
    # the zero node contributes the plain factor z
    F = SymmetricProduct(integer_window(50), radius_R=100.0)
    assert evaluate(F, complex(0.0)) == 0
    small = evaluate(F, complex(1e-8)).real
    assert small == pytest.approx(1e-8, rel=1e-4)


# ---------------------------------------------------------------------------
# critical data


def test_critical_data_of_sine():
    data = critical_data(sine(), (-10, 10))
    n = np.arange(-10, 11)
    assert np.max(np.abs(data.points - (n - 0.5))) < 1e-10
    assert np.max(np.abs(np.abs(data.values.values) - 1.0 / PI)) < 1e-12
    assert data.values.n_min == -10
    signs = (-1.0) ** n
    assert np.all(signs * np.asarray(data.values.values) > 0.0)
    # gap 0 of the sine sits left of the origin with a negative extremum
    assert data.sign == -1
    d = data.to_dict()
    assert set(d) == {"points", "values"}
    assert d["values"]["n_min"] == -10


def test_critical_points_are_flat_spots():
    """Centered differences of the function itself must vanish at the
    reported abscissae, independently of the root solver.  The stored
    values carry the alternation-normalized pattern; the global
    orientation sits in the sign field."""
    F = SineTail(np.array(jitter_window(6, 0.2).values))
    data = critical_data(F, (-5, 6))
    assert data.sign in (-1, 1)
    h = 1e-6
    for x, c in zip(data.points, data.values.values):
        fd = (evaluate(F, complex(x + h)) - evaluate(F, complex(x - h))).real / (2 * h)
        assert abs(fd) < 1e-8
        assert evaluate(F, complex(x)).real == pytest.approx(data.sign * c, rel=1e-10)


def test_critical_data_range_validation():
    with pytest.raises(InvalidInput):
        critical_data(sine(), (3, 2))
    F = SymmetricProduct(integer_window(10), radius_R=50.0)
    with pytest.raises(InvalidInput):
        critical_data(F, (-10, 11))  # gap -10 needs node -11


def test_derivative_at_zeros_sine():
    sq = derivative_at_zeros(sine(), (-20, 20))
    assert sq.n_min == -20
    assert np.max(np.abs(np.asarray(sq.values) - 1.0)) < 1e-12


def test_node_derivative_signs():
    F = sine()
    assert node_derivative(F, 0) == pytest.approx(1.0, rel=1e-12)
    assert node_derivative(F, 1) == pytest.approx(-1.0, rel=1e-12)
    assert node_derivative(F, -4) == pytest.approx(1.0, rel=1e-12)


def test_node_distance():
    F = sine()
    assert node_distance(F, 0.5 + 0.0j) == pytest.approx(0.5)
    assert node_distance(F, 3.0 + 2.0j) == pytest.approx(2.0)
    assert node_distance(F, 0.3 + 0.4j) == pytest.approx(0.5)


# ---------------------------------------------------------------------------
# logarithmic quantities


def test_log_derivative_matches_cotangent():
    F = sine()
    for z in (0.3 + 0.2j, -2.6 + 1.0j, 0.5, 14.2 - 3.0j):
        want = PI / cmath.tan(PI * z)
        assert log_derivative(F, z) == pytest.approx(want, rel=1e-11)


def test_log_quantities_at_a_node():
    # log|F| degrades gracefully to -inf; the ratio F'/F has a true pole
    assert log_modulus(sine(), complex(3.0)) == -math.inf
    with pytest.raises(PoleEvaluation):
        log_derivative(sine(), complex(-1.0))


def test_type_estimate_sine():
    ests = type_estimate(sine(), [10.0, 20.0, 50.0, 100.0])
    assert ests == sorted(ests)
    assert ests[2] == pytest.approx(PI - math.log(2.0 * PI) / 50.0, abs=1e-9)
    with pytest.raises(InvalidInput):
        type_estimate(sine(), [10.0, 10.0])
    with pytest.raises(InvalidInput):
        type_estimate(sine(), [-1.0, 2.0])


def test_line_modulus_bounds_sine():
    out = line_modulus_bounds(sine(), y=1.0, x_range=(-20.0, 20.0), step=0.1)
    assert out["min"] == pytest.approx(math.sinh(PI) / PI, rel=1e-12)
    assert out["max"] == pytest.approx(math.cosh(PI) / PI, rel=1e-12)
    with pytest.raises(InvalidInput):
        line_modulus_bounds(sine(), y=0.0, x_range=(0.0, 1.0), step=0.1)
    with pytest.raises(InvalidInput):
        line_modulus_bounds(sine(), y=1.0, x_range=(1.0, 0.0), step=0.1)


def test_cartwright_integral_sine_is_zero():
    # |sin(pi t)| / pi never exceeds 1, so log+ kills the whole integrand
    assert cartwright_integral(sine(), 10.0) == 0.0


def test_cartwright_integral_scaled_sine():
    # independent oracle: breakpoint quadrature of log(3 |sin(pi t)|)/(1+t^2)
    # over the sub-intervals where the argument exceeds 1
    F = sine(normalization=3.0 * PI)
    assert cartwright_integral(F, 30.0) == pytest.approx(1.900042130371747, abs=1e-6)
    with pytest.raises(InvalidInput):
        cartwright_integral(F, 0.0)


def test_weight_trace_closed_form():
    w = WeightTrace(sine(), y=1.0)
    for x in (0.0, 0.3, 0.5, 2.7):
        want = (
            math.sin(PI * x) ** 2 * math.cosh(PI) ** 2
            + math.cos(PI * x) ** 2 * math.sinh(PI) ** 2
        ) / PI**2
        assert w(x) == pytest.approx(want, rel=1e-12)
    with pytest.raises(InvalidInput):
        WeightTrace(sine(), y=0.0)


# ---------------------------------------------------------------------------
# representation selection


def test_tail_completion_keeps_symmetric_windows_whole():
    win = jitter_window(8, 0.2)
    F = tail_completion(win)
    assert isinstance(F, SineTail)
    assert np.array_equal(F.core_values, win.values)


def test_tail_completion_falls_back_without_interlacing():
    vals = np.arange(-3, 4).astype(float)
    vals[-1] = 4.2  # right end walks past N + 1, so no exact tail fits
    win = IndexedSequence(n_min=-3, values=vals)
    F = tail_completion(win)
    assert isinstance(F, SymmetricProduct)
    assert evaluate(F, complex(4.2)) == 0


def test_auto_representation_accepts_integer_tailed_window():
    vals = np.arange(-12, 13).astype(float)
    vals[12] = 0.3  # single deviant at the center
    F = auto_representation(IndexedSequence(n_min=-12, values=vals))
    z = 0.4 + 0.7j
    want = closed_sine(z) * (z - 0.3) / z
    assert evaluate(F, z) == pytest.approx(want, rel=1e-10)


def test_auto_representation_fully_deviant_window_uses_product():
    win = jitter_window(6, 0.4, seed=9)
    F = auto_representation(win)
    assert isinstance(F, SymmetricProduct)
    for n in range(-6, 7):
        assert evaluate(F, complex(win.value(n))) == 0
