"""Interpolation, Gram matrices, and finite-section frame bounds."""

import math

import numpy as np
import pytest

from pwcis import (
    IndexedSequence,
    InterpolationProblem,
    InvalidInput,
    NumericFailure,
    RieszBoundsReport,
    gram_matrix,
    interpolate_eval,
    norm_equivalence_check,
    riesz_bounds,
)

PI = math.pi
TWO_PI = 2.0 * math.pi


def integer_nodes(n):
    k = np.arange(-n, n + 1)
    return IndexedSequence(n_min=-n, values=k.astype(float))


def jitter_nodes(n, amp=0.2):
    k = np.arange(-n, n + 1)
    return IndexedSequence(n_min=-n, values=k + amp * (-1.0) ** k)


# ---------------------------------------------------------------------------
# Gram matrix


def test_gram_integers_is_scaled_identity():
    G = gram_matrix(integer_nodes(10))
    assert np.array_equal(G, TWO_PI * np.eye(21))


def test_gram_entry_closed_form():
    nodes = IndexedSequence(n_min=0, values=np.array([0.0, 0.5]))
    G = gram_matrix(nodes)
    assert G[0, 0] == TWO_PI
    assert G[0, 1] == pytest.approx(4.0, rel=1e-15)
    assert G[1, 0] == G[0, 1]


def test_gram_series_cut_is_seamless():
    # the small-difference series takes over below 1e-6 without a jump
    for d in (9e-7, 1.1e-6):
        nodes = IndexedSequence(n_min=0, values=np.array([0.0, d]))
        G = gram_matrix(nodes)
        closed = 2.0 * math.sin(PI * d) / d
        assert G[0, 1] == pytest.approx(closed, rel=1e-13)


def test_gram_positive_semidefinite_on_jitter():
    G = gram_matrix(jitter_nodes(15))
    eigs = np.linalg.eigvalsh(G)
    assert eigs.min() >= -1e-9 * TWO_PI
    assert np.allclose(G, G.T, rtol=0.0, atol=0.0)


# ---------------------------------------------------------------------------
# finite-section frame bounds


def test_riesz_bounds_integers_are_exact():
    rep = riesz_bounds(integer_nodes(50), 101)
    assert rep.lower == TWO_PI
    assert rep.upper == TWO_PI
    assert rep.size == 101
    assert rep.to_dict() == {"size": 101, "lower": TWO_PI, "upper": TWO_PI}


def test_riesz_bounds_jitter_stabilize():
    nodes = jitter_nodes(50)
    small = riesz_bounds(nodes, 41)
    large = riesz_bounds(nodes, 81)
    assert small.lower > 0.0
    assert abs(large.lower - small.lower) / small.lower <= 0.05
    assert abs(large.upper - small.upper) / small.upper <= 0.05


def test_riesz_bounds_sections_are_monotone():
    """Growing principal sections can only widen the spectral range."""
    nodes = jitter_nodes(50)
    reports = [riesz_bounds(nodes, s) for s in (21, 41, 81)]
    for a, b in zip(reports[:-1], reports[1:]):
        assert b.lower <= a.lower + 1e-9
        assert b.upper >= a.upper - 1e-9


def test_riesz_bounds_validation():
    nodes = integer_nodes(10)
    with pytest.raises(InvalidInput):
        riesz_bounds(nodes, 10)  # even
    with pytest.raises(InvalidInput):
        riesz_bounds(nodes, 23)  # larger than the window
    with pytest.raises(InvalidInput):
        riesz_bounds(nodes, -3)
    with pytest.raises(NumericFailure):
        RieszBoundsReport(size=3, lower=2.0, upper=1.0)


# ---------------------------------------------------------------------------
# interpolation


def test_cardinal_series_on_integers():
    nodes = integer_nodes(20)
    data = np.zeros(41, dtype=complex)
    data[20] = 1.0
    prob = InterpolationProblem(nodes, data)
    assert interpolate_eval(prob, 0.0 + 0.0j) == 1.0 + 0.0j
    for m in (-7, -1, 1, 13):
        assert interpolate_eval(prob, complex(m)) == 0.0
    assert interpolate_eval(prob, 0.5 + 0.0j).real == pytest.approx(2.0 / PI, rel=1e-14)


def test_integer_node_values_reproduce_bitwise():
    rng = np.random.default_rng(12)
    nodes = integer_nodes(20)
    data = rng.normal(size=41) + 1j * rng.normal(size=41)
    prob = InterpolationProblem(nodes, data)
    for i, lam in enumerate(nodes.values):
        assert interpolate_eval(prob, complex(lam)) == data[i]


def test_jittered_node_values_reproduce():
    rng = np.random.default_rng(3)
    k = np.arange(-8, 9)
    nodes = IndexedSequence(n_min=-8, values=k + rng.uniform(-0.2, 0.2, size=17))
    data = rng.normal(size=17).astype(complex)
    prob = InterpolationProblem(nodes, data)
    for i, lam in enumerate(nodes.values):
        assert interpolate_eval(prob, complex(lam)) == pytest.approx(data[i], abs=1e-12)


def test_interpolation_is_linear():
    rng = np.random.default_rng(8)
    nodes = integer_nodes(10)
    a = rng.normal(size=21).astype(complex)
    b = rng.normal(size=21).astype(complex)
    pa = InterpolationProblem(nodes, a)
    pb = InterpolationProblem(nodes, b)
    pab = InterpolationProblem(nodes, a + b)
    for z in (0.3 + 0.1j, -4.7, 2.0 - 1.5j):
        lhs = interpolate_eval(pab, complex(z))
        rhs = interpolate_eval(pa, complex(z)) + interpolate_eval(pb, complex(z))
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_interpolation_problem_validation():
    nodes = integer_nodes(5)
    with pytest.raises(InvalidInput):
        InterpolationProblem(nodes, np.ones(5, dtype=complex))  # length mismatch
    with pytest.raises(InvalidInput):
        InterpolationProblem(nodes, np.full(11, np.nan, dtype=complex))


def test_norm_equivalence_cardinal_tail():
    """One cardinal function on [-T, T] misses exactly its two sinc tails,
    1/(pi^2 T) of unit mass at T = 200."""
    nodes = integer_nodes(20)
    data = np.zeros(41, dtype=complex)
    data[20] = 1.0
    out = norm_equivalence_check(InterpolationProblem(nodes, data), 200.0)
    assert out["l2_data"] == 1.0
    assert out["l2_function"] == pytest.approx(1.0 - 1.0 / (PI**2 * 200.0), rel=1e-6)
    assert abs(out["ratio"] - 1.0) < 0.01
    assert out["degenerate"] is False


def test_norm_equivalence_zero_data_is_degenerate():
    nodes = integer_nodes(5)
    out = norm_equivalence_check(
        InterpolationProblem(nodes, np.zeros(11, dtype=complex)), 20.0
    )
    assert out["l2_data"] == 0.0
    assert out["l2_function"] == 0.0
    assert math.isnan(out["ratio"])
    assert out["degenerate"] is True
