"""The brute-force Fock-space machinery is the oracle for everything else,
so it gets validated first and on its own terms: expansion amplitudes against
hand-countable cases, unit norm via Cauchy-Binet, operator algebra via the
su(2) commutation relations, and Hermiticity of the matrix elements."""

from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import helpers
from spincol import (
    FockVector,
    MetricNotIdentity,
    SpinorDeterminant,
    TooLarge,
    apply_spin,
    build_overlap_blocks,
    expand,
    expect_s2,
    gen_random_gchf,
    gen_rhf,
    oracle_expectation,
    to_identity_metric,
)


def test_expand_pure_alpha_single_pattern():
    vec = expand(helpers.pure_alpha_one_electron())
    assert len(vec.amplitudes) == comb(2, 1)
    assert vec.amplitudes[0b01] == pytest.approx(1.0)
    assert vec.amplitudes[0b10] == pytest.approx(0.0)


def test_expand_x_polarized_two_patterns():
    vec = expand(helpers.x_polarized_one_electron())
    r = 1.0 / np.sqrt(2.0)
    assert vec.amplitudes[0b01] == pytest.approx(r)
    assert vec.amplitudes[0b10] == pytest.approx(r)


def test_expand_elementary_determinant_and_column_swap_sign():
    # Spinors equal to the first two alpha spin-orbitals: amplitude one on
    # that pattern; swapping the columns flips the sign of the minor.
    straight = SpinorDeterminant(2, 2, [[1.0, 0.0], [0.0, 1.0]], np.zeros((2, 2)))
    swapped = SpinorDeterminant(2, 2, [[0.0, 1.0], [1.0, 0.0]], np.zeros((2, 2)))
    mask = 0b0011
    assert expand(straight).amplitudes[mask] == pytest.approx(1.0)
    assert expand(swapped).amplitudes[mask] == pytest.approx(-1.0)


def test_expand_counts_all_patterns():
    det = gen_random_gchf(3, 2, seed=5)
    vec = expand(det)
    assert len(vec.amplitudes) == comb(6, 2)


def test_expand_norm_cauchy_binet():
    det = gen_random_gchf(3, 2, seed=1)
    assert expand(det).norm() == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=25, deadline=None)
@given(
    m=st.integers(min_value=1, max_value=4),
    ne=st.integers(min_value=1, max_value=4),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_expand_norm_is_one_for_any_orthonormal_determinant(m, ne, seed):
    if ne > 2 * m:
        ne = 2 * m
    det = gen_random_gchf(m, ne, seed)
    assert expand(det).norm() == pytest.approx(1.0, abs=1e-10)


def test_expand_requires_identity_metric():
    det = helpers.random_metric_determinant(2, 2, seed=3)
    with pytest.raises(MetricNotIdentity):
        expand(det)
    assert expand(to_identity_metric(det)).norm() == pytest.approx(1.0, abs=1e-12)


def test_expand_guard_rail():
    det = gen_random_gchf(8, 8, seed=0)
    with pytest.raises(TooLarge):
        expand(det)


def test_oracle_guard_rail_on_basis_size():
    det = gen_random_gchf(7, 1, seed=0)
    with pytest.raises(TooLarge):
        oracle_expectation(det, "Sz")


def test_apply_sz_is_diagonal():
    vec = FockVector(1, 1, {0b01: 1.0})
    out = apply_spin(vec, "Sz")
    assert out.amplitudes == {0b01: 0.5}


def test_apply_splus_raises_beta():
    vec = FockVector(1, 1, {0b10: 1.0})
    out = apply_spin(vec, "S+")
    assert out.amplitudes == {0b01: 1.0}
    assert apply_spin(out, "S+").amplitudes == {}


def test_apply_sminus_lowers_alpha():
    vec = FockVector(1, 1, {0b01: 1.0})
    assert apply_spin(vec, "S-").amplitudes == {0b10: 1.0}


def test_splus_annihilates_closed_shell():
    det = gen_rhf(np.array([[1.0]]))
    vec = expand(det)
    raised = apply_spin(vec, "S+")
    assert all(abs(a) < 1e-15 for a in raised.amplitudes.values())


def _random_fock_vector(rng, m, ne):
    patterns = list(combinations(range(2 * m), ne))
    amps = rng.standard_normal(len(patterns)) + 1j * rng.standard_normal(len(patterns))
    amps /= np.linalg.norm(amps)
    vec = {}
    for rows, a in zip(patterns, amps):
        mask = 0
        for r in rows:
            mask |= 1 << r
        vec[mask] = complex(a)
    return FockVector(m, ne, vec)


def _max_amp_diff(u, v):
    keys = set(u.amplitudes) | set(v.amplitudes)
    return max((abs(u.amplitudes.get(k, 0.0) - v.amplitudes.get(k, 0.0)) for k in keys), default=0.0)


def test_su2_commutators_on_random_vectors(rng):
    for _ in range(50):
        m = int(rng.integers(1, 4))
        ne = int(rng.integers(1, 2 * m + 1))
        v = _random_fock_vector(rng, m, ne)

        plus_minus = apply_spin(apply_spin(v, "S-"), "S+")
        minus_plus = apply_spin(apply_spin(v, "S+"), "S-")
        commutator = plus_minus.add(minus_plus.scaled(-1.0))
        assert _max_amp_diff(commutator, apply_spin(v, "Sz").scaled(2.0)) < 1e-12

        for op, sign in (("S+", 1.0), ("S-", -1.0)):
            left = apply_spin(apply_spin(v, op), "Sz")
            right = apply_spin(apply_spin(v, "Sz"), op)
            assert _max_amp_diff(left.add(right.scaled(-1.0)), apply_spin(v, op).scaled(sign)) < 1e-12


def test_spin_operators_hermitian(rng):
    for op in ("Sz", "Sx", "Sy"):
        v = _random_fock_vector(rng, 3, 2)
        w = _random_fock_vector(rng, 3, 2)
        lhs = v.inner(apply_spin(w, op))
        rhs = w.inner(apply_spin(v, op))
        assert lhs == pytest.approx(rhs.conjugate(), abs=1e-12)


def test_ladder_operators_adjoint(rng):
    v = _random_fock_vector(rng, 2, 2)
    w = _random_fock_vector(rng, 2, 2)
    assert v.inner(apply_spin(w, "S+")) == pytest.approx(
        apply_spin(v, "S-").inner(w), abs=1e-12
    )


def test_oracle_s2_trivials():
    assert oracle_expectation(helpers.pure_alpha_one_electron(), "S2").real == pytest.approx(0.75)
    triplet = SpinorDeterminant(2, 2, [[1.0, 0.0], [0.0, 1.0]], np.zeros((2, 2)))
    assert oracle_expectation(triplet, "S2").real == pytest.approx(2.0)


def test_oracle_handles_metric_by_transforming():
    det = helpers.random_metric_determinant(2, 2, seed=9)
    blocks = build_overlap_blocks(det)
    assert oracle_expectation(det, "S2").real == pytest.approx(expect_s2(blocks), abs=1e-10)


def test_unknown_operator_rejected():
    vec = FockVector(1, 1, {0b01: 1.0})
    with pytest.raises(ValueError):
        apply_spin(vec, "S?")
    with pytest.raises(ValueError):
        oracle_expectation(helpers.pure_alpha_one_electron(), "bogus")
