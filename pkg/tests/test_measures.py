"""Unit tests for the uncertainty measures."""

import numpy as np
import pytest

from chanuq.errors import DimensionMismatchError
from chanuq.measures import (abs_variance, channel_measures, mwy_anti_info,
                             mwy_skew_info, operator_u, sym_abs_variance)
from chanuq.objects import center_operator, make_channel, make_density

import oracles
from oracles import I2, SX, ketbra


@pytest.fixture
def mixed_qubit():
    return make_density(I2 / 2)


def test_abs_variance_pauli(mixed_qubit):
    assert abs_variance(mixed_qubit, SX) == pytest.approx(1.0)


def test_abs_variance_raising_operator(mixed_qubit):
    assert abs_variance(mixed_qubit, ketbra(0, 1)) == pytest.approx(0.5)


def test_abs_variance_identity_vanishes(mixed_qubit):
    assert abs_variance(mixed_qubit, I2) == 0.0


def test_abs_variance_dim_mismatch(mixed_qubit):
    with pytest.raises(DimensionMismatchError):
        abs_variance(mixed_qubit, np.eye(3))


def test_sym_abs_variance_hermitian_reduction():
    rng = np.random.default_rng(20)
    for _ in range(20):
        rho = make_density(oracles.rand_rho(rng, 3))
        k = oracles.rand_op(rng, 3, hermitian=True)
        assert sym_abs_variance(rho, k) == pytest.approx(abs_variance(rho, k),
                                                         abs=1e-13)


def test_sym_abs_variance_raising_operator(mixed_qubit):
    assert sym_abs_variance(mixed_qubit, ketbra(0, 1)) == pytest.approx(0.5)


def test_sym_abs_variance_scalar_vanishes(mixed_qubit):
    assert sym_abs_variance(mixed_qubit, (0.3 - 0.7j) * I2) == pytest.approx(0.0, abs=1e-15)


def test_mwy_skew_info_mixed_state_vanishes(mixed_qubit):
    rng = np.random.default_rng(21)
    k = oracles.rand_op(rng, 2)
    assert mwy_skew_info(mixed_qubit, k) == pytest.approx(0.0, abs=1e-15)


def test_mwy_skew_info_pure_state_pauli():
    rho = make_density(ketbra(0, 0))
    assert mwy_skew_info(rho, SX) == pytest.approx(1.0)


def test_mwy_skew_info_equals_variance_on_pure_states():
    rng = np.random.default_rng(22)
    for _ in range(200):
        dim = int(rng.integers(2, 5))
        rho = make_density(oracles.rand_rho(rng, dim, rank=1))
        k = oracles.rand_op(rng, dim, hermitian=True)
        assert mwy_skew_info(rho, k) == pytest.approx(abs_variance(rho, k),
                                                      abs=1e-10)


def test_mwy_anti_info_pauli(mixed_qubit):
    # {I/sqrt(2), sx} = sqrt(2) sx, half its squared norm is 2
    assert mwy_anti_info(mixed_qubit, SX) == pytest.approx(2.0)


def test_mwy_anti_info_zero(mixed_qubit):
    assert mwy_anti_info(mixed_qubit, np.zeros((2, 2))) == 0.0


def test_skew_plus_anti_trace_identity():
    # I(K) + J(K) = Tr(rho K^dag K) + Tr(rho K K^dag) for any K
    rng = np.random.default_rng(23)
    for _ in range(50):
        rho = make_density(oracles.rand_rho(rng, 3))
        k = oracles.rand_op(rng, 3)
        total = mwy_skew_info(rho, k) + mwy_anti_info(rho, k)
        expected = (np.trace(rho.matrix @ k.conj().T @ k)
                    + np.trace(rho.matrix @ k @ k.conj().T)).real
        assert total == pytest.approx(expected, rel=1e-12)


def test_skew_info_centering_invariance():
    rng = np.random.default_rng(24)
    rho = make_density(oracles.rand_rho(rng, 4))
    k = oracles.rand_op(rng, 4)
    k0 = center_operator(k, rho)
    assert mwy_skew_info(rho, k0) == pytest.approx(mwy_skew_info(rho, k), abs=1e-13)


def test_centered_pair_sums_to_twice_sym_variance():
    rng = np.random.default_rng(25)
    for _ in range(50):
        rho = make_density(oracles.rand_rho(rng, 3))
        k = oracles.rand_op(rng, 3)
        k0 = center_operator(k, rho)
        lhs = mwy_skew_info(rho, k0) + mwy_anti_info(rho, k0)
        rhs = 2.0 * sym_abs_variance(rho, k)
        assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


def test_skew_info_bounded_by_twice_sym_variance_when_centered():
    rng = np.random.default_rng(26)
    for _ in range(50):
        rho = make_density(oracles.rand_rho(rng, 3))
        k0 = center_operator(oracles.rand_op(rng, 3), rho)
        assert mwy_skew_info(rho, k0) <= 2 * sym_abs_variance(rho, k0) + 1e-9


def test_channel_measures_identity_channel():
    rho = make_density(oracles.werner_matrix(0.6))
    m = channel_measures(rho, make_channel([np.eye(4)]))
    assert m.v_sym == m.i_tilde == m.j_tilde == m.c_abs == m.u_abs == 0.0


def test_channel_measures_incoherent_state_kills_u():
    rho = make_density(oracles.werner_matrix(0.75))  # maximally mixed
    for p in np.linspace(0, 1, 7):
        m = channel_measures(rho, make_channel(oracles.e_kraus(float(p))))
        assert m.u_abs <= 1e-12
        m = channel_measures(rho, make_channel(oracles.f_kraus(float(p))))
        assert m.u_abs <= 1e-12


def test_channel_measures_match_oracle():
    rng = np.random.default_rng(27)
    for _ in range(30):
        dim = int(rng.integers(2, 5))
        rho_m = oracles.rand_rho(rng, dim)
        ops = oracles.rand_kraus(rng, dim, int(rng.integers(1, 4)))
        rho = make_density(rho_m)
        m = channel_measures(rho, make_channel(ops))
        v, it, jt, u = oracles.channel_measures(rho_m, ops)
        assert m.v_sym == pytest.approx(v, abs=1e-11)
        assert m.i_tilde == pytest.approx(it, abs=1e-11)
        assert m.j_tilde == pytest.approx(jt, abs=1e-11)
        assert m.u_abs == pytest.approx(u, abs=1e-11)


def test_channel_measures_internal_identities():
    rng = np.random.default_rng(28)
    for _ in range(100):
        dim = int(rng.integers(2, 5))
        rho = make_density(oracles.rand_rho(rng, dim))
        phi = make_channel(oracles.rand_kraus(rng, dim, int(rng.integers(1, 4))))
        m = channel_measures(rho, phi)
        guard = max(1.0, m.u_abs ** 2, m.i_tilde * m.j_tilde)
        assert abs(m.u_abs ** 2 - m.i_tilde * m.j_tilde) <= 1e-9 * guard
        assert abs(m.i_tilde + m.j_tilde - 2 * m.v_sym) <= 1e-9 * max(1.0, 2 * m.v_sym)
        assert 0.0 <= m.i_tilde <= 2 * m.v_sym + 1e-9


def test_operator_u_matches_skew_product():
    rng = np.random.default_rng(29)
    for _ in range(50):
        rho_m = oracles.rand_rho(rng, 3)
        k = oracles.rand_op(rng, 3)
        rho = make_density(rho_m)
        assert operator_u(rho, k) == pytest.approx(
            oracles.u_of_operator(rho_m, k), abs=1e-11)
