from fractions import Fraction

import pytest

from qpf.btoda import (
    LatticeState,
    bilinear_residuals,
    build_state,
    compatibility_residuals,
    hat_residuals,
    r_derivative_residual,
    reduction_residuals,
    step_residuals,
    tau_function,
    tilde_residuals,
    verify_level,
)
from qpf.moments import DiscreteMeasure, MomentState, random_state
from qpf.ncmatrix import NCMatrix
from qpf.rings import RATIONAL, block_ring, is_zero

BLOCK2 = block_ring(2)


def test_state_builds_block_ring():
    s = random_state(BLOCK2, 4, "b1")
    st = build_state(s, 1)
    assert not is_zero(st.sigma.v)
    assert not is_zero(st.u.v)


def test_corner_inverse_is_two_sided():
    s = random_state(BLOCK2, 4, "corner")
    st = build_state(s, 1)
    ident = NCMatrix.identity(2, st.one)
    assert st.corner * st.corner_inv == ident
    assert st.corner_inv * st.corner == ident


@pytest.mark.parametrize("n", [1, 2])
def test_all_lattice_residuals_block_ring(n):
    for seed in range(3):
        s = random_state(BLOCK2, 2 * n + 2, seed)
        for res in verify_level(s, n):
            assert is_zero(res)


def test_step_residuals_commutative():
    s = random_state(RATIONAL, 4, "stepc")
    lo, hi = LatticeState(s, 1), LatticeState(s, 2)
    for res in step_residuals(lo, hi):
        assert is_zero(res)


def test_tilde_residuals_commutative_trivial_gauge():
    # over the rationals the gauge k vanishes and the tilde law becomes
    # tsigma = sigma' - sigma u
    s = random_state(RATIONAL, 4, "tildec")
    st = LatticeState(s, 1)
    assert is_zero(st.k.v)
    assert st.tsigma.v == st.sigma.d - st.sigma.v * st.u.v
    for res in tilde_residuals(st) + hat_residuals(st):
        assert is_zero(res)
    assert is_zero(r_derivative_residual(st))
    for res in compatibility_residuals(st):
        assert is_zero(res)


def test_level_zero_state():
    s = random_state(BLOCK2, 4, "lvl0")
    lo, hi = LatticeState(s, 0), LatticeState(s, 1)
    for res in step_residuals(lo, hi):
        assert is_zero(res)


# ----- commutative bilinear system -----

@pytest.mark.parametrize("n", [1, 2])
def test_bilinear_residuals(n):
    for seed in range(3):
        s = random_state(RATIONAL, 2 * n + 2, seed)
        for res in bilinear_residuals(s.measure, n):
            assert res.is_zero()


def test_bilinear_single_node_trivial():
    m = DiscreteMeasure(RATIONAL, [2], [Fraction(3)])
    for res in bilinear_residuals(m, 0):
        assert res.is_zero()


def test_bilinear_from_index_zero():
    s = random_state(RATIONAL, 4, "bz")
    for res in bilinear_residuals(s.measure, 0):
        assert res.is_zero()


@pytest.mark.parametrize("n", [1, 2])
def test_reduction_table(n):
    for seed in range(3):
        s = random_state(RATIONAL, 2 * n + 2, seed)
        for res in reduction_residuals(s, n):
            assert res == 0


def test_tau_parity_against_direct_pfaffian():
    from qpf.pfaffian import pfaffian_labels

    s = random_state(RATIONAL, 4, "tau")
    meas = s.measure
    tau2 = tau_function(meas, 2).at(s.snapshot)
    assert tau2 == s.entry(0, 1)
    tau1 = tau_function(meas, 1).at(s.snapshot)
    assert tau1 == s.phi(0)
    tau4 = tau_function(meas, 4).at(s.snapshot)
    assert tau4 == pfaffian_labels(lambda i, j: s.entry(i, j), range(4))
