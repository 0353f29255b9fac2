import random
from fractions import Fraction

import pytest

from qpf.ncmatrix import SingularMinor
from qpf.pfaffian import pfaffian_labels
from qpf.quasipfaffian import (
    RHS,
    BodyFrame,
    EntryOracle,
    X,
    body,
    body_range,
    condensation_forms,
    mom,
    qpf_condense,
    qpf_direct,
    swap_residual,
    unit,
    zero_condition_values,
)
from qpf.rings import (
    QUATERNION,
    RATIONAL,
    Quaternion,
    block_ring,
    involute,
    is_zero,
    ring_inv,
)

ALL_RINGS = [RATIONAL, QUATERNION, block_ring(2)]


def random_table(ring, n_labels, rng, zero_diag=False):
    table = {}
    for i in range(n_labels):
        table[(i, i)] = ring.zero() if zero_diag else ring.random_skew(rng)
        for j in range(i + 1, n_labels):
            table[(i, j)] = ring.random(rng)
    return table


def random_oracle(ring, n_labels, rng, zero_diag=False, n_phi=0):
    phi = [ring.random(rng) for _ in range(n_phi)] or None
    return EntryOracle.from_table(ring, random_table(ring, n_labels, rng, zero_diag), phi=phi)


def test_empty_body_returns_entry():
    rng = random.Random(0)
    oracle = random_oracle(QUATERNION, 2, rng)
    assert qpf_direct(oracle, (), (body(0), body(1))) == oracle.entry(body(0), body(1))


def test_two_body_commutative_formula():
    # zero-diagonal commutative case:
    # value = a34 + a31 a12^-1 a24 - a32 a12^-1 a14
    rng = random.Random("twobody")
    for _ in range(30):
        oracle = random_oracle(RATIONAL, 4, rng, zero_diag=True)
        a = oracle.entry
        a12 = a(body(0), body(1))
        if a12 == 0:
            continue
        got = qpf_direct(oracle, body_range(2), (body(2), body(3)))
        expect = (a(body(2), body(3))
                  + a(body(2), body(0)) * ring_inv(a12) * a(body(1), body(3))
                  - a(body(2), body(1)) * ring_inv(a12) * a(body(0), body(3)))
        assert got == expect


@pytest.mark.parametrize("n2", [2, 4, 6])
def test_commutative_ratio_of_pfaffians(n2):
    rng = random.Random(f"ratio{n2}")
    done = 0
    while done < 20:
        oracle = random_oracle(RATIONAL, n2 + 2, rng, zero_diag=True)

        def entry(i, j):
            return oracle.entry(body(i), body(j))

        denom = pfaffian_labels(entry, range(n2))
        if denom == 0:
            continue
        got = qpf_direct(oracle, body_range(n2), (body(n2), body(n2 + 1)))
        assert got == pfaffian_labels(entry, range(n2 + 2)) / denom
        done += 1


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
@pytest.mark.parametrize("n2", [2, 4, 6, 8])
def test_condense_equals_direct(ring, n2):
    rng = random.Random(f"cond:{ring.name}:{n2}")
    done = 0
    while done < 6:
        oracle = random_oracle(ring, n2 + 2, rng)
        labels = body_range(n2)
        boxed = (body(n2), body(n2 + 1))
        try:
            direct = qpf_direct(oracle, labels, boxed)
            cond = qpf_condense(oracle, labels, boxed)
        except SingularMinor:
            continue
        assert cond == direct
        done += 1


def test_base_case_condensation_is_direct():
    rng = random.Random("base")
    oracle = random_oracle(QUATERNION, 4, rng)
    labels = body_range(2)
    for boxed in [(body(2), body(3)), (body(3), body(2)), (body(2), body(2))]:
        assert qpf_condense(oracle, labels, boxed) == qpf_direct(oracle, labels, boxed)


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_condensation_forms_agree(ring):
    rng = random.Random(f"forms:{ring.name}")
    done = 0
    while done < 8:
        oracle = random_oracle(ring, 6, rng)
        try:
            direct, three, expanded = condensation_forms(
                oracle, body_range(4), (body(4), body(5)))
        except SingularMinor:
            continue
        assert direct == three == expanded
        done += 1


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_swap_symmetry_body_labels(ring):
    rng = random.Random(f"swap:{ring.name}")
    done = 0
    while done < 10:
        oracle = random_oracle(ring, 6, rng)
        try:
            res = swap_residual(oracle, body_range(4), body(4), body(5))
            res_diag = swap_residual(oracle, body_range(4), body(4), body(4))
        except SingularMinor:
            continue
        assert is_zero(res)
        assert is_zero(res_diag)
        done += 1


def test_swap_symmetry_moment_labels():
    rng = random.Random("swap-mom")
    ring = block_ring(2)
    done = 0
    while done < 10:
        oracle = random_oracle(ring, 6, rng, n_phi=8)
        try:
            res = swap_residual(oracle, body_range(4), body(5), mom(0))
            res2 = swap_residual(oracle, body_range(4), mom(1), mom(0))
        except SingularMinor:
            continue
        assert is_zero(res)
        assert is_zero(res2)
        done += 1


def test_commutative_repeated_boxed_label_vanishes():
    rng = random.Random("diag-comm")
    done = 0
    while done < 10:
        oracle = random_oracle(RATIONAL, 4, rng, zero_diag=True)
        try:
            v = qpf_direct(oracle, body_range(2), (body(3), body(3)))
        except SingularMinor:
            continue
        assert v == 0
        done += 1


def test_quaternion_repeated_boxed_label_not_zero():
    # over the quaternions the repeated boxed label is skew under the
    # involution but generically nonzero
    rng = random.Random("diag-quat-1")
    oracle = random_oracle(QUATERNION, 4, rng, zero_diag=True)
    v = qpf_direct(oracle, body_range(2), (body(3), body(3)))
    assert not is_zero(v)
    assert is_zero(v + involute(v))


@pytest.mark.parametrize("ring", ALL_RINGS, ids=lambda r: r.name)
def test_zero_condition(ring):
    rng = random.Random(f"zero:{ring.name}")
    done = 0
    while done < 8:
        oracle = random_oracle(ring, 6, rng, n_phi=8)
        labels = body_range(4)
        try:
            for repeated in (body(0), body(3)):
                for other in (body(4), body(5), mom(0)):
                    a, b = zero_condition_values(oracle, labels, repeated, other)
                    assert is_zero(a) and is_zero(b)
        except SingularMinor:
            continue
        done += 1


def test_zero_condition_rhs_label():
    rng = random.Random("zero-rhs")
    ring = QUATERNION
    table = random_table(ring, 4, rng)
    rhs = [ring.random(rng) for _ in range(4)]
    oracle = EntryOracle.from_table(ring, table, rhs=rhs)
    a, b = zero_condition_values(oracle, body_range(2), body(1), RHS)
    assert is_zero(a) and is_zero(b)


def test_unit_column_values():
    rng = random.Random("unitcol")
    oracle = random_oracle(RATIONAL, 4, rng, zero_diag=True)
    frame = BodyFrame(oracle, body_range(2))
    # a unit column inside the body range picks out a column of A^-1
    v = frame.value(body(3), unit(1))
    a = oracle.entry
    a01 = a(body(0), body(1))
    # direct: 0 - (a_30, a_31) A^-1 e_1
    expect = -(a(body(3), body(0)) * ring_inv(a01) * Fraction(-1))
    # A = [[0, a01], [-a01, 0]], A^-1 = [[0, -1/a01], [1/a01, 0]]
    expect = -(a(body(3), body(0)) * (-ring_inv(a01)) * Fraction(0)
               + a(body(3), body(0)) * Fraction(0)) - (
        a(body(3), body(0)) * (-ring_inv(a01)))
    # simpler: compute the expected correction explicitly
    ainv = [[Fraction(0), -ring_inv(a01)], [ring_inv(a01), Fraction(0)]]
    row = [a(body(3), body(0)), a(body(3), body(1))]
    col = [Fraction(0), Fraction(1)]
    corr = sum(row[k] * ainv[k][l] * col[l] for k in range(2) for l in range(2))
    assert v == -corr


def test_polynomial_boxed_column():
    rng = random.Random("polycol")
    oracle = random_oracle(RATIONAL, 4, rng, zero_diag=True)
    p = qpf_direct(oracle, body_range(2), (body(2), X))
    # monic of degree 2 in the indeterminate
    assert p.degree == 2
    assert p.coeffs[2] == Fraction(1)
