import itertools
import random
from fractions import Fraction

import pytest

from qpf.pfaffian import (
    TooLarge,
    cayley_pair,
    det_bareiss,
    perk_residual,
    pfaffian,
    pfaffian_condense,
    pfaffian_labels,
    tanner_residual,
)
from qpf.rings import rand_fraction


def random_skew(n, rng):
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rand_fraction(rng)
            m[i][j] = v
            m[j][i] = -v
    return m


def random_skew_table(labels, rng):
    table = {}
    for p, q in itertools.combinations(labels, 2):
        v = rand_fraction(rng)
        table[(p, q)] = v
        table[(q, p)] = -v
    for p in labels:
        table[(p, p)] = Fraction(0)
    return lambda i, j: table[(i, j)]


def test_pfaffian_2x2():
    assert pfaffian([[0, 1], [-1, 0]]) == 1


def test_pfaffian_4x4_hand_enumeration():
    # entries (a12,a13,a14,a23,a24,a34) = (1,2,3,4,5,6);
    # the three matchings give 1*6 - 2*5 + 3*4 = 8
    m = [[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]]
    m = [[Fraction(v) for v in r] for r in m]
    assert pfaffian(m) == 8


def test_pfaffian_empty():
    assert pfaffian([]) == 1


def test_pfaffian_size_guard():
    with pytest.raises(TooLarge):
        pfaffian([[Fraction(0)] * 14 for _ in range(14)])


@pytest.mark.parametrize("n", [2, 4, 6, 8, 10])
def test_pfaffian_squared_is_determinant(n):
    rng = random.Random(f"pfdet{n}")
    for _ in range(25):
        m = random_skew(n, rng)
        assert pfaffian(m) ** 2 == det_bareiss(m)


def test_odd_size_skew_determinant_vanishes():
    rng = random.Random("odddet")
    for n in (3, 5):
        for _ in range(10):
            m = random_skew(n, rng)
            assert det_bareiss(m) == 0


def test_condense_trivial_cases():
    assert pfaffian_condense([[Fraction(0), Fraction(7)], [Fraction(-7), Fraction(0)]]) == 7
    zero4 = [[Fraction(0)] * 4 for _ in range(4)]
    assert pfaffian_condense(zero4) == 0


@pytest.mark.parametrize("n", [6, 8])
def test_condense_equals_expansion(n):
    rng = random.Random(f"cond{n}")
    for _ in range(60):
        m = random_skew(n, rng)
        assert pfaffian_condense(m) == pfaffian(m)


def test_condense_with_singular_interior():
    # force the interior Pfaffian used as divisor to vanish
    rng = random.Random("condsing")
    for _ in range(20):
        m = random_skew(6, rng)
        m[2][3] = m[3][2] = Fraction(0)
        m[2][4] = m[4][2] = Fraction(0)
        m[2][5] = m[5][2] = Fraction(0)
        assert pfaffian_condense(m) == pfaffian(m)


@pytest.mark.parametrize("n_core", [0, 2, 4])
def test_tanner_identity(n_core):
    rng = random.Random(f"tanner{n_core}")
    labels = tuple(range(n_core + 4))
    for _ in range(40):
        entry = random_skew_table(labels, rng)
        core = labels[:n_core]
        quad = labels[n_core:]
        assert tanner_residual(entry, core, quad) == 0


@pytest.mark.parametrize("mn", [(2, 0), (2, 2), (4, 2)])
def test_perk_identity(mn):
    m_len, n_len = mn
    rng = random.Random(f"perk{mn}")
    labels = tuple(range(m_len + n_len + 2))
    for _ in range(30):
        entry = random_skew_table(labels, rng)
        b = labels[:m_len + 1]
        c = labels[m_len + 1:]
        assert perk_residual(entry, b, c) == 0


def test_cayley_even():
    rng = random.Random("cayley-even")
    # n = 2: body is 1x1 (zero), borders length 1
    for _ in range(20):
        x_row = [rand_fraction(rng)]
        y_col = [rand_fraction(rng)]
        corner = rand_fraction(rng)
        lhs, rhs = cayley_pair([[Fraction(0)]], x_row, y_col, corner)
        assert lhs == rhs
    # n = 4: body 3x3 skew
    for _ in range(20):
        body = random_skew(3, rng)
        x_row = [rand_fraction(rng) for _ in range(3)]
        y_col = [rand_fraction(rng) for _ in range(3)]
        corner = rand_fraction(rng)
        lhs, rhs = cayley_pair(body, x_row, y_col, corner)
        assert lhs == rhs


def test_cayley_odd():
    rng = random.Random("cayley-odd")
    for _ in (range(20)):
        body = random_skew(2, rng)
        x_row = [rand_fraction(rng) for _ in range(2)]
        y_col = [rand_fraction(rng) for _ in range(2)]
        lhs, rhs = cayley_pair(body, x_row, y_col, Fraction(0))
        assert lhs == rhs


def test_cayley_even_equal_borders_reduces_to_square():
    # x = y turns the determinant side into the square of one Pfaffian
    rng = random.Random("cayley-xy")
    for _ in range(20):
        body = random_skew(3, rng)
        x_row = [rand_fraction(rng) for _ in range(3)]
        y_col = [-v for v in x_row]  # a_iy = -a_xi so the border column mirrors the row
        big_entry_corner = Fraction(0)
        lhs, rhs = cayley_pair(body, x_row, y_col, big_entry_corner)
        assert lhs == rhs
        X = "x"

        def entry(p, q):
            if p == X:
                return x_row[q]
            if q == X:
                return -x_row[p]
            return body[p][q]

        pf_x = pfaffian_labels(entry, (X, 0, 1, 2))
        assert rhs == pf_x * pf_x


def test_pfaffian_sign_convention_against_permutation_sum():
    # independent oracle: signed sum over all pairings with explicit
    # permutation signs
    rng = random.Random("signsum")

    def perm_sign(perm):
        n = len(perm)
        seen = [False] * n
        sign = 1
        for i in range(n):
            if seen[i]:
                continue
            j = i
            length = 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def pf_bruteforce(m):
        n = len(m)
        idx = list(range(n))
        total = Fraction(0)
        for pairing in _pairings(idx):
            flat = [x for pair in pairing for x in pair]
            total += perm_sign([flat.index(k) for k in range(n)]) * _prod(
                m[i][j] for i, j in pairing)
        return total

    def _pairings(items):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for t, second in enumerate(rest):
            for tail in _pairings(rest[:t] + rest[t + 1:]):
                yield [(first, second)] + tail

    def _prod(vals):
        out = Fraction(1)
        for v in vals:
            out *= v
        return out

    for n in (2, 4, 6):
        for _ in range(5):
            m = random_skew(n, rng)
            assert pfaffian(m) == pf_bruteforce(m)
