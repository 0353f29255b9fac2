"""Classical commutative Pfaffians and the identities they satisfy.

This module is the ground-truth oracle for every commutative-reduction
check in the package.  ``pfaffian`` expands the signed sum over perfect
matchings; ``pfaffian_condense`` evaluates the same number through the
three-term bilinear identity used recursively, falling back to the
expansion whenever an interior divisor vanishes.

Entries may live in any commutative ring that supports +, -, * (exact
rationals, or polynomial rings such as the exponential-monomial ring
used for tau functions); condensation additionally needs division and
is therefore restricted to rationals.
"""

from __future__ import annotations

from fractions import Fraction

MAX_EXPANSION_SIZE = 12


class TooLarge(ValueError):
    """Full matching-sum expansion requested beyond the size guard."""


def _pf_recursive(entry, labels, memo, one):
    n = len(labels)
    if n == 0:
        return one
    if n % 2:
        raise ValueError("Pfaffian needs an even number of labels")
    key = labels
    got = memo.get(key)
    if got is not None:
        return got
    if n == 2:
        res = entry(labels[0], labels[1])
    else:
        # expand along the first label: pairing it with labels[t] carries
        # sign (-1)^(t-1)
        first = labels[0]
        res = None
        for t in range(1, n):
            rest = labels[1:t] + labels[t + 1:]
            term = entry(first, labels[t]) * _pf_recursive(entry, rest, memo, one)
            if res is None:
                res = term if t % 2 == 1 else -term
            else:
                res = res + term if t % 2 == 1 else res - term
    memo[key] = res
    return res


def pfaffian_labels(entry, labels, one=Fraction(1)):
    """Pfaffian of an ordered label list with entries from ``entry(i, j)``.

    ``entry`` must be antisymmetric in its label arguments; only pairs in
    the order they are requested are evaluated.  Pf of the empty list is
    ``one``.
    """
    labels = tuple(labels)
    if len(labels) > MAX_EXPANSION_SIZE:
        raise TooLarge(f"{len(labels)} labels exceed the expansion guard")
    return _pf_recursive(entry, labels, {}, one)


def pfaffian(matrix, one=Fraction(1)):
    """Pfaffian of a skew matrix given as a nested sequence (even size)."""
    n = len(matrix)
    return pfaffian_labels(lambda i, j: matrix[i][j], range(n), one)


def pfaffian_condense(matrix):
    """Pfaffian of a rational skew matrix by recursive condensation.

    Strips the first two and last two labels through the three-term
    bilinear identity; when the interior Pfaffian in the denominator
    vanishes, that subproblem is evaluated by direct expansion instead.
    """
    n = len(matrix)
    if n % 2:
        raise ValueError("Pfaffian needs an even size")
    memo = {}

    def entry(i, j):
        return matrix[i][j]

    def cond(labels):
        k = len(labels)
        if k == 0:
            return Fraction(1)
        if k == 2:
            return entry(labels[0], labels[1])
        got = memo.get(labels)
        if got is not None:
            return got
        core = labels[2:-2]
        a1, a2 = labels[0], labels[1]
        a3, a4 = labels[-2], labels[-1]
        denom = cond(core)
        if denom == 0:
            res = _pf_recursive(entry, labels, {}, Fraction(1))
        else:
            res = (cond(core + (a1, a2)) * cond(core + (a3, a4))
                   - cond(core + (a1, a3)) * cond(core + (a2, a4))
                   + cond(core + (a1, a4)) * cond(core + (a2, a3))) / denom
        memo[labels] = res
        return res

    return cond(tuple(range(n)))


def det_bareiss(matrix):
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
            a[i][k] = Fraction(0)
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# bilinear identities

def tanner_residual(entry, core, quad, one=Fraction(1)):
    """Residual of the three-term bilinear identity.

    ``core`` is an even tuple of labels, ``quad`` four extra labels
    (a1, a2, a3, a4).  Returns lhs - rhs, which must vanish.
    """
    core = tuple(core)
    a1, a2, a3, a4 = quad

    def pf(labels):
        return pfaffian_labels(entry, labels, one)

    lhs = pf(core + (a1, a2, a3, a4)) * pf(core)
    rhs = (pf(core + (a1, a2)) * pf(core + (a3, a4))
           - pf(core + (a1, a3)) * pf(core + (a2, a4))
           + pf(core + (a1, a4)) * pf(core + (a2, a3)))
    return lhs - rhs


def perk_residual(entry, b_labels, c_labels, one=Fraction(1)):
    """Residual of the general compound bilinear identity.

    ``b_labels`` and ``c_labels`` have odd lengths M+1 and N+1 with M, N
    even.  Returns the difference of the two alternating sums, which
    must vanish.
    """
    b = tuple(b_labels)
    c = tuple(c_labels)
    if len(b) % 2 == 0 or len(c) % 2 == 0:
        raise ValueError("label groups must have odd lengths M+1, N+1 with M, N even")

    def pf(labels):
        return pfaffian_labels(entry, labels, one)

    left = None
    for j in range(len(b)):
        term = pf(b[:j] + b[j + 1:]) * pf((b[j],) + c)
        term = term if j % 2 == 0 else -term
        left = term if left is None else left + term
    right = None
    for k in range(len(c)):
        term = pf(b + (c[k],)) * pf(c[:k] + c[k + 1:])
        term = term if k % 2 == 0 else -term
        right = term if right is None else right + term
    return left - right


def cayley_pair(body, x_row, y_col, corner):
    """Bordered determinant vs Pfaffian product, both parities.

    ``body`` is an (n-1) x (n-1) rational skew matrix indexed by labels
    2..n, ``x_row``/``y_col`` are the border values a_x2..a_xn and
    a_2y..a_ny, ``corner`` the (x, y) entry (used for even n only).
    Returns (det_side, pfaffian_side); equality is the classical
    determinant-to-Pfaffian factorisation.
    """
    k = len(x_row)
    n = k + 1
    even = n % 2 == 0

    big = [[corner if even else Fraction(0)] + [Fraction(v) for v in x_row]]
    for i in range(k):
        big.append([Fraction(y_col[i])] + [Fraction(v) for v in body[i]])
    det_side = det_bareiss(big)

    X, Y = "x", "y"

    def entry(p, q):
        if p == X and q == Y:
            return Fraction(0)
        if p == Y and q == X:
            return Fraction(0)
        if p == X:
            return Fraction(x_row[q])
        if q == X:
            return -Fraction(x_row[p])
        if p == Y:
            return -Fraction(y_col[q])
        if q == Y:
            return Fraction(y_col[p])
        return Fraction(body[p][q])

    body_labels = tuple(range(k))
    if even:
        pf_side = (pfaffian_labels(entry, (X,) + body_labels)
                   * pfaffian_labels(entry, (Y,) + body_labels))
    else:
        pf_side = (pfaffian_labels(entry, (X, Y) + body_labels)
                   * pfaffian_labels(entry, body_labels))
    return det_side, pf_side
