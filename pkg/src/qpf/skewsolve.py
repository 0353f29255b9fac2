"""Skew-symmetric linear systems solved two independent ways.

A system A x = b with A skew under the involution (even size 2n) is
solved by direct inversion and by the bordered quasi-Pfaffian formula

    x_i = Pf(1..2n, [unit_i, rhs]),

where the unit-column row enters as entry(unit_i, j) = -delta_{ij} and
the right-hand-side column as entry(j, rhs) = b_j.  A third route goes
through the bordered quasi-determinant -|A b; e_i 0|.  All three agree
exactly on every invertible instance.

Commutatively the solution is a ratio of Pfaffians; with the label
ordering used here the empirically pinned form is

    x_j = (-1)^(j+1) Pf(0..j-1, j+1..2n-1, b) / Pf(0..2n-1)

(0-based j): deleting label j and appending b flips sign with the
parity of j.
"""

from __future__ import annotations

from fractions import Fraction

from qpf.ncmatrix import NCMatrix, SingularMinor, block_invert, quasidet
from qpf.pfaffian import pfaffian_labels
from qpf.quasipfaffian import RHS, EntryOracle, body, body_range, qpf_direct, unit
from qpf.rings import involute, is_zero, zero_like


class SkewSystem:
    """Even-sized skew coefficient matrix with a right-hand side."""

    def __init__(self, matrix, rhs):
        if not isinstance(matrix, NCMatrix):
            matrix = NCMatrix(matrix)
        if matrix.rows != matrix.cols or matrix.rows % 2:
            raise ValueError("need a square matrix of even size")
        if not matrix.is_skew():
            raise ValueError("matrix is not skew under the involution")
        rhs = list(rhs)
        if len(rhs) != matrix.rows:
            raise ValueError("right-hand side length mismatch")
        self.matrix = matrix
        self.rhs = rhs

    @property
    def size(self):
        return self.matrix.rows


def solve_direct(system):
    """x = A^-1 b by exact matrix inversion."""
    inv = block_invert(system.matrix)
    n = system.size
    return [sum((inv.data[i][k] * system.rhs[k] for k in range(1, n)),
                inv.data[i][0] * system.rhs[0]) for i in range(n)]


def solve_qpf(system):
    """x_i as the bordered quasi-Pfaffian with a unit row and rhs column."""
    n = system.size
    oracle = EntryOracle(
        one=_one_of(system),
        zero=_zero_of(system),
        body_entry=lambda i, j: system.matrix.data[i][j],
        rhs=lambda i: system.rhs[i],
    )
    labels = body_range(n)
    return [qpf_direct(oracle, labels, (unit(i), RHS)) for i in range(n)]


def solve_quasidet(system):
    """x_i = -|A b; e_i 0| via the bordered quasi-determinant."""
    n = system.size
    zero = _zero_of(system)
    one = _one_of(system)
    out = []
    for i in range(n):
        bordered = []
        for r in range(n):
            bordered.append(list(system.matrix.data[r]) + [system.rhs[r]])
        bordered.append([one if c == i else zero for c in range(n)] + [zero])
        out.append(-quasidet(NCMatrix(bordered), n + 1, n + 1))
    return out


def _one_of(system):
    from qpf.rings import one_like

    return one_like(system.matrix.data[0][0])


def _zero_of(system):
    return zero_like(system.matrix.data[0][0])


def residual(system, x):
    """A x - b, entrywise."""
    n = system.size
    out = []
    for i in range(n):
        acc = system.matrix.data[i][0] * x[0]
        for k in range(1, n):
            acc = acc + system.matrix.data[i][k] * x[k]
        out.append(acc - system.rhs[i])
    return out


def jacobi_ratio(system):
    """Commutative Pfaffian form of the solution (rational entries only).

    Returns the list (-1)^(j+1) Pf(labels minus j, b)/Pf(labels), which
    equals the solution exactly.
    """
    n = system.size
    a = system.matrix.data
    b = system.rhs
    if not all(isinstance(v, Fraction) for row in a for v in row):
        raise ValueError("the Pfaffian ratio form is a commutative check")

    def entry(p, q):
        if p == "b":
            return -b[q]
        if q == "b":
            return b[p]
        return a[p][q]

    pf_all = pfaffian_labels(entry, range(n))
    if pf_all == 0:
        raise SingularMinor("coefficient Pfaffian vanishes")
    out = []
    for j in range(n):
        labels = [k for k in range(n) if k != j] + ["b"]
        sign = -1 if j % 2 == 0 else 1
        out.append(sign * pfaffian_labels(entry, labels) / pf_all)
    return out
