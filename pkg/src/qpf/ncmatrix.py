"""Matrices over a non-commutative coefficient ring.

Provides the involution-transpose, exact inversion, quasi-determinants
and the bordered Sylvester expansion.  Inversion uses three strategies:

* even-sized skew matrices are inverted by the recursive 2x2-block Schur
  scheme (the 2x2 base case expands about an off-diagonal entry);
* everything else falls back to Gaussian elimination with a
  first-invertible-pivot search, which is complete over division rings;
* matrices of blocks for which no invertible pivot exists are flattened
  to one big rational matrix and inverted there, which decides
  invertibility exactly.

Matrices of first-order jets are inverted by inverting the value part
and propagating the derivative through d(A^-1) = -A^-1 (dA) A^-1.

Public index arguments (``quasidet``) are 1-based to match the usual
row/column labelling conventions; internal storage is 0-based.
"""

from __future__ import annotations

from fractions import Fraction

from qpf.rings import (
    BlockMatrix,
    Singular,
    involute,
    is_zero,
    one_like,
    ring_inv,
    zero_like,
)


class SingularMinor(Singular):
    """A required minor, pivot or Schur complement is not invertible."""


class NCMatrix:
    """Rectangular matrix with entries in one coefficient ring."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(row) for row in data)
        if not data or not data[0]:
            raise ValueError("matrix must be non-empty")
        cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise ValueError("matrix must be rectangular")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("NCMatrix is immutable")

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    @classmethod
    def identity(cls, n, like):
        one = one_like(like)
        zero = zero_like(like)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return NCMatrix([[a + b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.data, other.data)])

    def __sub__(self, other):
        return NCMatrix([[a - b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.data, other.data)])

    def __neg__(self):
        return NCMatrix([[-a for a in r] for r in self.data])

    def __mul__(self, other):
        if not isinstance(other, NCMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        cols = tuple(zip(*other.data))
        out = []
        for row in self.data:
            out.append([_dot(row, col) for col in cols])
        return NCMatrix(out)

    def __eq__(self, other):
        return isinstance(other, NCMatrix) and self.data == other.data

    def __repr__(self):
        return f"NCMatrix({[list(r) for r in self.data]})"

    def inv_transpose(self):
        """Entrywise involution composed with the transpose."""
        return NCMatrix([[involute(self.data[j][i]) for j in range(self.rows)]
                         for i in range(self.cols)])

    def is_skew(self):
        """True when inv_transpose(A) == -A."""
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.rows):
                if involute(self.data[j][i]) != -self.data[i][j]:
                    return False
        return True

    def submatrix(self, row_idx, col_idx):
        return NCMatrix([[self.data[i][j] for j in col_idx] for i in row_idx])


def _dot(row, col):
    """Ordered product-sum: sum_k row[k] * col[k]."""
    it = zip(row, col)
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def _row_times_matrix(row, mat):
    return [_dot(row, col) for col in zip(*mat.data)]


def _matrix_times_col(mat, col):
    return [_dot(r, col) for r in mat.data]


# ---------------------------------------------------------------------------
# inversion

def invert_2x2(m):
    """Inverse of a 2x2 ring matrix via the quasi-determinant about (1,2).

    Needs a21 and the quasi-determinant q = a12 - a11 a21^-1 a22 to be
    invertible; raises SingularMinor otherwise.
    """
    (a11, a12), (a21, a22) = m.data
    c_inv = ring_inv(a21)
    q = a12 - a11 * c_inv * a22
    q_inv = ring_inv(q)
    one = one_like(a11)
    return NCMatrix([
        [-c_inv * a22 * q_inv, c_inv * (one + a22 * q_inv * a11 * c_inv)],
        [q_inv, -q_inv * a11 * c_inv],
    ])


def invert_gauss(m):
    """Gauss-Jordan over the ring with first-invertible-pivot search.

    Complete over division rings.  Over the block ring an invertible
    matrix may still lack an invertible pivot in some column; callers
    that can flatten should catch SingularMinor and do so.
    """
    n = m.rows
    if n != m.cols:
        raise ValueError("only square matrices can be inverted")
    a = [list(r) for r in m.data]
    y = [list(r) for r in NCMatrix.identity(n, m.data[0][0]).data]
    for col in range(n):
        piv_inv = None
        for r in range(col, n):
            if is_zero(a[r][col]):
                continue
            try:
                piv_inv = ring_inv(a[r][col])
            except Singular:
                continue
            piv_row = r
            break
        if piv_inv is None:
            raise SingularMinor(f"no invertible pivot in column {col}")
        if piv_row != col:
            a[col], a[piv_row] = a[piv_row], a[col]
            y[col], y[piv_row] = y[piv_row], y[col]
        a[col] = [piv_inv * v for v in a[col]]
        y[col] = [piv_inv * v for v in y[col]]
        for r in range(n):
            if r != col and not is_zero(a[r][col]):
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                y[r] = [v - f * w for v, w in zip(y[r], y[col])]
    return NCMatrix(y)


def _invert_block_by_flattening(m):
    """Invert a matrix of BlockMatrix entries through its scalar form."""
    n = m.rows
    d = m.data[0][0].dim
    big = [[Fraction(0)] * (n * d) for _ in range(n * d)]
    for i in range(n):
        for j in range(n):
            blk = m.data[i][j].rows
            for r in range(d):
                for c in range(d):
                    big[i * d + r][j * d + c] = blk[r][c]
    try:
        inv = BlockMatrix(big).inv()
    except Singular as exc:
        raise SingularMinor("flattened block matrix is singular") from exc
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(BlockMatrix([[inv.rows[i * d + r][j * d + c]
                                     for c in range(d)] for r in range(d)]))
        out.append(row)
    return NCMatrix(out)


def _invert_skew_recursive(m):
    """Schur recursion for an even-sized skew matrix.

    Splits A = [[A11, B], [-B^T, A22]] with A11 of size 2, inverts A22
    recursively, and finishes with the 2x2 base case on the complement
    S = A11 + B A22^-1 B^T.
    """
    n = m.rows
    if n == 2:
        return invert_2x2(m)
    idx_top = range(2)
    idx_bot = range(2, n)
    a11 = m.submatrix(idx_top, idx_top)
    b = m.submatrix(idx_top, idx_bot)
    a22 = m.submatrix(idx_bot, idx_bot)
    a22_inv = _invert_skew_recursive(a22)
    bt = b.inv_transpose()
    s = a11 + b * a22_inv * bt
    s_inv = invert_2x2(s)
    top_right = -(s_inv * b * a22_inv)
    bottom_left = a22_inv * bt * s_inv
    bottom_right = a22_inv - a22_inv * bt * s_inv * b * a22_inv
    out = []
    for i in range(2):
        out.append(list(s_inv.data[i]) + list(top_right.data[i]))
    for i in range(n - 2):
        out.append(list(bottom_left.data[i]) + list(bottom_right.data[i]))
    return NCMatrix(out)


def block_invert(m):
    """Exact two-sided inverse of a square ring matrix.

    Even skew matrices go through the recursive Schur scheme first; on
    breakdown (or for general matrices) Gaussian elimination is used,
    and matrices of blocks fall back to scalar flattening, which decides
    invertibility exactly.  Raises SingularMinor for singular input.
    """
    from qpf.jets import Jet  # local import to avoid a cycle

    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    sample = m.data[0][0]
    if isinstance(sample, Jet):
        vals = NCMatrix([[e.v for e in row] for row in m.data])
        ders = NCMatrix([[e.d for e in row] for row in m.data])
        vinv = block_invert(vals)
        dpart = -(vinv * ders * vinv)
        return NCMatrix([[Jet(vinv.data[i][j], dpart.data[i][j])
                          for j in range(m.cols)] for i in range(m.rows)])
    if m.rows % 2 == 0 and m.is_skew():
        try:
            return _invert_skew_recursive(m)
        except Singular:
            pass
    try:
        return invert_gauss(m)
    except SingularMinor:
        if isinstance(sample, BlockMatrix):
            return _invert_block_by_flattening(m)
        raise


# ---------------------------------------------------------------------------
# quasi-determinants

def quasidet(m, i, j):
    """Quasi-determinant of a square matrix at position (i, j), 1-based.

    For an n x n matrix this is a_ij - r (A^{ij})^-1 c, where A^{ij} is
    the minor with row i and column j removed, r is row i without a_ij
    and c is column j without a_ij.  For n = 1 it is the entry itself.
    """
    n = m.rows
    if n != m.cols:
        raise ValueError("quasidet needs a square matrix")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("quasidet position out of range")
    i -= 1
    j -= 1
    a_ij = m.data[i][j]
    if n == 1:
        return a_ij
    rows = [r for r in range(n) if r != i]
    cols = [c for c in range(n) if c != j]
    minor = m.submatrix(rows, cols)
    minor_inv = block_invert(minor)
    row = [m.data[i][c] for c in cols]
    col = [m.data[r][j] for r in rows]
    return a_ij - _dot(_row_times_matrix(row, minor_inv), col)


def assemble_bordered(core, cols, rows, corner):
    """Stack core | border columns over border rows | corner block."""
    k = core.rows
    b = len(rows)
    out = []
    for i in range(k):
        out.append(list(core.data[i]) + [cols[t][i] for t in range(b)])
    for t in range(b):
        out.append(list(rows[t]) + list(corner[t]))
    return NCMatrix(out)


def sylvester_expand(core, rows, cols, corner):
    """Both sides of the triple-bordered Sylvester expansion.

    ``core`` is an invertible k x k matrix, ``rows``/``cols`` are three
    border rows/columns of length k and ``corner`` is the 3x3 block of
    scalar entries.  The left side is the quasi-determinant of the full
    (k+3) x (k+3) matrix at its bottom-right corner; the right side is
    the 3x3 quasi-determinant whose (i, j) entry is the singly-bordered
    quasi-determinant built from row i, column j and corner entry (i, j).
    Callers assert lhs == rhs.
    """
    big = assemble_bordered(core, cols, rows, corner)
    lhs = quasidet(big, big.rows, big.cols)
    inner = []
    for i in range(3):
        inner_row = []
        for j in range(3):
            small = assemble_bordered(core, [cols[j]], [rows[i]], [[corner[i][j]]])
            inner_row.append(quasidet(small, small.rows, small.cols))
        inner.append(inner_row)
    rhs = quasidet(NCMatrix(inner), 3, 3)
    return lhs, rhs
