"""Labelled quasi-Pfaffians with a boxed row/column pair.

A quasi-Pfaffian is the quasi-determinant of a bordered skew matrix:
the body is an even list of labels whose pairwise entries form a skew
matrix under the involution, and the boxed pair (p, q) appends one extra
row p and one extra column q.  Its value is

    entry(p, q) - row_p . A^-1 . col_q

where A is the body matrix.  Labels are opaque symbols resolved by an
EntryOracle rather than matrix positions, because the applications mix
plain body indices with unit columns, moment columns, a polynomial
indeterminate and a right-hand-side vector.

Entry conventions (``entry(p, q) = -involute(entry(q, p))`` throughout):

* body i, body j  -> the skew body table;
* body i, unit j  -> identity if i == j else zero ("delta columns");
* body i, mom j   -> involute(phi(i + j)) for the moment family phi;
* body i, X       -> the monomial x^i;
* body i, RHS     -> b_i for the right-hand-side vector b;
* every pair among {unit, mom, X, RHS} labels -> zero.
"""

from __future__ import annotations

from typing import NamedTuple

from qpf.ncmatrix import NCMatrix, SingularMinor, block_invert, quasidet
from qpf.poly import NCPolynomial
from qpf.rings import involute, is_zero


class Label(NamedTuple):
    kind: str
    index: int

    def __repr__(self):
        if self.kind == "body":
            return f"b{self.index}"
        if self.kind in ("x", "rhs"):
            return self.kind
        return f"{self.kind}{self.index}"


def body(i):
    return Label("body", i)


def unit(i):
    """Unit-column label: entry(body k, unit i) = delta_{k,i}."""
    return Label("unit", i)


def mom(j):
    """Moment-column label: entry(body i, mom j) = involute(phi_{i+j})."""
    return Label("mom", j)


X = Label("x", 0)
RHS = Label("rhs", 0)


def body_range(n):
    return tuple(body(k) for k in range(n))


class EntryOracle:
    """Resolves ordered label pairs to ring elements.

    ``body_entry(i, j)`` supplies the skew body table (callable over
    arbitrary integer labels), ``phi(m)`` the moment family backing the
    ``mom`` labels, and ``rhs(i)`` the vector backing the ``RHS`` label.
    ``one``/``zero`` fix the coefficient ring (possibly a jet ring).
    """

    def __init__(self, one, zero, body_entry, phi=None, rhs=None):
        self.one = one
        self.zero = zero
        self.body_entry = body_entry
        self.phi = phi
        self.rhs = rhs

    @classmethod
    def from_table(cls, ring, table, phi=None, rhs=None):
        """Oracle over an explicit skew table dict {(i, j): elem, i <= j}."""

        def body_entry(i, j):
            if i <= j:
                return table[(i, j)]
            return -involute(table[(j, i)])

        phi_fn = (lambda m: phi[m]) if phi is not None else None
        rhs_fn = (lambda i: rhs[i]) if rhs is not None else None
        return cls(ring.one(), ring.zero(), body_entry, phi_fn, rhs_fn)

    def entry(self, p, q):
        val = self._entry_oriented(p, q)
        if val is not None:
            return val
        val = self._entry_oriented(q, p)
        if val is None:
            raise KeyError(f"no entry rule for pair ({p!r}, {q!r})")
        return -involute(val)

    def _entry_oriented(self, p, q):
        """Entry for pairs stated in canonical orientation, else None."""
        pk, qk = p.kind, q.kind
        if pk == "body" and qk == "body":
            return self.body_entry(p.index, q.index)
        if pk == "body" and qk == "unit":
            return self.one if p.index == q.index else self.zero
        if pk == "body" and qk == "mom":
            if self.phi is None:
                raise KeyError("oracle has no moment family")
            return involute(self.phi(p.index + q.index))
        if pk == "body" and qk == "x":
            return NCPolynomial.monomial(self.one, p.index)
        if pk == "body" and qk == "rhs":
            if self.rhs is None:
                raise KeyError("oracle has no right-hand side")
            return self.rhs(p.index)
        if pk == qk and pk in ("unit", "mom"):
            return self.zero
        if pk in ("unit", "mom", "x", "rhs") and qk in ("unit", "mom", "x", "rhs"):
            return self.zero
        return None


class BodyFrame:
    """Quasi-Pfaffian evaluator over one fixed body, with caching.

    The body matrix is inverted once; row products and column vectors
    are cached per label, so each further value costs one short dot
    product.  Raises SingularMinor when the body is not invertible.
    """

    def __init__(self, oracle, body_labels):
        self.oracle = oracle
        self.body = tuple(body_labels)
        if len(self.body) % 2:
            raise ValueError("body must have even length")
        if self.body:
            a = NCMatrix([[oracle.entry(r, s) for s in self.body] for r in self.body])
            self.a_inv = block_invert(a)
        else:
            self.a_inv = None
        self._rows = {}
        self._cols = {}

    def _row_times_inv(self, p):
        got = self._rows.get(p)
        if got is None:
            row = [self.oracle.entry(p, s) for s in self.body]
            cols = zip(*self.a_inv.data)
            got = [self._dot(row, c) for c in cols]
            self._rows[p] = got
        return got

    def _col(self, q):
        got = self._cols.get(q)
        if got is None:
            got = [self.oracle.entry(r, q) for r in self.body]
            self._cols[q] = got
        return got

    @staticmethod
    def _dot(row, col):
        it = zip(row, col)
        a, b = next(it)
        acc = a * b
        for a, b in it:
            acc = acc + a * b
        return acc

    def value(self, p, q):
        """Quasi-Pfaffian with this body and boxed pair (p, q)."""
        head = self.oracle.entry(p, q)
        if not self.body:
            return head
        return head - self._dot(self._row_times_inv(p), self._col(q))


def qpf_direct(oracle, body_labels, boxed):
    """Quasi-Pfaffian by direct bordered evaluation."""
    frame = BodyFrame(oracle, body_labels)
    return frame.value(*boxed)


def qpf_condense(oracle, body_labels, boxed):
    """Quasi-Pfaffian by recursive condensation.

    Strips the trailing two body labels per step: the value over body
    (.., a, b) with boxed (c, d) is the 2x2-corrected combination of the
    nine values over the shorter body.  Exactly equal to ``qpf_direct``
    wherever both are defined; raises SingularMinor when an intermediate
    2x2 matrix cannot be inverted.
    """
    seq = tuple(body_labels)
    if len(seq) % 2:
        raise ValueError("body must have even length")
    memo = {}

    def val(level, p, q):
        key = (level, p, q)
        got = memo.get(key)
        if got is not None:
            return got
        if level == 0:
            res = oracle.entry(p, q)
        else:
            a, b = seq[2 * level - 2], seq[2 * level - 1]
            m = NCMatrix([[val(level - 1, a, a), val(level - 1, a, b)],
                          [val(level - 1, b, a), val(level - 1, b, b)]])
            m_inv = block_invert(m)
            row = [val(level - 1, p, a), val(level - 1, p, b)]
            col = [val(level - 1, a, q), val(level - 1, b, q)]
            corr = BodyFrame._dot([BodyFrame._dot(row, c) for c in zip(*m_inv.data)], col)
            res = val(level - 1, p, q) - corr
        memo[key] = res
        return res

    return val(len(seq) // 2, *boxed)


def condensation_forms(oracle, body_labels, boxed):
    """The last condensation step in its two equivalent shapes.

    Returns (direct, three_by_three, expanded): the plain value over the
    full body, the 3x3 quasi-determinant of lower-order values, and the
    explicitly expanded 2x2-correction form.  All three must agree.
    """
    seq = tuple(body_labels)
    if len(seq) < 2:
        raise ValueError("need at least one condensation step")
    core, (a, b) = seq[:-2], seq[-2:]
    c, d = boxed
    direct = qpf_direct(oracle, seq, boxed)
    frame = BodyFrame(oracle, core)
    v = frame.value
    k = NCMatrix([
        [v(a, a), v(a, b), v(a, d)],
        [v(b, a), v(b, b), v(b, d)],
        [v(c, a), v(c, b), v(c, d)],
    ])
    three = quasidet(k, 3, 3)
    m = NCMatrix([[v(a, a), v(a, b)], [v(b, a), v(b, b)]])
    m_inv = block_invert(m)
    row = [v(c, a), v(c, b)]
    col = [v(a, d), v(b, d)]
    corr = BodyFrame._dot([BodyFrame._dot(row, cc) for cc in zip(*m_inv.data)], col)
    expanded = v(c, d) - corr
    return direct, three, expanded


def swap_residual(oracle, body_labels, p, q):
    """Pf(.., [p, q]) + involute(Pf(.., [q, p])); zero by skew symmetry."""
    frame = BodyFrame(oracle, body_labels)
    return frame.value(p, q) + involute(frame.value(q, p))


def zero_condition_values(oracle, body_labels, p, q):
    """Both boxed orders for a row label p that repeats a body label.

    Each value must vanish exactly.
    """
    frame = BodyFrame(oracle, body_labels)
    return frame.value(p, q), frame.value(q, p)
