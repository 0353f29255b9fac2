"""Moment functions of a discrete measure with an exponential snapshot.

The measure is a finite set of distinct positive rational nodes x_k with
ring-valued weights W_k fixed by the involution (W_k^T = W_k).  The
time dependence e^{x_k t} is represented by a formal positive rational
snapshot value v_k carrying the differentiation rule d/dt v_k = x_k v_k,
which turns every time derivative into an exact rational computation.

The derived quantities are

    phi_i   = sum_k x_k^i W_k v_k,
    a_{ij}  = sum_{k != l} (x_k - x_l)/(x_k + x_l) x_k^i x_l^j
              W_k^T W_l v_k v_l,

with a_{ij} = -involute(a_{ji}).  Both derivative laws hold exactly:

    d/dt a_{ij} = a_{i+1,j} + a_{i,j+1}
                = phi_{i+1}^T phi_j - phi_i^T phi_{j+1},

because the diagonal k = l contributions of the two outer products
cancel.  ``MomentState.oracle`` exposes the entries to the
quasi-Pfaffian machinery, either as plain values or as first-order jets.

For rational-ring measures, ``VPoly`` represents quantities exactly as
polynomials in the formal exponentials, which supports derivatives of
any order (used by the bilinear lattice checks).
"""

from __future__ import annotations

from fractions import Fraction

from qpf.jets import Jet
from qpf.quasipfaffian import EntryOracle
from qpf.rings import Ring, involute, rand_positive_fraction


class DiscreteMeasure:
    def __init__(self, ring, nodes, weights):
        nodes = tuple(Fraction(x) for x in nodes)
        weights = tuple(weights)
        if len(nodes) != len(weights):
            raise ValueError("need one weight per node")
        if any(x <= 0 for x in nodes):
            raise ValueError("nodes must be positive")
        if len(set(nodes)) != len(nodes):
            raise ValueError("nodes must be distinct")
        for w in weights:
            if involute(w) != w:
                raise ValueError("weights must be fixed by the involution")
        self.ring = ring
        self.nodes = nodes
        self.weights = weights

    @property
    def size(self):
        return len(self.nodes)


class MomentState:
    """A measure together with a snapshot of the formal exponentials."""

    def __init__(self, measure, snapshot):
        snapshot = tuple(Fraction(v) for v in snapshot)
        if len(snapshot) != measure.size:
            raise ValueError("need one snapshot value per node")
        if any(v <= 0 for v in snapshot):
            raise ValueError("snapshot values must be positive")
        self.measure = measure
        self.snapshot = snapshot
        self._phi = {}
        self._entry = {}
        nodes = measure.nodes
        k = measure.size
        self._kernel = [[(nodes[a] - nodes[b]) / (nodes[a] + nodes[b])
                         * snapshot[a] * snapshot[b]
                         for b in range(k)] for a in range(k)]
        self._wpair = [[involute(measure.weights[a]) * measure.weights[b]
                        for b in range(k)] for a in range(k)]
        self._powers = [{} for _ in range(k)]

    @property
    def ring(self):
        return self.measure.ring

    def _power(self, k, i):
        got = self._powers[k].get(i)
        if got is None:
            got = self.measure.nodes[k] ** i
            self._powers[k][i] = got
        return got

    def phi(self, i):
        """Exact i-th moment at the snapshot."""
        got = self._phi.get(i)
        if got is None:
            got = self.ring.zero()
            for k in range(self.measure.size):
                got = got + self.measure.weights[k] * (self._power(k, i) * self.snapshot[k])
            self._phi[i] = got
        return got

    def entry(self, i, j):
        """Exact skew inner product of the monomials x^i and x^j."""
        got = self._entry.get((i, j))
        if got is None:
            got = self.ring.zero()
            k = self.measure.size
            for a in range(k):
                pa = self._power(a, i)
                for b in range(k):
                    if a == b:
                        continue
                    c = self._kernel[a][b] * pa * self._power(b, j)
                    if c:
                        got = got + self._wpair[a][b] * c
            self._entry[(i, j)] = got
        return got

    def phi_jet(self, i):
        return Jet(self.phi(i), self.phi(i + 1))

    def entry_jet(self, i, j):
        return Jet(self.entry(i, j), self.entry(i + 1, j) + self.entry(i, j + 1))

    def oracle(self, jets=False):
        """Entry oracle over this state, optionally jet-valued."""
        if jets:
            one = Jet(self.ring.one(), self.ring.zero())
            zero = Jet(self.ring.zero(), self.ring.zero())
            return EntryOracle(one, zero, self.entry_jet, phi=self.phi_jet)
        return EntryOracle(self.ring.one(), self.ring.zero(), self.entry, phi=self.phi)

    # ----- independent term-by-term differentiation oracles -----

    def phi_ddt_monomial(self, i):
        """d/dt phi_i by differentiating each summand's snapshot factor."""
        out = self.ring.zero()
        for k in range(self.measure.size):
            factor = self._power(k, i) * self.snapshot[k] * self.measure.nodes[k]
            out = out + self.measure.weights[k] * factor
        return out

    def entry_ddt_monomial(self, i, j):
        """d/dt a_{ij} by differentiating each summand's snapshot pair."""
        out = self.ring.zero()
        k = self.measure.size
        nodes = self.measure.nodes
        for a in range(k):
            for b in range(k):
                if a == b:
                    continue
                c = self._kernel[a][b] * (nodes[a] + nodes[b])
                c = c * self._power(a, i) * self._power(b, j)
                if c:
                    out = out + self._wpair[a][b] * c
        return out


def random_measure(ring, size, seed):
    """Seeded measure with small integer nodes and admissible weights."""
    import random as _random

    rng = _random.Random(f"measure:{ring.name}:{ring.block_dim}:{size}:{seed}")
    nodes = rng.sample(range(1, 4 * size + 2), size)
    weights = []
    for _ in range(size):
        w = ring.random_symmetric(rng)
        while involute(w) != w or _is_zero_weight(w):
            w = ring.random_symmetric(rng)
        weights.append(w)
    return DiscreteMeasure(ring, nodes, weights)


def _is_zero_weight(w):
    from qpf.rings import is_zero

    return is_zero(w)


def random_state(ring, size, seed):
    measure = random_measure(ring, size, seed)
    import random as _random

    rng = _random.Random(f"snapshot:{ring.name}:{size}:{seed}")
    snapshot = [rand_positive_fraction(rng) for _ in range(size)]
    return MomentState(measure, snapshot)


# ---------------------------------------------------------------------------
# exact commutative functions of t: polynomials in the formal exponentials

class VPoly:
    """Polynomial in the formal exponentials v_1..v_K over the rationals.

    Terms map exponent tuples to rational coefficients.  The derivative
    rule d/dt v_k = x_k v_k makes d/dt exact to every order, so bilinear
    differential identities can be asserted literally.
    """

    __slots__ = ("nodes", "terms")

    def __init__(self, nodes, terms):
        self.nodes = nodes
        self.terms = {e: c for e, c in terms.items() if c}

    @classmethod
    def zero(cls, nodes):
        return cls(nodes, {})

    @classmethod
    def const(cls, nodes, c):
        k = len(nodes)
        return cls(nodes, {(0,) * k: Fraction(c)})

    @classmethod
    def formal_exp(cls, nodes, k, power=1):
        e = [0] * len(nodes)
        e[k] = power
        return cls(nodes, {tuple(e): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return VPoly(self.nodes, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) - c
        return VPoly(self.nodes, out)

    def __neg__(self):
        return VPoly(self.nodes, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return VPoly(self.nodes, {e: c * f for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return VPoly(self.nodes, out)

    __rmul__ = __mul__

    def ddt(self):
        out = {}
        for e, c in self.terms.items():
            rate = sum((m * x for m, x in zip(e, self.nodes)), Fraction(0))
            if rate:
                out[e] = out.get(e, Fraction(0)) + c * rate
        return VPoly(self.nodes, out)

    def at(self, snapshot):
        """Evaluate at concrete snapshot values."""
        total = Fraction(0)
        for e, c in self.terms.items():
            val = c
            for m, v in zip(e, snapshot):
                if m:
                    val *= Fraction(v) ** m
            total += val
        return total

    def __eq__(self, other):
        return isinstance(other, VPoly) and self.terms == other.terms

    def __repr__(self):
        return f"VPoly({len(self.terms)} terms)"


def vpoly_phi(measure, i):
    """phi_i as an exact function of t (rational-ring measures only)."""
    if measure.ring.name != "rational":
        raise ValueError("VPoly realisation needs the rational ring")
    nodes = measure.nodes
    out = VPoly.zero(nodes)
    for k, (x, w) in enumerate(zip(nodes, measure.weights)):
        out = out + VPoly.formal_exp(nodes, k) * (w * x ** i)
    return out


def vpoly_entry(measure, i, j):
    """a_{ij} as an exact function of t (rational-ring measures only)."""
    if measure.ring.name != "rational":
        raise ValueError("VPoly realisation needs the rational ring")
    nodes = measure.nodes
    out = VPoly.zero(nodes)
    size = measure.size
    for a in range(size):
        for b in range(size):
            if a == b:
                continue
            coeff = ((nodes[a] - nodes[b]) / (nodes[a] + nodes[b])
                     * nodes[a] ** i * nodes[b] ** j
                     * measure.weights[a] * measure.weights[b])
            if coeff:
                term = VPoly.formal_exp(nodes, a) * VPoly.formal_exp(nodes, b)
                out = out + term * coeff
    return out
