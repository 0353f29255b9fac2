"""First-order time jets over a coefficient ring.

A jet (v, d) carries an exact value together with its exact time
derivative.  Arithmetic follows the product rule and
d(a^-1) = -a^-1 (da) a^-1, and the involution commutes with d/dt, so
any expression assembled from jets (sums, products, inverses, matrix
inverses, quasi-Pfaffians) automatically carries its exact derivative.
A jet is invertible exactly when its value part is.
"""

from __future__ import annotations

from fractions import Fraction

from qpf.poly import NCPolynomial
from qpf.rings import involute, is_zero, one_like, ring_inv, zero_like


class Jet:
    __slots__ = ("v", "d")

    def __init__(self, value, derivative):
        object.__setattr__(self, "v", value)
        object.__setattr__(self, "d", derivative)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def constant(cls, value):
        return cls(value, zero_like(value))

    def is_zero(self):
        return is_zero(self.v) and is_zero(self.d)

    def involute(self):
        return Jet(involute(self.v), involute(self.d))

    def inv(self):
        vinv = ring_inv(self.v)
        return Jet(vinv, -(vinv * self.d * vinv))

    def one_like(self):
        return Jet(one_like(self.v), zero_like(self.v))

    def zero_like(self):
        return Jet(zero_like(self.v), zero_like(self.v))

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.v + other.v, self.d + other.d)
        if isinstance(other, NCPolynomial):
            return NotImplemented
        return Jet(self.v + other, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Jet):
            return Jet(self.v - other.v, self.d - other.d)
        if isinstance(other, NCPolynomial):
            return NotImplemented
        return Jet(self.v - other, self.d)

    def __rsub__(self, other):
        return Jet(other - self.v, -self.d)

    def __neg__(self):
        return Jet(-self.v, -self.d)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return Jet(self.v * other.v, self.d * other.v + self.v * other.d)
        if isinstance(other, NCPolynomial):
            # defer to the polynomial so the jet distributes coefficientwise
            return NotImplemented
        # other non-jet operands are constants in t
        return Jet(self.v * other, self.d * other)

    def __rmul__(self, other):
        if isinstance(other, NCPolynomial):
            return NotImplemented
        return Jet(other * self.v, other * self.d)

    def __eq__(self, other):
        return isinstance(other, Jet) and self.v == other.v and self.d == other.d

    def __repr__(self):
        return f"Jet({self.v!r}, {self.d!r})"


def value_of(x):
    """Value part of a jet-valued object (identity on plain elements)."""
    if isinstance(x, Jet):
        return x.v
    from qpf.poly import NCPolynomial

    if isinstance(x, NCPolynomial):
        return NCPolynomial([value_of(c) for c in x.coeffs])
    return x


def ddt(x):
    """Exact time derivative of a jet-valued object.

    Works on jets and on polynomials with jet coefficients (the
    indeterminate is constant in t, so only coefficients move).
    """
    if isinstance(x, Jet):
        return x.d
    from qpf.poly import NCPolynomial

    if isinstance(x, NCPolynomial):
        return NCPolynomial([ddt(c) for c in x.coeffs])
    raise TypeError(f"ddt needs a jet-tracked object, got {type(x).__name__}")


def jet_fraction(value, derivative=0):
    return Jet(Fraction(value), Fraction(derivative))
