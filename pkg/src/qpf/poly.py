"""Polynomials in one central indeterminate with ring coefficients.

The indeterminate commutes with every coefficient, so a polynomial is
just its coefficient list (constant term first).  Coefficients may be
ring elements or first-order jets; mixed arithmetic with bare ring
elements treats them as constant polynomials.
"""

from __future__ import annotations

from qpf.rings import involute, is_zero


class NCPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("NCPolynomial is immutable")

    @classmethod
    def monomial(cls, coeff, degree):
        zero = coeff - coeff
        return cls([zero] * degree + [coeff])

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, k, zero):
        return self.coeffs[k] if k < len(self.coeffs) else zero

    def involute(self):
        return NCPolynomial([involute(c) for c in self.coeffs])

    def shift(self, k=1):
        """Multiply by the k-th power of the indeterminate."""
        if not self.coeffs:
            return self
        zero = self.coeffs[0] - self.coeffs[0]
        return NCPolynomial([zero] * k + list(self.coeffs))

    def __add__(self, other):
        if not isinstance(other, NCPolynomial):
            other = NCPolynomial([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return NCPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, NCPolynomial):
            other = NCPolynomial([other])
        return self + (-other)

    def __rsub__(self, other):
        return NCPolynomial([other]) + (-self)

    def __neg__(self):
        return NCPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            if not self.coeffs or not other.coeffs:
                return NCPolynomial([])
            n, m = len(self.coeffs), len(other.coeffs)
            zero = self.coeffs[0] * other.coeffs[0]
            zero = zero - zero
            out = [zero] * (n + m - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return NCPolynomial(out)
        # ring element acts coefficientwise from the left of each power
        return NCPolynomial([self._coerce_mul(other, c, right=True) for c in self.coeffs])

    def __rmul__(self, other):
        return NCPolynomial([self._coerce_mul(other, c, right=False) for c in self.coeffs])

    @staticmethod
    def _coerce_mul(elem, coeff, right):
        return coeff * elem if right else elem * coeff

    def __eq__(self, other):
        if not isinstance(other, NCPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        return f"NCPolynomial({list(self.coeffs)!r})"
