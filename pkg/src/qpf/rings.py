"""Exact coefficient rings equipped with an anti-involution.

Three rings are used throughout the package:

* rationals -- plain ``fractions.Fraction``, involution is the identity;
* quaternions over the rationals, involution is conjugation;
* square rational matrices ("blocks"), involution is the transpose.

Elements are immutable and all arithmetic is exact, so algebraic
identities are asserted as literal equality, never up to a tolerance.
The free functions ``involute``, ``ring_inv``, ``is_zero``, ``one_like``
and ``zero_like`` dispatch on the element type; quaternions and blocks
implement the same protocol as methods.  Rationals and quaternions are
division rings; blocks are not, and report ``Singular`` when an inverse
does not exist.
"""

from __future__ import annotations

from fractions import Fraction


class RingError(ArithmeticError):
    """Base class for ring arithmetic failures."""


class TagMismatch(RingError):
    """Operands belong to different rings."""


class DimMismatch(RingError):
    """Block operands have different dimensions."""


class Singular(RingError):
    """An inverse was requested for a non-invertible element or matrix."""


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TagMismatch(f"cannot interpret {x!r} as a rational")


class Quaternion:
    """Rational quaternion w + x*i + y*j + z*k."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", _as_fraction(w))
        object.__setattr__(self, "x", _as_fraction(x))
        object.__setattr__(self, "y", _as_fraction(y))
        object.__setattr__(self, "z", _as_fraction(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls(1)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def is_zero(self):
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0

    def involute(self):
        """Conjugation: the anti-involution of the quaternion ring."""
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def inv(self):
        n2 = self.norm2()
        if n2 == 0:
            raise Singular("zero quaternion has no inverse")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.components()
            a2, b2, c2, d2 = other.components()
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return Quaternion(self.w * f, self.x * f, self.y * f, self.z * f)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            # central scalars commute with everything
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, Quaternion)
                and self.components() == other.components())

    def __hash__(self):
        return hash(("Q",) + self.components())

    def __repr__(self):
        return f"Quaternion({self.w}, {self.x}, {self.y}, {self.z})"


class BlockMatrix:
    """Square matrix of rationals acting as a single ring element.

    The anti-involution is the transpose.  Inversion is partial: it fails
    exactly when the matrix is singular.
    """

    __slots__ = ("dim", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(_as_fraction(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise DimMismatch("block must be square and non-empty")
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("BlockMatrix is immutable")

    @classmethod
    def zero(cls, dim):
        return cls([[0] * dim for _ in range(dim)])

    @classmethod
    def identity(cls, dim):
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    def is_zero(self):
        return all(x == 0 for r in self.rows for x in r)

    def involute(self):
        n = self.dim
        return BlockMatrix([[self.rows[j][i] for j in range(n)] for i in range(n)])

    def _check(self, other):
        if not isinstance(other, BlockMatrix):
            raise TagMismatch("expected a block operand")
        if other.dim != self.dim:
            raise DimMismatch(f"block dims differ: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        self._check(other)
        return BlockMatrix([[a + b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, BlockMatrix):
            return NotImplemented
        self._check(other)
        return BlockMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return BlockMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, BlockMatrix):
            self._check(other)
            n = self.dim
            cols = tuple(zip(*other.rows))
            return BlockMatrix([[sum(a * b for a, b in zip(row, col))
                                 for col in cols] for row in self.rows])
        if isinstance(other, (int, Fraction)):
            f = _as_fraction(other)
            return BlockMatrix([[a * f for a in r] for r in self.rows])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def inv(self):
        """Exact inverse by Gauss-Jordan elimination; raises Singular."""
        n = self.dim
        a = [list(r) for r in self.rows]
        y = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise Singular("block is singular")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                y[col], y[piv] = y[piv], y[col]
            p = a[col][col]
            a[col] = [v / p for v in a[col]]
            y[col] = [v / p for v in y[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    f = a[r][col]
                    a[r] = [v - f * w for v, w in zip(a[r], a[col])]
                    y[r] = [v - f * w for v, w in zip(y[r], y[col])]
        return BlockMatrix(y)

    def __eq__(self, other):
        return (isinstance(other, BlockMatrix) and self.dim == other.dim
                and self.rows == other.rows)

    def __hash__(self):
        return hash(("B", self.rows))

    def __repr__(self):
        return f"BlockMatrix({[list(r) for r in self.rows]})"


# ---------------------------------------------------------------------------
# protocol helpers dispatching over Fraction / Quaternion / BlockMatrix
# (and any other type implementing the same methods, e.g. time jets)

def involute(a):
    if isinstance(a, Fraction):
        return a
    return a.involute()


def ring_inv(a):
    if isinstance(a, Fraction):
        if a == 0:
            raise Singular("zero rational has no inverse")
        return _ONE / a
    return a.inv()


def is_zero(a):
    if isinstance(a, Fraction):
        return a == 0
    return a.is_zero()


def one_like(a):
    if isinstance(a, Fraction):
        return _ONE
    if isinstance(a, Quaternion):
        return Quaternion.one()
    if isinstance(a, BlockMatrix):
        return BlockMatrix.identity(a.dim)
    return a.one_like()


def zero_like(a):
    if isinstance(a, Fraction):
        return _ZERO
    if isinstance(a, Quaternion):
        return Quaternion.zero()
    if isinstance(a, BlockMatrix):
        return BlockMatrix.zero(a.dim)
    return a.zero_like()


def add(a, b):
    """Checked sum, mainly for external callers; operators do the work."""
    _check_tags(a, b)
    return a + b


def mul(a, b):
    """Checked product; multiplication is not assumed commutative."""
    _check_tags(a, b)
    return a * b


def _check_tags(a, b):
    if type(a) is not type(b):
        raise TagMismatch(f"mixed ring elements: {type(a).__name__} vs {type(b).__name__}")
    if isinstance(a, BlockMatrix) and a.dim != b.dim:
        raise DimMismatch(f"block dims differ: {a.dim} vs {b.dim}")


# ---------------------------------------------------------------------------
# ring descriptors and seeded random element generation

def rand_fraction(rng):
    """Random rational with numerator in [-9, 9], denominator in [1, 9]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_nonzero_fraction(rng):
    while True:
        f = rand_fraction(rng)
        if f != 0:
            return f


def rand_positive_fraction(rng):
    return Fraction(rng.randint(1, 9), rng.randint(1, 9))


class Ring:
    """Descriptor for one of the supported coefficient rings."""

    def __init__(self, name, block_dim=None):
        if name not in ("rational", "quaternion", "block"):
            raise ValueError(f"unknown ring {name!r}")
        if name == "block":
            if not block_dim or block_dim < 1:
                raise ValueError("block ring needs a positive block_dim")
        elif block_dim is not None:
            raise ValueError("block_dim only applies to the block ring")
        self.name = name
        self.block_dim = block_dim

    def zero(self):
        if self.name == "rational":
            return _ZERO
        if self.name == "quaternion":
            return Quaternion.zero()
        return BlockMatrix.zero(self.block_dim)

    def one(self):
        if self.name == "rational":
            return _ONE
        if self.name == "quaternion":
            return Quaternion.one()
        return BlockMatrix.identity(self.block_dim)

    def random(self, rng):
        if self.name == "rational":
            return rand_fraction(rng)
        if self.name == "quaternion":
            return Quaternion(*(rand_fraction(rng) for _ in range(4)))
        m = self.block_dim
        return BlockMatrix([[rand_fraction(rng) for _ in range(m)] for _ in range(m)])

    def random_nonzero(self, rng):
        while True:
            a = self.random(rng)
            if not is_zero(a):
                return a

    def random_symmetric(self, rng):
        """Random element fixed by the involution (a^T = a)."""
        if self.name == "rational":
            return rand_fraction(rng)
        if self.name == "quaternion":
            # symmetric quaternions are exactly the rational multiples of 1
            return Quaternion(rand_fraction(rng))
        m = self.block_dim
        rows = [[_ZERO] * m for _ in range(m)]
        for i in range(m):
            for j in range(i, m):
                v = rand_fraction(rng)
                rows[i][j] = v
                rows[j][i] = v
        return BlockMatrix(rows)

    def random_skew(self, rng):
        """Random element with a^T = -a (admissible skew diagonal entry)."""
        if self.name == "rational":
            return _ZERO
        if self.name == "quaternion":
            return Quaternion(0, rand_fraction(rng), rand_fraction(rng), rand_fraction(rng))
        m = self.block_dim
        rows = [[_ZERO] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                v = rand_fraction(rng)
                rows[i][j] = v
                rows[j][i] = -v
        return BlockMatrix(rows)

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.name == other.name
                and self.block_dim == other.block_dim)

    def __repr__(self):
        if self.name == "block":
            return f"Ring('block', {self.block_dim})"
        return f"Ring({self.name!r})"


RATIONAL = Ring("rational")
QUATERNION = Ring("quaternion")


def block_ring(dim):
    return Ring("block", dim)
