"""Partial-skew-orthogonal polynomials with ring coefficients.

The family is defined by its linear systems over the skew inner product
<x^i, x^j> = a_{ij} with left coefficients acting plainly and right
coefficients under the involution:

    <P_{2n},  x^i> = 0       for i = 0..2n-1  (P_{2n} monic),
    <P_{2n+1}, x^i> = -phi_i  for i = 0..2n+1.

With the package's oracle convention (moment rows enter negated), the
even polynomials are the bordered values Pf(0..2n-1,[2n, x]) while the
odd family and the auxiliary tilde family are the *negated* bordered
values -Pf(0..2n+1,[mom0, x]) and -Pf(0..2n-1,[mom1, x]); the sign is
forced by the defining systems.  The spectral companions

    Q_{2n+1} = Pf(0..2n-1,[2n+1, x]),  Qt_{2n-1} = Pf(0..2n-1,[unit, x])

are plain bordered values.  All verified identities below hold with
exact-zero coefficientwise residuals; coefficients are first-order jets
so time derivatives are exact.
"""

from __future__ import annotations

from qpf.btoda import LatticeState
from qpf.ncmatrix import SingularMinor
from qpf.poly import NCPolynomial
from qpf.quasipfaffian import X, body, mom, unit
from qpf.rings import involute, ring_inv


def poly_values(p):
    return NCPolynomial([c.v for c in p.coeffs])


def poly_derivs(p):
    return NCPolynomial([c.d for c in p.coeffs])


class PolyFamily:
    """Polynomials P_0..P_{2N+1} with companions, over one moment state."""

    def __init__(self, state, nmax):
        if state.measure.size < 2 * nmax + 2:
            raise ValueError("measure too small: need at least 2*nmax+2 nodes")
        self.state = state
        self.nmax = nmax
        self.levels = {l: LatticeState(state, l) for l in range(nmax + 2)}

    def frame(self, level):
        return self.levels[level].frame

    def P(self, m):
        """Family member of degree m (zero polynomial for negative m)."""
        if m < 0:
            return NCPolynomial([])
        if m % 2 == 0:
            level = m // 2
            return self.frame(level).value(body(m), X)
        level = (m + 1) // 2
        return -self.frame(level).value(mom(0), X)

    def P_tilde(self, m):
        """Auxiliary odd-family member built on the first moment column."""
        level = (m + 1) // 2
        return -self.frame(level).value(mom(1), X)

    def Q(self, m):
        """Companion of odd degree m over the one-lower body."""
        level = (m - 1) // 2
        return self.frame(level).value(body(m), X)

    def Q_tilde(self, m):
        """Unit-column companion of odd degree m-? over the body of m+1."""
        level = (m + 1) // 2
        return self.frame(level).value(unit(2 * level - 1), X)

    # ----- inner product -----

    def skew_inner_monomial(self, poly, i):
        """<poly, x^i> with value-level left coefficients."""
        out = self.state.ring.zero()
        for a, coeff in enumerate(poly.coeffs):
            out = out + coeff * self.state.entry(a, i)
        return out

    def skew_inner(self, f, g):
        """Bilinear extension: sum_{a,b} f_a a_{ab} involute(g_b)."""
        out = self.state.ring.zero()
        for a, fa in enumerate(f.coeffs):
            for b, gb in enumerate(g.coeffs):
                out = out + fa * self.state.entry(a, b) * involute(gb)
        return out


def verify_orthogonality(fam):
    """Defining-system residuals for every built member."""
    residuals = []
    one = fam.state.ring.one()
    for n in range(fam.nmax + 1):
        p_even = poly_values(fam.P(2 * n))
        assert p_even.degree == 2 * n and p_even.coeffs[-1] == one
        for i in range(2 * n):
            residuals.append(fam.skew_inner_monomial(p_even, i))
        p_odd = poly_values(fam.P(2 * n + 1))
        for i in range(2 * n + 2):
            residuals.append(fam.skew_inner_monomial(p_odd, i) + fam.state.phi(i))
    return residuals


def verify_skew_symmetry(fam, f, g):
    """<f, g> = -involute(<g, f>) for explicit polynomials."""
    return fam.skew_inner(f, g) + involute(fam.skew_inner(g, f))


def verify_derivative_formulas(fam):
    """Derivative laws tying the family to the lattice variables.

    For each level n >= 1:
      dP_{2n}   = tsigma P_{2n-1} - sigma Pt_{2n-1};
      dP_{2n-1} = u^T P_{2n-1} + (1 + k) Pt_{2n-1};
      dP_{2n} + alpha dP_{2n-1} = beta P_{2n-1}
        with alpha = sigma (1+k)^-1, beta = tsigma + sigma (1+k)^-1 u^T;
      dP_{2n+1} + gamma dP_{2n} = (u+^T + gamma sigma ta a^-1) P_{2n+1}
        - gamma sigma (tb - ta a^-1 b) P_{2n}
        + gamma (tsigma - sigma ta a^-1) P_{2n-1}
        with gamma = (1 + k_{n+1}) sigma^-1.
    """
    t = involute
    residuals = []
    for n in range(1, fam.nmax + 1):
        st = fam.levels[n]
        up = fam.levels[n + 1]
        one = st.one.v
        p_even = fam.P(2 * n)
        p_odd_lo = fam.P(2 * n - 1)
        p_tilde = fam.P_tilde(2 * n - 1)
        res1 = (poly_derivs(p_even)
                - st.tsigma.v * poly_values(p_odd_lo)
                + st.sigma.v * poly_values(p_tilde))
        residuals.append(res1)
        res2 = (poly_derivs(p_odd_lo)
                - t(st.u.v) * poly_values(p_odd_lo)
                - (one + st.k.v) * poly_values(p_tilde))
        residuals.append(res2)
        plus_inv = ring_inv(one + st.k.v)
        alpha = st.sigma.v * plus_inv
        beta = st.tsigma.v + st.sigma.v * plus_inv * t(st.u.v)
        res3 = (poly_derivs(p_even) + alpha * poly_derivs(p_odd_lo)
                - beta * poly_values(p_odd_lo))
        residuals.append(res3)
        # odd-anchored derivative relation
        p_odd_hi = fam.P(2 * n + 1)
        a = st.a_coeff().v
        b = st.b_coeff().v
        ta = st.ta_coeff().v
        tb = st.tb_coeff().v
        a_inv = ring_inv(a)
        gamma = (one + up.k.v) * ring_inv(st.sigma.v)
        s = st.sigma.v
        res4 = (poly_derivs(p_odd_hi) + gamma * poly_derivs(p_even)
                - (t(up.u.v) + gamma * s * ta * a_inv) * poly_values(p_odd_hi)
                + gamma * s * (tb - ta * a_inv * b) * poly_values(p_even)
                - gamma * (st.tsigma.v - s * ta * a_inv) * poly_values(p_odd_lo))
        residuals.append(res4)
    return residuals


def verify_spectral(fam):
    """Spectral relations between the family and its companions.

    For each level n >= 1:
      (d/dt + x) P_{2n}   = Q_{2n+1} + r P_{2n} - g Qt_{2n-1};
      (d/dt + x) P_{2n-1} = v^T P_{2n} - sigma^T Qt_{2n-1};
      Q_{2n+1}  = a^-1 (P_{2n-1} - P_{2n+1} - b P_{2n});
      Qt_{2n+1} = B P_{2n} + D Q_{2n+1};
      Pt_{2n+1} = Pt_{2n-1} - tb P_{2n} - ta Q_{2n+1}.
    """
    t = involute
    residuals = []
    for n in range(1, fam.nmax + 1):
        st = fam.levels[n]
        p_even = fam.P(2 * n)
        p_odd_lo = fam.P(2 * n - 1)
        q = fam.Q(2 * n + 1)
        qt_lo = fam.Q_tilde(2 * n - 1)
        res1 = (poly_derivs(p_even) + poly_values(p_even).shift(1)
                - poly_values(q) - st.r.v * poly_values(p_even)
                + st.g.v * poly_values(qt_lo))
        residuals.append(res1)
        res2 = (poly_derivs(p_odd_lo) + poly_values(p_odd_lo).shift(1)
                - t(st.v.v) * poly_values(p_even)
                + t(st.sigma.v) * poly_values(qt_lo))
        residuals.append(res2)
        a_inv = ring_inv(st.a_coeff().v)
        b = st.b_coeff().v
        res3 = (poly_values(q)
                - a_inv * (poly_values(fam.P(2 * n - 1))
                           - poly_values(fam.P(2 * n + 1))
                           - b * poly_values(p_even)))
        residuals.append(res3)
        qt_hi = fam.Q_tilde(2 * n + 1)
        res4 = (poly_values(qt_hi) - st.B.v * poly_values(p_even)
                - st.D.v * poly_values(q))
        residuals.append(res4)
        ta = st.ta_coeff().v
        tb = st.tb_coeff().v
        res5 = (poly_values(fam.P_tilde(2 * n + 1))
                - poly_values(fam.P_tilde(2 * n - 1))
                + tb * poly_values(p_even) + ta * poly_values(q))
        residuals.append(res5)
    return residuals


def verify_recurrences(fam):
    """Both six-term recurrences, assembled from the verified relations.

    Even anchor:
      x (P_{2n} + alpha P_{2n-1}) =
        -a^-1 P_{2n+1} + (r - a^-1 b + alpha v^T) P_{2n}
        + (a^-1 - beta + gs D- a-^-1) P_{2n-1}
        - gs (B- - D- a-^-1 b-) P_{2n-2} - gs D- a-^-1 P_{2n-3},
      gs = g + alpha sigma^T, minus-subscripts at level n-1.

    Odd anchor:
      x (P_{2n+1} + gamma P_{2n}) =
        v+^T P_{2n+2} - (khat + u+^T + gamma sigma ta a^-1) P_{2n+1}
        + (-sigma+^T B + gamma r + gamma sigma (tb - ta a^-1 b)
           - khat b) P_{2n}
        + (khat - gamma (tsigma - sigma ta a^-1) + gamma g D- a-^-1)
          P_{2n-1}
        - gamma g (B- - D- a-^-1 b-) P_{2n-2}
        - gamma g D- a-^-1 P_{2n-3},
      khat = (gamma - sigma+^T D) a^-1.
    """
    t = involute
    residuals = []
    for n in range(1, fam.nmax + 1):
        st = fam.levels[n]
        lo = fam.levels[n - 1]
        up = fam.levels[n + 1]
        one = st.one.v
        a, b = st.a_coeff().v, st.b_coeff().v
        ta, tb = st.ta_coeff().v, st.tb_coeff().v
        am, bm = lo.a_coeff().v, lo.b_coeff().v
        a_inv, am_inv = ring_inv(a), ring_inv(am)
        Bm, Dm = lo.B.v, lo.D.v
        p = {m: poly_values(fam.P(m)) for m in range(2 * n - 3, 2 * n + 3)}

        plus_inv = ring_inv(one + st.k.v)
        alpha = st.sigma.v * plus_inv
        beta = st.tsigma.v + st.sigma.v * plus_inv * t(st.u.v)
        gs = st.g.v + alpha * t(st.sigma.v)
        even_lhs = (p[2 * n] + alpha * p[2 * n - 1]).shift(1)
        even_rhs = (-a_inv * p[2 * n + 1]
                    + (st.r.v - a_inv * b + alpha * t(st.v.v)) * p[2 * n]
                    + (a_inv - beta + gs * Dm * am_inv) * p[2 * n - 1]
                    - gs * (Bm - Dm * am_inv * bm) * p[2 * n - 2]
                    - gs * Dm * am_inv * p[2 * n - 3])
        residuals.append(even_lhs - even_rhs)

        gamma = (one + up.k.v) * ring_inv(st.sigma.v)
        khat = (gamma - t(up.sigma.v) * st.D.v) * a_inv
        s = st.sigma.v
        p_hi = poly_values(fam.P(2 * n + 2))
        odd_lhs = (p[2 * n + 1] + gamma * p[2 * n]).shift(1)
        odd_rhs = (t(up.v.v) * p_hi
                   + (-khat - t(up.u.v) - gamma * s * ta * a_inv) * p[2 * n + 1]
                   + (-t(up.sigma.v) * st.B.v + gamma * st.r.v
                      + gamma * s * (tb - ta * a_inv * b) - khat * b) * p[2 * n]
                   + (khat - gamma * (st.tsigma.v - s * ta * a_inv)
                      + gamma * st.g.v * Dm * am_inv) * p[2 * n - 1]
                   - gamma * st.g.v * (Bm - Dm * am_inv * bm) * p[2 * n - 2]
                   - gamma * st.g.v * Dm * am_inv * p[2 * n - 3])
        residuals.append(odd_lhs - odd_rhs)
    return residuals
