"""Non-commutative lattice variables built from bordered quasi-Pfaffians.

``LatticeState`` collects, for one level n over the body {0..2n-1}, the
jet-valued variables

    u      = Pf(.,[mom1, mom0])        k  = Pf(.,[mom0, mom0])
    sigma  = Pf(.,[2n, mom0])          tsigma  = Pf(.,[2n, mom1])
    hsigma = Pf(.,[2n+1, mom0])        thsigma = Pf(.,[2n+1, mom1])
    v      = Pf(.,[unit, mom0])        w  = Pf(.,[unit, mom1])
    r      = Pf(.,[2n, unit])          g  = Pf(.,[2n, 2n])

together with the 2x2 corner inverse [[A, C], [B, D]] of the matrix of
repeated-label values over (2n, 2n+1).  Every accumulated "integral"
quantity is identified with its quasi-Pfaffian value (g and k play those
roles); derivatives come from the jets, never from quadrature.

The residual functions assert the step laws relating level n to level
n+1 and the internal derivative relations, all as exact zeroes.
The commutative reduction is checked separately through classical
Pfaffian tau functions represented as exact functions of t.
"""

from __future__ import annotations

from fractions import Fraction

from qpf.jets import Jet
from qpf.moments import VPoly, random_state, vpoly_entry, vpoly_phi
from qpf.ncmatrix import NCMatrix, SingularMinor, block_invert
from qpf.pfaffian import pfaffian_labels
from qpf.quasipfaffian import BodyFrame, body, body_range, mom, unit
from qpf.rings import involute, is_zero, ring_inv


class LatticeState:
    """All level-n lattice variables over one moment state, as jets."""

    def __init__(self, state, n):
        if state.measure.size < 2 * n:
            raise ValueError("measure too small for this level")
        self.state = state
        self.n = n
        frame = BodyFrame(state.oracle(jets=True), body_range(2 * n))
        self.frame = frame
        V = frame.value
        c = unit(2 * n - 1) if n > 0 else None
        self.one = frame.oracle.one
        self.u = V(mom(1), mom(0))
        self.k = V(mom(0), mom(0))
        self.sigma = V(body(2 * n), mom(0))
        self.tsigma = V(body(2 * n), mom(1))
        self.hsigma = V(body(2 * n + 1), mom(0))
        self.thsigma = V(body(2 * n + 1), mom(1))
        if n > 0:
            self.v = V(c, mom(0))
            self.w = V(c, mom(1))
            self.r = V(body(2 * n), c)
        else:
            zero = frame.oracle.zero
            self.v = zero
            self.w = zero
            self.r = zero
        self.g = V(body(2 * n), body(2 * n))
        # gauge factor 1 - k and its inverse, as jets
        self.gauge = self.one - self.k
        self.gauge_inv = self.gauge.inv()
        self._corner = None
        self._corner_inv = None

    # the 2x2 corner of repeated-label values over (2n, 2n+1) and its
    # inverse; lazy because the top level of a minimal measure only
    # supplies u, v and sigma-type values, not an invertible corner
    @property
    def corner(self):
        if self._corner is None:
            V = self.frame.value
            n = self.n
            self._corner = NCMatrix([
                [V(body(2 * n), body(2 * n)), V(body(2 * n), body(2 * n + 1))],
                [V(body(2 * n + 1), body(2 * n)), V(body(2 * n + 1), body(2 * n + 1))]])
        return self._corner

    @property
    def corner_inv(self):
        if self._corner_inv is None:
            self._corner_inv = block_invert(self.corner)
        return self._corner_inv

    @property
    def A(self):
        return self.corner_inv.data[0][0]

    @property
    def C(self):
        return self.corner_inv.data[0][1]

    @property
    def B(self):
        return self.corner_inv.data[1][0]

    @property
    def D(self):
        return self.corner_inv.data[1][1]

    # coefficient combinations used by the polynomial module
    def a_coeff(self):
        return involute(self.sigma) * self.C + involute(self.hsigma) * self.D

    def b_coeff(self):
        return involute(self.sigma) * self.A + involute(self.hsigma) * self.B

    def ta_coeff(self):
        return involute(self.tsigma) * self.C + involute(self.thsigma) * self.D

    def tb_coeff(self):
        return involute(self.tsigma) * self.A + involute(self.thsigma) * self.B


def build_state(state, n):
    """LatticeState at level n; raises SingularMinor on degenerate data."""
    return LatticeState(state, n)


def corner_inverse_residuals(st):
    """The corner inverse is exact and two-sided."""
    prod1 = st.corner * st.corner_inv
    prod2 = st.corner_inv * st.corner
    ident = NCMatrix.identity(2, st.one)
    return [prod1 - ident == prod1 - prod1 and prod1 == ident,
            prod2 == ident]


def step_residuals(lo, hi):
    """Step laws tying level n to level n+1 (exact-zero jets).

    * the u-step: u_{n+1} - u_n equals the corner-corrected bilinear
      combination of the tilde variables with sigma and hsigma;
    * the v-step: v_{n+1} = B sigma + D hsigma.
    """
    t = involute
    u_step = hi.u - (lo.u + (t(lo.tsigma) * lo.A + t(lo.thsigma) * lo.B) * lo.sigma
                     + (t(lo.tsigma) * lo.C + t(lo.thsigma) * lo.D) * lo.hsigma)
    v_step = hi.v - (lo.B * lo.sigma + lo.D * lo.hsigma)
    return [u_step, v_step]


def tilde_residuals(st):
    """The tilde variables are gauge-transformed derivatives.

    tsigma = (sigma' - sigma u) (1 - k)^-1 and the same for the hatted
    pair; both come from the moment-split derivative law.
    """
    t_res = st.tsigma.v - (st.sigma.d - st.sigma.v * st.u.v) * st.gauge_inv.v
    th_res = st.thsigma.v - (st.hsigma.d - st.hsigma.v * st.u.v) * st.gauge_inv.v
    return [t_res, th_res]


def hat_residuals(st):
    """Shift-law consequences for the hatted and tilde-hatted variables.

    hsigma = sigma' - r sigma + g v, and
    thsigma = tsigma' - r tsigma + g w.
    """
    h_res = st.hsigma.v - (st.sigma.d - st.r.v * st.sigma.v + st.g.v * st.v.v)
    th_res = st.thsigma.v - (st.tsigma.d - st.r.v * st.tsigma.v + st.g.v * st.w.v)
    return [h_res, th_res]


def r_derivative_residual(st):
    """Exact derivative of r in terms of (sigma, v, u, k) only.

    r' = tsigma v^T - sigma (1 + k)^-1 (v'^T - u^T v^T); note the
    transposed gauge (1 + k) = (1 - k)^T.
    """
    t = involute
    plus = (st.one.v + st.k.v)
    rhs = (st.tsigma.v * t(st.v.v)
           - st.sigma.v * ring_inv(plus) * (t(st.v.d) - t(st.u.v) * t(st.v.v)))
    return st.r.d - rhs


def compatibility_residuals(st):
    """The two expressions for thsigma agree, and the closed form holds.

    Closed form: (-r' sigma + g' v + sigma u') (1 - k)^-1
                  = (sigma' - sigma u) d/dt[(1 - k)^-1].
    """
    direct = ((st.hsigma.d - st.hsigma.v * st.u.v) * st.gauge_inv.v
              - (st.tsigma.d - st.r.v * st.tsigma.v + st.g.v * st.w.v))
    closed = ((-st.r.d * st.sigma.v + st.g.d * st.v.v + st.sigma.v * st.u.d)
              * st.gauge_inv.v
              - (st.sigma.d - st.sigma.v * st.u.v) * st.gauge_inv.d)
    return [direct, closed]


def verify_level(state, n):
    """All lattice residuals at level n (building n+1 for the steps)."""
    lo = LatticeState(state, n)
    hi = LatticeState(state, n + 1)
    residuals = []
    residuals += step_residuals(lo, hi)
    residuals += tilde_residuals(lo)
    residuals += hat_residuals(lo)
    residuals.append(r_derivative_residual(lo))
    residuals += compatibility_residuals(lo)
    return residuals


# ---------------------------------------------------------------------------
# commutative reduction: classical tau functions and the bilinear system

MOM_LABEL = "mom0"


def tau_function(measure, m):
    """tau_m as an exact function of t over a rational-ring measure.

    Even m: the Pfaffian of the body 0..m-1.  Odd m: the body 0..m-1
    extended by the zeroth moment column.
    """
    nodes = measure.nodes
    one = VPoly.const(nodes, 1)

    def entry(i, j):
        if i == MOM_LABEL:
            return -vpoly_phi(measure, j)
        if j == MOM_LABEL:
            return vpoly_phi(measure, i)
        return vpoly_entry(measure, i, j)

    if m == 0:
        return one
    if m % 2 == 0:
        return pfaffian_labels(entry, range(m), one)
    return pfaffian_labels(entry, list(range(m)) + [MOM_LABEL], one)


def hirota_d1(f, g):
    return f.ddt() * g - f * g.ddt()


def hirota_d2(f, g):
    return f.ddt().ddt() * g - 2 * f.ddt() * g.ddt() + f * g.ddt().ddt()


def bilinear_residuals(measure, n):
    """Both parities of the coupled bilinear lattice at index n.

    Returns exact-function residuals of
        D^2 tau_{2n} . tau_{2n}   = 2 D tau_{2n-1} . tau_{2n+1},
        D^2 tau_{2n+1}. tau_{2n+1} = 2 D tau_{2n}   . tau_{2n+2}.
    """
    if measure.ring.name != "rational":
        raise ValueError("bilinear reduction is a commutative check")
    nodes = measure.nodes
    zero = VPoly.zero(nodes)
    t_even = tau_function(measure, 2 * n)
    t_odd_lo = tau_function(measure, 2 * n - 1) if n > 0 else zero
    t_odd = tau_function(measure, 2 * n + 1)
    t_even_hi = tau_function(measure, 2 * n + 2)
    res_even = hirota_d2(t_even, t_even) - 2 * hirota_d1(t_odd_lo, t_odd)
    res_odd = hirota_d2(t_odd, t_odd) - 2 * hirota_d1(t_even, t_even_hi)
    return [res_even, res_odd]


def reduction_residuals(state, n):
    """Commutative reduction of the lattice variables to tau ratios.

    sigma = tau_{2n+1}/tau_{2n}, v = tau_{2n-1}/tau_{2n},
    u = r = -tau'_{2n}/tau_{2n}, tsigma = hsigma = tau'_{2n+1}/tau_{2n},
    thsigma = tau''_{2n+1}/tau_{2n}, and the corner inverse is
    antidiagonal with entries -+ tau_{2n} tau_{2n+2}^{-1}.
    """
    if state.ring.name != "rational":
        raise ValueError("reduction residuals are a commutative check")
    st = LatticeState(state, n)
    meas = state.measure
    snap = state.snapshot

    def tau(m):
        return tau_function(meas, m).at(snap)

    def tau_d(m):
        return tau_function(meas, m).ddt().at(snap)

    def tau_dd(m):
        return tau_function(meas, m).ddt().ddt().at(snap)

    t2n = tau(2 * n)
    t2n2 = tau(2 * n + 2)
    return [
        st.sigma.v - tau(2 * n + 1) / t2n,
        st.v.v - tau(2 * n - 1) / t2n,
        st.u.v + tau_d(2 * n) / t2n,
        st.r.v + tau_d(2 * n) / t2n,
        st.tsigma.v - tau_d(2 * n + 1) / t2n,
        st.hsigma.v - tau_d(2 * n + 1) / t2n,
        st.thsigma.v - tau_dd(2 * n + 1) / t2n,
        st.A.v,
        st.D.v,
        st.C.v + t2n / t2n2,
        st.B.v - t2n / t2n2,
    ]
