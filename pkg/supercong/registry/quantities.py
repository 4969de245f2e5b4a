# registry/quantities.py
"""Per-(p, sample) ingredients of the closed forms, computed on first use."""
import logging
from fractions import Fraction
from functools import cached_property

from padic.services import (
    Context,
    ValuedResidue,
    a_prime,
    from_rational,
    residue_index,
)
from quadform.services import QuadRep, represent, represent_4p27
from seqlib.services import (
    binom_integer,
    euler_mod_p,
    fermat_quotient,
    half_sign,
    harmonic,
    legendre,
    mod_p_value,
    power_minus_one,
    r_aggregates,
    suite_quantities,
    u_mod_p,
)
from sums.services import evaluate, s_n
from sums.specs import SumSpec, Upper, general, inv

from .types import Sample

logger = logging.getLogger(__name__)


class Quantities:
    """
    Everything a right-hand side may consume at one prime.

    Representations used while evaluating are remembered in used_rep so the
    report can show the x and y that entered the closed form.
    """

    def __init__(self, ctx: Context, sample: Sample = None):
        self.ctx = ctx
        self.p = ctx.p
        self.sample = sample
        self.used_rep = None
        self._reps = {}
        self._s = {}

    def value(self, q) -> ValuedResidue:
        return from_rational(self.ctx, q)

    # Fermat quotients and the auxiliary sequences

    @cached_property
    def q2(self) -> ValuedResidue:
        return fermat_quotient(self.ctx, 2)

    @cached_property
    def q3(self) -> ValuedResidue:
        return fermat_quotient(self.ctx, 3)

    @cached_property
    def pq2(self) -> ValuedResidue:
        """2^(p-1) - 1"""
        return power_minus_one(self.ctx, 2)

    @cached_property
    def E(self) -> ValuedResidue:
        """E_{p-3} mod p"""
        return mod_p_value(self.ctx, euler_mod_p(self.ctx, self.p - 3))

    @cached_property
    def U(self) -> ValuedResidue:
        """U_{p-3} mod p"""
        return mod_p_value(self.ctx, u_mod_p(self.ctx, self.p - 3))

    @property
    def s(self) -> int:
        return half_sign(self.p)

    @property
    def p3(self) -> int:
        return legendre(self.p, 3)

    # Binary quadratic forms

    def rep(self, d: int) -> QuadRep:
        """p = x^2 + d*y^2, or 4p = x^2 + 27*y^2 for d = 27."""
        rep = self._reps.get(d)
        if rep is None:
            rep = represent_4p27(self.p) if d == 27 else represent(self.p, d)
            self._reps[d] = rep
        self.used_rep = rep
        return rep

    def x_form(self, d: int, cx=0, cp=0, cq=0, c0=0, cp2=0) -> ValuedResidue:
        """c0 + cx*x^2 + cp*p + cp2*p^2 + cq*p^2/x^2"""
        return self.value(self._form(self.rep(d).x2, cx, cp, cq, c0, cp2))

    def y_form(self, d: int, cy=0, cp=0, cq=0, c0=0, cp2=0) -> ValuedResidue:
        """c0 + cy*y^2 + cp*p + cp2*p^2 + cq*p^2/y^2"""
        return self.value(self._form(self.rep(d).y2, cy, cp, cq, c0, cp2))

    def _form(self, square, c1, cp, cq, c0, cp2) -> Fraction:
        p = self.p
        return (Fraction(c0) + Fraction(c1) * square + Fraction(cp) * p
                + Fraction(cp2) * p * p + Fraction(cq) * Fraction(p * p, square))

    # Binomial closed forms

    def half_binom(self, r: int) -> ValuedResidue:
        """C((p-1)/2, r)"""
        return binom_integer((self.p - 1) // 2, r, self.ctx)

    @cached_property
    def ratio(self) -> Fraction:
        """(p+1)^2 / 2^(p-1)"""
        return Fraction((self.p + 1) ** 2, 2 ** (self.p - 1))

    @cached_property
    def B(self) -> ValuedResidue:
        """C((p-1)/2, (p-3)/4) for p = 3 mod 4"""
        return self.half_binom((self.p - 3) // 4)

    @cached_property
    def B_alt(self) -> ValuedResidue:
        """C((p-3)/2, (p-3)/4) for p = 3 mod 4"""
        return binom_integer((self.p - 3) // 2, (self.p - 3) // 4, self.ctx)

    def b_form(self, c_ratio=0, c_inv=0, c_e=0) -> ValuedResidue:
        """c_ratio*(p+1)^2/2^(p-1)*B^2 + c_inv*p^2/B^2 + c_e*p^2*B^2*E_{p-3}"""
        p2 = self.p * self.p
        b2 = self.B * self.B
        return (Fraction(c_ratio) * self.ratio * b2 + Fraction(c_inv) * p2 / b2
                + Fraction(c_e) * p2 * b2 * self.E)

    @cached_property
    def D(self) -> ValuedResidue:
        """C((p-1)/2, (p-5)/6) for p = 2 mod 3"""
        return self.half_binom((self.p - 5) // 6)

    @cached_property
    def Q(self) -> ValuedResidue:
        """The p = 2 mod 3 expansion D^2 (1 + p(...) + p^2(...)) shared by the 108-sums."""
        p = self.p
        q2, q3 = self.q2, self.q3
        first = 2 + Fraction(4, 3) * q2 - Fraction(3, 2) * q3
        second = (1 + Fraction(8, 3) * q2 + Fraction(2, 9) * q2 * q2 - 3 * q3
                  - 2 * q2 * q3 + Fraction(15, 8) * q3 * q3 + Fraction(3, 4) * self.U)
        return self.D * self.D * (1 + p * first + p * p * second)

    def q_form(self, c_q=0, c_inv=0, c0=0) -> ValuedResidue:
        """c0 + c_q*Q + c_inv*p^2/D^2"""
        p2 = self.p * self.p
        return Fraction(c0) + Fraction(c_q) * self.Q + Fraction(c_inv) * p2 / (self.D * self.D)

    def T(self, c) -> ValuedResidue:
        """C((p-1)/2, [p/12])^2 (1 + p(c - 3q_2 - 5/2 q_3 - 2/3 H_[p/12])) for p = 3 mod 4"""
        m = self.p // 12
        c12 = self.half_binom(m)
        inner = (Fraction(c) - 3 * self.q2 - Fraction(5, 2) * self.q3
                 - Fraction(2, 3) * harmonic(self.ctx, m))
        return c12 * c12 * (1 + self.p * inner)

    def R(self, which) -> ValuedResidue:
        return r_aggregates(self.ctx, which)

    @cached_property
    def W(self) -> ValuedResidue:
        """(2p+1) C([2p/3], [p/3])^2"""
        c = binom_integer(2 * self.p // 3, self.p // 3, self.ctx)
        return (2 * self.p + 1) * c * c

    @cached_property
    def suite(self):
        return suite_quantities(self.ctx)

    # Parametric quantities

    @property
    def a(self) -> Fraction:
        return self.sample.a

    @cached_property
    def r(self) -> int:
        """<a>_p"""
        return residue_index(self.ctx, self.a)

    @cached_property
    def ap(self) -> Fraction:
        """a' = (a - <a>_p)/p"""
        return a_prime(self.ctx, self.a)

    @cached_property
    def app(self) -> Fraction:
        """a'(a'+1)"""
        return self.ap * (self.ap + 1)

    def S(self, b) -> ValuedResidue:
        """S_p(b)"""
        b = Fraction(b)
        value = self._s.get(b)
        if value is None:
            value = s_n(self.ctx, b, self.p)
            self._s[b] = value
        return value

    def reciprocal(self, b) -> ValuedResidue:
        """sum_{k<=p-2} F(b,k)/(k+1)"""
        return evaluate(self.ctx, SumSpec(general(b), inv(1, 1), Upper.P_MINUS_2))

    def even_closed(self, n: int) -> ValuedResidue:
        """
        C((p-1)/2, n)^2 (1 + pX + p^2/2 (2a'q_2^2 + X^2 + (2a'^2-1)/2 H_n^(2)
        + 2(1-a'^2) H_2n^(2))) with X = (2a'+2)H_2n - (2a'+1)H_n - 2a'q_2.
        """
        ctx, p, ap = self.ctx, self.p, self.ap
        q2 = self.q2
        x = (2 * ap + 2) * harmonic(ctx, 2 * n) - (2 * ap + 1) * harmonic(ctx, n) - 2 * ap * q2
        second = (2 * ap * q2 * q2 + x * x + (2 * ap * ap - 1) / 2 * harmonic(ctx, n, 2)
                  + 2 * (1 - ap * ap) * harmonic(ctx, 2 * n, 2))
        c = self.half_binom(n)
        return c * c * (1 + p * x + Fraction(p * p, 2) * second)
