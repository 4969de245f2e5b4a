# padic/services.py
"""
Exact truncated p-adic arithmetic.

Every number is carried as p^v * u with u a unit known modulo p^prec.
Zeros are either exact (cancellation of exact rationals, products with an
exact zero) or known only modulo a power of p after additive cancellation.
"""
import logging
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from django.conf import settings
from sympy import isprime

from .exceptions import (
    BadPrecision,
    CompositeModulus,
    DivisionByZero,
    NegativeValuation,
    NotPAdicInteger,
    PrecisionExhausted,
)

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

DEFAULT_INVERSE_TABLE_CAP = 4096
# exact rational values are carried along while they stay this small
EXACT_BITS = 128
MIN_PRECISION = 6
PRECISION_HEADROOM = 3


def default_precision(exponent: int) -> int:
    """Working precision able to certify a comparison modulo p^exponent."""
    return max(MIN_PRECISION, exponent + PRECISION_HEADROOM)


def split_power(n: int, p: int):
    """Return (v, m) with n = p^v * m and p not dividing m; n must be nonzero."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class Context:
    """A prime p together with the working modulus p^N."""
    p: int
    N: int
    modulus: int = field(init=False, repr=False, compare=False)
    _powers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        powers = tuple(self.p ** i for i in range(2 * self.N + 8))
        object.__setattr__(self, '_powers', powers)
        object.__setattr__(self, 'modulus', powers[self.N])

    def pow_p(self, i: int) -> int:
        if i < len(self._powers):
            return self._powers[i]
        return self.p ** i

    @property
    def inverse_table(self):
        """Inverses of 1..min(p-1, cap) modulo p^N, built on first use."""
        table = self.__dict__.get('_inverse_table')
        if table is None:
            cap = _setting('INVERSE_TABLE_CAP', DEFAULT_INVERSE_TABLE_CAP)
            size = min(self.p - 1, cap)
            table = [0] * (size + 1)
            if size >= 1:
                table[1] = 1
            for i in range(2, size + 1):
                # inv(i) = -(M // i) * inv(M mod i) mod M
                table[i] = (-(self.modulus // i) * table[self.modulus % i]) % self.modulus
            object.__setattr__(self, '_inverse_table', table)
        return table

    def inverse(self, k: int) -> int:
        """Inverse of the unit k modulo p^N."""
        table = self.inverse_table
        if 0 < k < len(table):
            return table[k]
        return pow(k, -1, self.modulus)


@dataclass(frozen=True, eq=False)
class ValuedResidue:
    """
    A p-adic number p^v * u.

    zero: the value is zero (exactly, or modulo p^zero_prec)
    v: valuation; u: unit part modulo p^prec
    prec: number of reliable digits above the valuation
    zero_prec: for zeros, the absolute precision to which the value is known
        to vanish; None for an exact zero
    exact: the rational value when it is known and small, so that exact
        cancellation yields the exact zero
    """
    ctx: Context
    zero: bool
    v: int = 0
    u: int = 0
    prec: int = 0
    zero_prec: Optional[int] = None
    exact: Optional[Fraction] = None

    # absolute precision exponent; None means exact
    @property
    def absolute_precision(self) -> Optional[int]:
        if self.zero:
            return self.zero_prec
        return self.v + self.prec

    @property
    def is_exact_zero(self) -> bool:
        return self.zero and self.zero_prec is None

    def _coerce(self, other):
        if isinstance(other, ValuedResidue):
            return other
        if isinstance(other, (int, Fraction)):
            return from_rational(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, e: int):
        return power(self, e)

    def __repr__(self):
        if self.zero:
            if self.zero_prec is None:
                return f"ValuedResidue(p={self.ctx.p}, 0)"
            return f"ValuedResidue(p={self.ctx.p}, O(p^{self.zero_prec}))"
        return (f"ValuedResidue(p={self.ctx.p}, v={self.v}, u={self.u}, "
                f"prec={self.prec})")


def _setting(key, default):
    try:
        return settings.SUPERCONG.get(key) or default
    except Exception:
        return default


@lru_cache(maxsize=256)
def make_context(p: int, N: int) -> Context:
    """
    Builds the arithmetic context for prime p and precision exponent N.

    Args:
        p: Odd prime
        N: Absolute precision exponent, at least 1

    Returns:
        Context shared by every value computed modulo p^N
    """
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise CompositeModulus(f"{p} is not an odd prime")
    if not isinstance(N, int) or N < 1:
        raise BadPrecision(f"Precision exponent must be at least 1, got {N}")
    return Context(p, N)


def exact_zero(ctx: Context) -> ValuedResidue:
    return ValuedResidue(ctx, True)


def approximate_zero(ctx: Context, absolute: int) -> ValuedResidue:
    return ValuedResidue(ctx, True, zero_prec=absolute)


def one(ctx: Context) -> ValuedResidue:
    return ValuedResidue(ctx, False, 0, 1, ctx.N, exact=Fraction(1))


def _size(q: Fraction) -> int:
    return q.numerator.bit_length() + q.denominator.bit_length()


def _small(q: Optional[Fraction]) -> Optional[Fraction]:
    if q is None or _size(q) > EXACT_BITS:
        return None
    return q


def _exact(op, *values) -> Optional[Fraction]:
    known = [x.exact for x in values]
    if any(q is None for q in known):
        return None
    return _small(op(*known))


def _unit(ctx: Context, v: int, u: int, prec: int, exact=None) -> ValuedResidue:
    return ValuedResidue(ctx, False, v, u % ctx.pow_p(prec), prec, exact=exact)


def from_rational(ctx: Context, q: Rational) -> ValuedResidue:
    """
    Embeds a rational number.

    Args:
        ctx: Arithmetic context
        q: int or Fraction; p may divide numerator or denominator

    Returns:
        Valued residue with full precision N
    """
    if isinstance(q, int):
        if q == 0:
            return exact_zero(ctx)
        v, m = split_power(q, ctx.p)
        return _unit(ctx, v, m, ctx.N, _small(Fraction(q)))
    q = Fraction(q)
    if q == 0:
        return exact_zero(ctx)
    vn, un = split_power(q.numerator, ctx.p)
    vd, ud = split_power(q.denominator, ctx.p)
    u = un * pow(ud, -1, ctx.modulus)
    return _unit(ctx, vn - vd, u, ctx.N, _small(q))


def from_residue(ctx: Context, r: int) -> ValuedResidue:
    """Embeds an integer known only modulo p^N (absolute precision N)."""
    r %= ctx.modulus
    if r == 0:
        return approximate_zero(ctx, ctx.N)
    v, m = split_power(r, ctx.p)
    return _unit(ctx, v, m, ctx.N - v)


def _terms(x: ValuedResidue):
    # (valuation, unit, absolute precision) with approximate zeros as (A, 0, A)
    if x.zero:
        return x.zero_prec, 0, x.zero_prec
    return x.v, x.u, x.v + x.prec


def add(x: ValuedResidue, y: ValuedResidue) -> ValuedResidue:
    if x.is_exact_zero:
        return y
    if y.is_exact_zero:
        return x
    ctx = x.ctx
    exact = _exact(operator.add, x, y)
    if exact == 0:
        return exact_zero(ctx)
    vx, ux, ax = _terms(x)
    vy, uy, ay = _terms(y)
    absolute = min(ax, ay)
    m = min(vx, vy)
    if m >= absolute:
        return approximate_zero(ctx, absolute)
    width = absolute - m
    s = 0
    if vx < absolute:
        s += ux * ctx.pow_p(vx - m)
    if vy < absolute:
        s += uy * ctx.pow_p(vy - m)
    s %= ctx.pow_p(width)
    if s == 0:
        return approximate_zero(ctx, absolute)
    c, s = split_power(s, ctx.p)
    v = m + c
    return _unit(ctx, v, s, absolute - v, exact)


def neg(x: ValuedResidue) -> ValuedResidue:
    if x.zero:
        return x
    return _unit(x.ctx, x.v, -x.u, x.prec, None if x.exact is None else -x.exact)


def sub(x: ValuedResidue, y: ValuedResidue) -> ValuedResidue:
    return add(x, neg(y))


def mul(x: ValuedResidue, y: ValuedResidue) -> ValuedResidue:
    ctx = x.ctx
    if x.is_exact_zero or y.is_exact_zero:
        return exact_zero(ctx)
    if x.zero or y.zero:
        # product of something known to vanish mod p^A with p^v * unit
        if x.zero and y.zero:
            return approximate_zero(ctx, x.zero_prec + y.zero_prec)
        z, w = (x, y) if x.zero else (y, x)
        return approximate_zero(ctx, z.zero_prec + w.v)
    prec = min(x.prec, y.prec)
    return _unit(ctx, x.v + y.v, x.u * y.u, prec, _exact(operator.mul, x, y))


def div(x: ValuedResidue, y: ValuedResidue) -> ValuedResidue:
    ctx = x.ctx
    if y.is_exact_zero:
        raise DivisionByZero("Division by an exact zero")
    if y.zero:
        raise PrecisionExhausted(
            f"Divisor is zero to attained precision p^{y.zero_prec}"
        )
    if x.is_exact_zero:
        return x
    if x.zero:
        return approximate_zero(ctx, x.zero_prec - y.v)
    prec = min(x.prec, y.prec)
    modulus = ctx.pow_p(prec)
    return _unit(ctx, x.v - y.v, x.u * pow(y.u, -1, modulus), prec,
                 _exact(operator.truediv, x, y))


def power(x: ValuedResidue, e: int) -> ValuedResidue:
    ctx = x.ctx
    if e == 0:
        return one(ctx)
    if e < 0:
        return div(one(ctx), power(x, -e))
    if x.zero:
        if x.zero_prec is None:
            return x
        return approximate_zero(ctx, x.zero_prec * e)
    exact = None
    if x.exact is not None and _size(x.exact) * e <= EXACT_BITS:
        exact = x.exact ** e
    return _unit(ctx, x.v * e, pow(x.u, e, ctx.pow_p(x.prec)), x.prec, exact)


def reduce_mod(x: ValuedResidue, e: int) -> int:
    """
    Canonical residue of x modulo p^e.

    Raises:
        NegativeValuation: x is not a p-adic integer
        PrecisionExhausted: x is not known modulo p^e
    """
    ctx = x.ctx
    if x.zero:
        if x.zero_prec is not None and x.zero_prec < e:
            raise PrecisionExhausted(
                f"Zero known only modulo p^{x.zero_prec}, requested p^{e}"
            )
        return 0
    if x.v < 0:
        raise NegativeValuation(f"Valuation {x.v} < 0 has no residue mod p^{e}")
    if x.v + x.prec < e:
        raise PrecisionExhausted(
            f"Attained precision p^{x.v + x.prec} does not reach p^{e}"
        )
    if x.v >= e:
        return 0
    return (ctx.pow_p(x.v) * x.u) % ctx.pow_p(e)


def residue_index(ctx: Context, a: Rational) -> int:
    """Least nonnegative residue <a>_p of a p-adic integer a."""
    a = Fraction(a)
    if a.denominator % ctx.p == 0:
        raise NotPAdicInteger(f"{a} has p = {ctx.p} in its denominator")
    return a.numerator * pow(a.denominator, -1, ctx.p) % ctx.p


def a_prime(ctx: Context, a: Rational) -> Fraction:
    """The p-adic integer a' = (a - <a>_p) / p."""
    a = Fraction(a)
    return (a - residue_index(ctx, a)) / ctx.p


def is_p_integral(ctx: Context, a: Rational) -> bool:
    return Fraction(a).denominator % ctx.p != 0


def congruent(x: ValuedResidue, y: ValuedResidue, e: int) -> bool:
    return reduce_mod(x, e) == reduce_mod(y, e)
