# sums/services.py
import logging
from fractions import Fraction
from typing import Callable

from padic.exceptions import ExactPole, NotPAdicInteger, OutOfRange
from padic.services import Context, ValuedResidue, exact_zero, from_rational, one
from seqlib.cache import SEQ_CACHE

from .specs import Family, KPow, SumSpec, TermFamily, Upper, Weight, general

logger = logging.getLogger(__name__)

# (n, r) pairs of C(n*k, r*k) making up each central family
FAMILY_BINOMIALS = {
    Family.CENTRAL_CUBE: ((2, 1), (2, 1), (2, 1)),
    Family.CENTRAL_SQ_3K: ((2, 1), (2, 1), (3, 1)),
    Family.CENTRAL_SQ_4K2K: ((2, 1), (2, 1), (4, 2)),
    Family.MIXED_6K: ((2, 1), (3, 1), (6, 3)),
}


def _falling(x: int, length: int) -> int:
    result = 1
    for i in range(length):
        result *= x - i
    return result


def binomial_step(n: int, r: int, k: int) -> Fraction:
    """C(nk, rk) / C(n(k-1), r(k-1)) for k >= 1."""
    return Fraction(
        _falling(n * k, n),
        _falling(r * k, r) * _falling((n - r) * k, n - r),
    )


def term_ratio(family: TermFamily, k: int) -> Fraction:
    """term(k) / term(k-1) as an exact rational; zero once a factor vanishes."""
    if family.tag is Family.GENERAL_A:
        a = family.a
        return (a - k + 1) * (-a - k) * (2 * k - 1) / Fraction(2 * k ** 3)
    ratio = Fraction(1, family.m)
    for n, r in FAMILY_BINOMIALS[family.tag]:
        ratio *= binomial_step(n, r, k)
    return ratio


def _term_table(ctx: Context, family: TermFamily):
    if family.tag is Family.GENERAL_A and family.a.denominator % ctx.p == 0:
        raise NotPAdicInteger(f"a = {family.a} has p = {ctx.p} in its denominator")

    def compute():
        terms = [one(ctx)]
        current = terms[0]
        for k in range(1, ctx.p):
            if not current.is_exact_zero:
                current = current * from_rational(ctx, term_ratio(family, k))
            terms.append(current)
        return tuple(terms)
    return SEQ_CACHE.fill(('terms', ctx.p, ctx.N, family), compute)


def term_value(ctx: Context, family: TermFamily, k: int) -> ValuedResidue:
    """
    k-th term of a family with its p-power tracked exactly.

    Args:
        ctx: Arithmetic context
        family: Term family
        k: 0 <= k <= p-1
    """
    if k < 0 or k >= ctx.p:
        raise OutOfRange(f"Term index {k} outside [0, {ctx.p - 1}]")
    return _term_table(ctx, family)[k]


def exact_weight(w: Weight, k: int) -> Fraction:
    """
    Rational value of a weight at k.

    Raises:
        ExactPole: alpha*k + beta vanishes
    """
    if isinstance(w, KPow):
        return w.at(k)
    d = w.denominator(k)
    if d == 0:
        raise ExactPole(f"Weight {w} has a pole at k={k}")
    return 1 / d ** w.j


def weight_value(ctx: Context, w: Weight, k: int) -> ValuedResidue:
    return from_rational(ctx, exact_weight(w, k))


def evaluate(ctx: Context, spec: SumSpec) -> ValuedResidue:
    """
    Sum of term * weight over the summation range of the SumSpec.

    Returns:
        Valued residue whose absolute precision is what survives the
        valuations of the individual summands

    Raises:
        ExactPole: the weight has a pole in range, even where the term vanishes
    """
    upper = spec.upper.resolve(ctx.p)
    total = exact_zero(ctx)
    for k in range(upper + 1):
        term = term_value(ctx, spec.family, k)
        if term.is_exact_zero:
            # 0 * 1/0 has no value
            exact_weight(spec.weight, k)
            continue
        total = total + term * weight_value(ctx, spec.weight, k)
    return total


def evaluate_weighted(ctx: Context, family: TermFamily, upper: int,
                      coefficient: Callable[[int], Fraction]) -> ValuedResidue:
    """
    Sum of term(k) * coefficient(k) for 0 <= k <= upper.

    For polynomial or mixed weights not covered by a single Weight; a zero
    denominator inside coefficient surfaces as ExactPole.
    """
    if upper >= ctx.p:
        raise OutOfRange(f"Upper bound {upper} exceeds p-1 = {ctx.p - 1}")
    total = exact_zero(ctx)
    for k in range(upper + 1):
        term = term_value(ctx, family, k)
        if term.is_exact_zero:
            continue
        try:
            c = Fraction(coefficient(k))
        except ZeroDivisionError:
            raise ExactPole(f"Coefficient has a pole at k={k}")
        if c:
            total = total + term * from_rational(ctx, c)
    return total


def s_n(ctx: Context, a, n: int) -> ValuedResidue:
    """
    S_n(a) = sum_{k<n} C(a,k) C(-1-a,k) C(2k,k) / 4^k.

    Args:
        ctx: Arithmetic context
        a: Rational parameter
        n: 1 <= n <= p
    """
    if n < 1 or n > ctx.p:
        raise OutOfRange(f"S_n needs 1 <= n <= p, got n={n}")
    family = general(a)
    try:
        total = exact_zero(ctx)
        for k in range(n):
            total = total + term_value(ctx, family, k)
        return total
    except Exception as e:
        logger.error(f"Error evaluating S_{n}({a}) at p={ctx.p}: {str(e)}")
        raise


def spec(family: TermFamily, weight: Weight = KPow(0), upper: str = 'p-1') -> SumSpec:
    """Shorthand used by the catalog: spec(cube(64), inv(2, -1), 'p-1')."""
    return SumSpec(family, weight, Upper(upper))
