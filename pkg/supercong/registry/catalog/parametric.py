# registry/catalog/parametric.py
"""Congruences quantified over a in Z_p, plus the t- and (t, n)-families."""
from fractions import Fraction as F

from seqlib.services import binom_integer, binom_rational
from sums.services import evaluate, evaluate_weighted, spec
from sums.specs import ONE, KPow, general, inv

from ..types import Branch, Kind, Sampler, Statement
from .common import all_of, avoiding, avoiding_text, pole_free, pole_free_text, single


def general_sum(weight=ONE, upper='p-1', shift=None):
    """sum_k C(a,k) C(-1-a,k) C(2k,k)/4^k * weight, with a taken from the sample.

    shift builds a weight depending on a itself, e.g. 1/(k+a).
    """
    def lhs(q):
        w = shift(q.a) if shift is not None else weight
        return evaluate(q.ctx, spec(general(q.a), w, upper))
    return lhs


def weighted_general(coefficient):
    def lhs(q):
        return evaluate_weighted(q.ctx, general(q.a), q.p - 1, lambda k: coefficient(q.a, k))
    return lhs


def term_over_p(i):
    """C(a,p-i) C(-1-a,p-i) C(2p-2i,p-i) / (4^(p-i) p)"""
    def lhs(q):
        p, a, n = q.p, q.a, q.p - i
        top = binom_rational(q.ctx, a, n) * binom_rational(q.ctx, -1 - a, n)
        return top * binom_integer(2 * n, n, q.ctx) * F(1, 4 ** n * p)
    return lhs


def parametric(sid, kind, exponent, lhs, branches, floor=2, avoid=(), quote='', note='',
               pole_offset=None):
    checks = [avoiding(*avoid)] if avoid else []
    texts = [avoiding_text(*avoid)] if avoid else []
    if pole_offset is not None:
        checks.append(pole_free(pole_offset))
        texts.append(pole_free_text(pole_offset))
    return Statement(
        id=sid, kind=kind, exponent=exponent, lhs=lhs, branches=branches, floor=floor,
        parametric=True,
        admissible=all_of(*checks) if checks else None,
        admissible_text='; '.join(texts),
        quote=quote, note=note,
    )


def _shift_lemmas():
    def l21_lhs(q):
        a = q.a
        return (a + 2) ** 2 * q.S(a + 2) - (a + 1) ** 2 * q.S(a)

    yield parametric(
        'L2.1', Kind.LEMMA, 3, l21_lhs,
        (
            Branch('<a> < p-2', lambda q: q.r < q.p - 2,
                   lambda q: (1 / (q.a + 1) + 1 / (q.a + 2)) * q.app * q.p ** 3, exponent=4),
            Branch('<a> = p-2', lambda q: q.r == q.p - 2, lambda q: (q.a + 2) * q.p),
        ),
        floor=3, avoid=(-1,),
        quote="(a+2)^2 S_p(a+2) - (a+1)^2 S_p(a)",
    )

    def l22_rhs(q):
        t = q.sample.t
        return 1 - 2 * t * q.pq2 + (2 * t * t + t) * q.pq2 * q.pq2

    yield Statement(
        id='L2.2', kind=Kind.LEMMA, exponent=3,
        lhs=lambda q: q.S(q.p * q.sample.t),
        branches=single(l22_rhs),
        parametric=True, sampler=Sampler.T,
        quote="S_p(pt) = 1-2t(2^(p-1)-1)+(2t^2+t)(2^(p-1)-1)^2 mod p^3",
    )

    def l23_lhs(q):
        t, n = q.sample.t, q.sample.n
        return binom_rational(q.ctx, F(q.p - 1, 2) + q.p * t, n)

    def l23_rhs(q):
        p, t, n = q.p, q.sample.t, q.sample.n
        odd = [F(1, 2 * k - 1) for k in range(1, n + 1)]
        first = sum(odd, F(0))
        second = sum((x * x for x in odd), F(0))
        factor = 1 - 2 * p * t * first + 2 * p * p * t * (t * first * first - (t + 1) * second)
        return q.half_binom(n) * factor

    yield Statement(
        id='L2.3', kind=Kind.LEMMA, exponent=3,
        lhs=l23_lhs, branches=single(l23_rhs),
        parametric=True, sampler=Sampler.T_N,
        admissible=lambda q: 1 <= q.sample.n <= (q.p - 1) // 2,
        admissible_text='1 <= n <= (p-1)/2',
        quote="C((p-1)/2+pt, n) mod p^3",
    )


def _even(q):
    return q.r % 2 == 0


def _odd(q):
    return q.r % 2 == 1


def _closed_forms():
    yield parametric(
        'T2.1', Kind.THEOREM, 3, lambda q: q.S(q.a),
        (
            Branch('<a> even', _even, lambda q: q.even_closed(q.r // 2)),
            Branch('<a> odd', _odd,
                   lambda q: q.app * q.p ** 2 / (q.a ** 2 * q.half_binom((q.r - 1) // 2) ** 2)),
        ),
        avoid=(0, -1), quote="S_p(a) mod p^3",
    )

    def alt_even(q):
        n, a, ap = q.r // 2, q.a, q.ap
        ratio = (binom_rational(q.ctx, (a - 1) / 2, n) / binom_rational(q.ctx, a / 2, n)) ** 2
        return ratio * (1 - 2 * ap * q.pq2 + ap * (2 * ap + 1) * q.pq2 * q.pq2)

    def alt_odd(q):
        r = q.r
        c = binom_integer(r - 1, (r - 1) // 2, q.ctx)
        return 4 ** (r - 1) * q.app * q.p ** 2 / (q.a ** 2 * c * c)

    yield parametric(
        'T2.1.alt', Kind.THEOREM, 3, lambda q: q.S(q.a),
        (Branch('<a> even', _even, alt_even), Branch('<a> odd', _odd, alt_odd)),
        avoid=(0, -1), quote="S_p(a) via C((a-1)/2,n)^2/C(a/2,n)^2 and 4^(<a>-1)",
    )

    def t31_even(q):
        n = q.r // 2
        return (q.even_closed(n)
                + q.p ** 2 * q.app / (q.a * (q.a + 1)) / q.half_binom(n) ** 2)

    def t31_odd(q):
        n = (q.r + 1) // 2
        a = q.a
        return ((a + 1) / a * q.even_closed(n)
                + q.p ** 2 * q.app / (a + 1) ** 2 / q.half_binom(n) ** 2)

    yield parametric(
        'T3.1', Kind.THEOREM, 3, lambda q: q.reciprocal(q.a),
        (
            Branch('<a> even', _even, t31_even),
            Branch('<a> odd, < p-2', lambda q: _odd(q) and q.r != q.p - 2, t31_odd),
            Branch('<a> = p-2', lambda q: q.r == q.p - 2,
                   lambda q: q.S(q.a) + (q.a + 1) / q.a * q.S(q.a + 1)),
        ),
        avoid=(0, -1), quote="sum_{k<=p-2} F(a,k)/(k+1) mod p^3",
    )
    yield parametric(
        'T3.1.full', Kind.THEOREM, 3,
        lambda q: (general_sum(inv(1, 1))(q) + q.app / (q.a * (q.a + 1)) * q.p ** 2),
        single(lambda q: q.reciprocal(q.a)),
        avoid=(0, -1), quote="sum_{k<=p-1} F(a,k)/(k+1) + a'(a'+1)p^2/(a(a+1))",
    )
    yield parametric(
        'T3.1.reduction', Kind.THEOREM, 3, lambda q: q.reciprocal(q.a),
        single(lambda q: q.S(q.a) + (q.a + 1) / q.a * q.S(q.a + 1)),
        avoid=(0, -1), quote="S_p(a) + (a+1)/a S_p(a+1)",
    )


def _moment_theorems():
    def t41(q):
        a = q.a
        return (a * (a + 1) * q.S(a) - (a + 1) ** 2 * q.S(a + 1)
                + q.app / (a + 1) * q.p ** 3)

    yield parametric('T4.1', Kind.THEOREM, 4, general_sum(KPow(1)), single(t41),
                     avoid=(-1,), quote="sum k F(a,k) mod p^4")
    yield parametric(
        'T4.1.b', Kind.THEOREM, 3, general_sum(KPow(1)),
        single(lambda q: q.a * (q.a + 1) * (2 * q.S(q.a) - q.reciprocal(q.a))),
        avoid=(0, -1), quote="a(a+1)(2S_p(a) - sum F(a,k)/(k+1)) mod p^3",
    )

    def t51(q):
        a = q.a
        return (-(2 * a * a + 2 * a + 1) * q.S(a) - 2 * (a + 1) ** 2 * q.S(a + 1)
                - 2 * (2 * a + 1) * q.app / (a + 1) * q.p ** 3)

    yield parametric('T5.1', Kind.THEOREM, 4, general_sum(inv(2, -1)), single(t51),
                     avoid=(-1,), quote="sum F(a,k)/(2k-1) mod p^4")
    yield parametric(
        'Cor5.1', Kind.COROLLARY, 3, general_sum(inv(2, -1)),
        single(lambda q: -q.S(q.a) - 2 * q.a * (q.a + 1) * q.reciprocal(q.a)),
        avoid=(0, -1), quote="-S_p(a) - 2a(a+1) sum F(a,k)/(k+1) mod p^3",
    )

    yield parametric(
        'T6.1', Kind.THEOREM, 4,
        weighted_general(lambda a, k: 3 * k * k - (2 * a * a + 2 * a - 1) * k - a * (a + 1)),
        single(lambda q: -q.app * q.p ** 3),
        quote="sum F(a,k)(3k^2-(2a^2+2a-1)k-a(a+1)) = -a'(a'+1)p^3 mod p^4",
    )

    def t62(q):
        a = q.a
        b = a * (a + 1)
        return (F(2, 3) * b * b * q.S(a) - (2 * b - 1) / 3 * (a + 1) ** 2 * q.S(a + 1)
                + (2 * a * a + a - 2) * q.app / (3 * (a + 1)) * q.p ** 3)

    yield parametric('T6.2', Kind.THEOREM, 4, general_sum(KPow(2)), single(t62),
                     avoid=(0, -1), quote="sum k^2 F(a,k) mod p^4")

    def t71_coefficient(a, k):
        b = a * (a + 1)
        return 15 * k ** 3 - (4 * b * b - b + 1) * k - b * (2 * b - 1)

    yield parametric(
        'T7.1', Kind.THEOREM, 4, weighted_general(t71_coefficient),
        single(lambda q: (4 - 2 * q.a * (q.a + 1)) * q.app * q.p ** 3),
        quote="sum F(a,k)(15k^3-(4a^2(a+1)^2-a(a+1)+1)k-a(a+1)(2a(a+1)-1)) mod p^4",
        note="the cubic weight of the telescoping identity, without an extra k^3 factor",
    )

    def t72(q):
        a = q.a
        b = a * (a + 1)
        return (b * b * (2 * a + 1) ** 2 / 15 * q.S(a)
                - (a + 1) ** 2 * (4 * b * b - b + 1) / 15 * q.S(a + 1)
                + (4 * a ** 4 + 6 * a ** 3 - a * a + a + 5) / (15 * (a + 1)) * q.app * q.p ** 3)

    yield parametric('T7.2', Kind.THEOREM, 4, general_sum(KPow(3)), single(t72),
                     floor=5, avoid=(-1,), quote="sum k^3 F(a,k) mod p^4")


def _boundary_terms():
    yield parametric(
        'L3.2', Kind.LEMMA, 3, term_over_p(1),
        single(lambda q: -q.app / (q.a * (q.a + 1)) * q.p ** 2),
        avoid=(0, -1), quote="-a'(a'+1)p^2/(a(a+1)) mod p^3",
    )
    yield parametric(
        'L8.2', Kind.LEMMA, 3, term_over_p(2),
        single(lambda q: 2 * q.app / (3 * q.a * (q.a + 1) * (q.a - 1) * (q.a + 2)) * q.p ** 2),
        floor=3, avoid=(0, 1, -1, -2), quote="2a'(a'+1)p^2/(3a(a+1)(a-1)(a+2)) mod p^3",
    )

    def l112(q):
        a = q.a
        return -32 * q.app * q.p ** 2 / (15 * a * (a * a - 1) * (a * a - 4) * (a + 3))

    yield parametric(
        'L11.2', Kind.LEMMA, 3, term_over_p(3), single(l112),
        floor=5, avoid=(0, 1, -1, 2, -2, -3),
        quote="-32a'(a'+1)p^2/(15a(a^2-1)(a^2-4)(a+3)) mod p^3",
    )


def _reciprocal_weights():
    def t81(q):
        a = q.a
        return ((a * a + a - 3) / (3 * (a - 1) * (a + 2)) * q.S(a)
                + (a + 1) / (3 * a) * q.S(a + 1))

    def t81_alt(q):
        a = q.a
        return F(1, 3) * q.reciprocal(a) - q.S(a) / (3 * (a - 1) * (a + 2))

    yield parametric('T8.1', Kind.THEOREM, 3, general_sum(inv(1, 2), 'p-3'), single(t81),
                     floor=3, avoid=(0, 1, -1, -2), quote="sum_{k<=p-3} F(a,k)/(k+2) mod p^3")
    yield parametric('T8.1.alt', Kind.THEOREM, 3, general_sum(inv(1, 2), 'p-3'), single(t81_alt),
                     floor=3, avoid=(0, 1, -1, -2))

    def t91(q):
        a = q.a
        return (2 * q.S(a) + (2 * a * a + 2 * a - 1) / a ** 2 * q.S(a + 1)
                + (4 * a ** 3 + 6 * a * a - 3 * a + 2) / (a ** 3 * (a + 1) * (a + 2))
                * q.app * q.p ** 3)

    def t92(q):
        a = q.a
        b = a * (a + 1)
        return (2 - 1 / b) * q.reciprocal(a) + q.S(a) / b

    yield parametric('T9.1', Kind.THEOREM, 4, general_sum(inv(1, 1, 2), 'p-2'), single(t91),
                     floor=3, avoid=(0, -1, -2), quote="sum_{k<=p-2} F(a,k)/(k+1)^2 mod p^4")
    yield parametric('T9.2', Kind.THEOREM, 3, general_sum(inv(1, 1, 2), 'p-2'), single(t92),
                     floor=3, avoid=(0, -1, -2))

    def t101(q):
        a = q.a
        b = a * (a + 1)
        return (-2 / b + (2 * a + 1) ** 2 / b * q.S(a)
                + (4 * b * b - b + 1) / (a ** 3 * (a + 1)) * q.S(a + 1))

    def t101_alt(q):
        a = q.a
        b = a * (a + 1)
        return (-2 / b + (4 * b * b - b + 1) / (b * b) * q.reciprocal(a)
                + (2 * b - 1) / (b * b) * q.S(a))

    yield parametric('T10.1', Kind.THEOREM, 3, general_sum(inv(1, 1, 3), 'p-2'), single(t101),
                     floor=3, avoid=(0, -1, -2), quote="sum_{k<=p-2} F(a,k)/(k+1)^3 mod p^3")
    yield parametric('T10.1.alt', Kind.THEOREM, 3, general_sum(inv(1, 1, 3), 'p-2'),
                     single(t101_alt), floor=3, avoid=(0, -1, -2))

    def t111(q):
        a = q.a
        b = a * (a + 1)
        return ((3 * b - 10) / (15 * (a - 1) * (a + 2)) * q.S(a)
                + (a + 1) * (3 * b - 16) / (15 * a * (a - 2) * (a + 3)) * q.S(a + 1))

    def t111_alt(q):
        a = q.a
        b = a * (a + 1)
        return ((28 - 6 * b) / (15 * (a - 1) * (a * a - 4) * (a + 3)) * q.S(a)
                + (3 * b - 16) / (15 * (a - 2) * (a + 3)) * q.reciprocal(a))

    eleven = (0, 1, -1, 2, -2, -3)
    yield parametric('T11.1', Kind.THEOREM, 3, general_sum(inv(1, 3), 'p-4'), single(t111),
                     floor=5, avoid=eleven, quote="sum_{k<=p-4} F(a,k)/(k+3) mod p^3")
    yield parametric('T11.1.alt', Kind.THEOREM, 3, general_sum(inv(1, 3), 'p-4'),
                     single(t111_alt), floor=5, avoid=eleven)


def _shifted_weights():
    by_a = general_sum(shift=lambda a: inv(1, a))
    by_a_minus_one = general_sum(shift=lambda a: inv(1, a - 1))

    def t121(q):
        a = q.a
        return q.S(a) / (2 * a) + (a + 1) ** 2 / (2 * a ** 3) * q.S(a + 1)

    def t121_alt(q):
        a = q.a
        return (a + 1) / (2 * a * a) * q.reciprocal(a) - q.S(a) / (2 * a * a)

    def t122(q):
        a = q.a
        return (((a - 1) ** 2 + 1) / (2 * (a - 1) ** 3) * q.S(a)
                + (a + 1) ** 2 / (2 * a * a * (a - 1)) * q.S(a + 1))

    def t122_alt(q):
        a = q.a
        return ((a + 1) / (2 * a * (a - 1)) * q.reciprocal(a)
                - (a * a - 3 * a + 1) / (2 * a * (a - 1) ** 3) * q.S(a))

    three = (0, 1, -1)
    yield parametric('T12.1.i', Kind.THEOREM, 3, by_a, single(t121), avoid=three,
                     pole_offset=0, quote="sum F(a,k)/(k+a) mod p^3")
    yield parametric('T12.1.i.alt', Kind.THEOREM, 3, by_a, single(t121_alt), avoid=three,
                     pole_offset=0)
    yield parametric('T12.1.ii', Kind.THEOREM, 3, by_a_minus_one, single(t122), avoid=three,
                     pole_offset=1, quote="sum F(a,k)/(k+a-1) mod p^3")
    yield parametric('T12.1.ii.alt', Kind.THEOREM, 3, by_a_minus_one, single(t122_alt),
                     avoid=three, pole_offset=1)


def statements():
    yield from _shift_lemmas()
    yield from _closed_forms()
    yield from _moment_theorems()
    yield from _boundary_terms()
    yield from _reciprocal_weights()
    yield from _shifted_weights()
