# registry/catalog/cited.py
"""Known results the theorems build on, the auxiliary suites and cross-checks."""
from fractions import Fraction as F

from seqlib.services import binom_rational
from sums.services import evaluate, spec
from sums.specs import cube, inv, mixed6k, sq3k, sq4k2k

from ..types import Branch, Kind, Statement
from .common import (
    avoiding,
    avoiding_text,
    case,
    complement,
    form_condition,
    legendre3,
    mod,
    single,
    summed,
    x_branch,
)

# (id, family, sign, form)
MOD_P2_FAMILIES = (
    ('R-Beukers', cube(64), None, 4),
    ('R-RV.1', sq3k(108), None, 3),
    ('R-RV.2', sq4k2k(256), None, 2),
    ('R-RV.3', mixed6k(1728), legendre3, 4),
)

SUN_FAMILIES = (
    ('R-Sun.1', cube(64), None, 4),
    ('R-Sun.2', sq3k(108), None, 3),
    ('R-Sun.3', sq4k2k(256), None, 2),
    ('R-Sun.4', mixed6k(1728), legendre3, 4),
)

# name -> exponent of the classical congruences in the sequence suite
SUITE = {
    'L2.4.a': 2, 'L2.4.b': 1, 'L2.4.c': 2, 'L2.4.d': 1,
    'L3.3.a': 2, 'L3.3.b': 2, 'L3.3.c': 1, 'L3.3.d': 1,
    'EQ2.3': 2, 'EQ2.4': 1, 'WOLST': 2,
}


def _mod_p2():
    for sid, family, sign, d in MOD_P2_FAMILIES:
        yield Statement(
            id=sid, kind=Kind.CITED, exponent=2,
            lhs=summed(family, sign=sign),
            branches=(
                x_branch(d, cx=4, cp=-2),
                Branch('otherwise', complement(d), lambda q: 0),
            ),
            floor=3, quote="4x^2-2p or 0 mod p^2",
        )
    for sid, family, sign, d in SUN_FAMILIES:
        condition, text = form_condition(d)
        yield Statement(
            id=sid, kind=Kind.CITED, exponent=2,
            lhs=summed(family, inv(1, 1), sign=sign),
            branches=(x_branch(d, cx=4, cp=-2),),
            floor=3, condition=condition, condition_text=text,
            quote="sum w(k)/(k+1) = 4x^2-2p mod p^2",
        )


def _guo(q):
    p = q.p
    first = binom_rational(q.ctx, F(-2, 3), (2 * p - 1) // 3)
    second = binom_rational(q.ctx, F(-7, 6), (2 * p - 1) // 3)
    third = binom_rational(q.ctx, F(-5, 6), (p - 2) // 3)
    fourth = binom_rational(q.ctx, F(-4, 3), (p - 2) // 3)
    return 2 * p * first / (3 * second) + p * third / (3 * fourth)


def _tauraso_rest(q):
    p = q.p
    denominator = 2 ** (p - 1) * (1 + 2 * p + (3 - q.E / 2) * p * p)
    return 8 - 96 * q.B_alt * q.B_alt / denominator


def _higher():
    yield Statement(
        id='R-Guo', kind=Kind.CITED, exponent=3,
        lhs=summed(sq3k(108)), branches=single(_guo),
        floor=3, condition=mod(3, 2), condition_text='p = 2 mod 3',
        quote="2pC(-2/3,(2p-1)/3)/(3C(-7/6,(2p-1)/3)) + pC(-5/6,(p-2)/3)/(3C(-4/3,(p-2)/3))",
    )
    yield Statement(
        id='R-Tauraso', kind=Kind.CITED, exponent=3,
        lhs=summed(cube(64), inv(1, 1, 3), '(p-1)/2'),
        branches=(
            x_branch(4, c0=8, cq=6),
            Branch('p=3 mod 4', case(4, 3), _tauraso_rest),
        ),
        floor=3, quote="8+6p^2/x^2 / 8-96C((p-3)/2,(p-3)/4)^2/(2^(p-1)(1+2p+(3-E_{p-3}/2)p^2))",
    )
    yield Statement(
        id='R-S7', kind=Kind.CITED, exponent=2,
        lhs=lambda q: q.S(q.a), branches=single(lambda q: 0),
        parametric=True,
        admissible=lambda q: q.r % 2 == 1, admissible_text='<a>_p odd',
        quote="S_p(a) = 0 mod p^2 for odd <a>_p",
    )


def _suite():
    yield Statement(
        id='L2.5', kind=Kind.LEMMA, exponent=3,
        lhs=lambda q: q.S(F(1, 2)),
        branches=(
            x_branch(4, cq=F(-1, 4)),
            Branch('p=3 mod 4', case(4, 3), lambda q: q.b_form(c_ratio=1, c_e=F(1, 2))),
        ),
        floor=3, quote="S_p(1/2) mod p^3",
    )
    for name, exponent in SUITE.items():
        kind = Kind.LEMMA if name.startswith('L') else Kind.CITED
        yield Statement(
            id=name, kind=kind, exponent=exponent,
            lhs=lambda q, name=name: q.suite[name][0],
            branches=single(lambda q, name=name: q.suite[name][1]),
            floor=3, quote=f"harmonic and Fermat quotient congruence mod p^{exponent}",
        )


def _consistency():
    yield Statement(
        id='X-T3.2', kind=Kind.CONSISTENCY, exponent=3,
        lhs=summed(cube(64), inv(1, 1), '(p-1)/2'),
        branches=single(lambda q: evaluate(q.ctx, spec(cube(64))) - q.S(F(1, 2))),
        quote="half-range 1/(k+1) sum against S_p(-1/2) - S_p(1/2)",
    )
    yield Statement(
        id='X-EQ1.1-forms', kind=Kind.CONSISTENCY, exponent=3,
        lhs=lambda q: F(-q.p * q.p, 4) / (q.B_alt * q.B_alt),
        branches=single(lambda q: -q.p * q.p / (q.B * q.B)),
        floor=3, condition=mod(4, 3), condition_text='p = 3 mod 4',
        quote="-p^2/4 C((p-3)/2,(p-3)/4)^-2 = -p^2 C((p-1)/2,(p-3)/4)^-2",
    )

    def cor51_lhs(q):
        a = q.a
        return -(2 * a * a + 2 * a + 1) * q.S(a) - 2 * (a + 1) ** 2 * q.S(a + 1)

    yield Statement(
        id='X-Cor5.1', kind=Kind.CONSISTENCY, exponent=3,
        lhs=cor51_lhs,
        branches=single(lambda q: -q.S(q.a) - 2 * q.a * (q.a + 1) * q.reciprocal(q.a)),
        parametric=True,
        admissible=avoiding(0, -1), admissible_text=avoiding_text(0, -1),
        quote="the two closed forms for sum F(a,k)/(2k-1) agree mod p^3",
    )


def statements():
    yield from _mod_p2()
    yield from _higher()
    yield from _suite()
    yield from _consistency()
