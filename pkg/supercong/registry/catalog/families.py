# registry/catalog/families.py
"""
Congruences for the four central families at a fixed prime.

Each table row is (id, weight, upper, floor, coefficients of the represented
branch, coefficients of the complementary branch, quote).
"""
from fractions import Fraction as F

from sums.specs import KPow, cube, inv, mixed6k, sq3k, sq4k2k

from ..types import Branch, Kind, Statement
from .common import (
    as_printed,
    case,
    complement,
    legendre3,
    mod,
    signed_x_branch,
    summed,
    x_branch,
)

# sum C(2k,k)^3 w(k) / 64^k: p = x^2 + 4y^2, or b_form over C((p-1)/2, (p-3)/4)
CUBE_64 = (
    ('T2.2', inv(2, -1), 'p-1', 3, dict(cx=-2, cp=1, cq=F(1, 4)), (F(-1, 2), F(1, 2), F(-1, 4)),
     "-2x^2+p+p^2/4x^2 mod p^3"),
    ('T3.2', inv(1, 1), '(p-1)/2', 2, dict(cx=4, cp=-2), (-1, -1, F(-1, 2)),
     "4x^2-2p mod p^3"),
    ('T4.2', KPow(1), 'p-1', 3, dict(cx=-1, cp=F(1, 2), cq=F(1, 8)), (F(-1, 4), F(1, 4), F(-1, 8)),
     "-x^2+p/2+p^2/8x^2 mod p^3"),
    ('T5.2', inv(2, -1, 2), 'p-1', 2, dict(cx=2, cp=-1, cq=F(-1, 2)), (F(3, 2), F(-1, 2), F(3, 4)),
     "2x^2-p-p^2/2x^2 mod p^3"),
    ('T6.3', KPow(2), 'p-1', 3, dict(cx=F(1, 6), cp=F(-1, 12), cq=F(-1, 24)),
     (F(1, 8), F(-1, 24), F(1, 16)), "x^2/6-p/12-p^2/24x^2 mod p^3"),
    ('T7.3', KPow(3), 'p-1', 5, dict(cq=F(1, 160)), (F(-1, 40), 0, F(-1, 80)),
     "p^2/160x^2 mod p^3"),
    ('T8.2', inv(1, 2), '(p-1)/2', 3, dict(cx=F(52, 27), cp=F(-26, 27), cq=F(-1, 27)),
     (F(-1, 3), F(-13, 27), F(-1, 6)), "52/27 x^2-26/27 p-p^2/27x^2 mod p^3"),
    ('T9.3', inv(1, 1, 2), '(p-1)/2', 3, dict(cx=8, cp=-4, cq=1), (-6, -2, -3),
     "8x^2-4p+p^2/x^2 mod p^3"),
    ('T10.5', inv(2, -1, 3), 'p-1', 2, dict(cq=F(3, 4)), (-3, 0, F(-3, 2)),
     "3p^2/4x^2 mod p^3"),
    ('T11.2', inv(1, 3), '(p-1)/2', 5, dict(cx=F(172, 135), cp=F(-86, 135), cq=F(-118, 3375)),
     (F(-67, 375), F(-43, 135), F(-67, 750)), "172/135 x^2-86/135 p-118p^2/3375x^2 mod p^3"),
    ('T12.2', inv(2, -3), 'p-1', 3, dict(cx=F(-26, 27), cp=F(13, 27), cq=F(11, 108)),
     (F(-1, 6), F(13, 54), F(-1, 12)), "-26/27 x^2+13/27 p+11p^2/108x^2 mod p^3"),
)

# sum C(2k,k)^2 C(3k,k) w(k) / 108^k: p = x^2 + 3y^2, or q_form for p = 2 mod 3
SQ3K_108 = (
    ('T3.3', inv(1, 1), 'p-2', 3, dict(cx=4, cp=-2), (-2, F(-1, 2), 0),
     "4x^2-2p mod p^3"),
    ('T4.3', KPow(1), 'p-1', 3, dict(cx=F(-8, 9), cp=F(4, 9), cq=F(1, 9)), (F(-4, 9), F(1, 9), 0),
     "-8/9 x^2+4/9 p+p^2/9x^2 mod p^3"),
    ('T5.3', inv(2, -1), 'p-1', 3, dict(cx=F(-20, 9), cp=F(10, 9), cq=F(1, 4)),
     (F(-8, 9), F(5, 18), 0), "-20/9 x^2+10/9 p+p^2/4x^2 mod p^3"),
    ('T6.4', KPow(2), 'p-1', 3, dict(cx=F(32, 243), cp=F(-16, 243), cq=F(-17, 486)),
     (F(52, 243), F(-4, 243), 0), "32/243 x^2-16/243 p-17p^2/486x^2 mod p^3"),
    ('T7.4', KPow(3), 'p-1', 5, dict(cx=F(16, 10935), cp=F(-8, 10935), cq=F(113, 21870)),
     (F(-92, 2187), F(-2, 10935), 0), "(16x^2-8p+113p^2/2x^2)/10935 mod p^3"),
    ('T8.3', inv(1, 2), 'p-3', 5, dict(cx=F(29, 15), cp=F(-29, 30), cq=F(-3, 80)),
     (F(-2, 3), F(-29, 120), 0), "29/15 x^2-29/30 p-3p^2/80x^2 mod p^3"),
    ('T9.4', inv(1, 1, 2), 'p-2', 3, dict(cx=8, cp=-4, cq=F(9, 8)), (-13, -1, 0),
     "8x^2-4p+9p^2/8x^2 mod p^3"),
    ('T10.2', inv(1, 1, 3), 'p-2', 3, dict(c0=9, cx=-2, cp=1, cq=F(117, 16)), (F(-115, 2), F(1, 4), 9),
     "9-2x^2+p+117p^2/16x^2 mod p^3"),
    ('T11.3', inv(1, 3), 'p-4', 7, dict(cx=F(32, 25), cp=F(-16, 25), cq=F(-99, 2800)),
     (F(-5, 14), F(-4, 25), 0), "32/25 x^2-16/25 p-99p^2/2800x^2 mod p^3"),
)

# sum C(2k,k)^2 C(4k,2k) w(k) / 256^k: p = x^2 + 2y^2, or c0 + c*R_2(p) mod p^2
SQ4K2K_256 = (
    ('T3.4', inv(1, 1), 'p-2', 3, dict(cx=4, cp=-2), (0, F(-1, 3)),
     "4x^2-2p mod p^3 / -R_2(p)/3 mod p^2"),
    ('T4.4', KPow(1), 'p-1', 2, dict(cx=F(-3, 4), cp=F(3, 8), cq=F(3, 32)), (0, F(-1, 16)),
     "-3/4 x^2+3/8 p+3p^2/32x^2 mod p^3"),
    ('T5.4', inv(2, -1), 'p-1', 2, dict(cx=F(-5, 2), cp=F(5, 4), cq=F(1, 4)), (0, F(-1, 8)),
     "-5/2 x^2+5/4 p+p^2/4x^2 mod p^3"),
    ('T6.5', KPow(2), 'p-1', 3, dict(cx=F(3, 32), cp=F(-3, 64), cq=F(-7, 256)), (0, F(11, 384)),
     "3/32 x^2-3/64 p-7p^2/256x^2 mod p^3"),
    ('T7.5', KPow(3), 'p-1', 3, dict(cx=F(3, 1280), cp=F(-3, 2560), cq=F(41, 10240)),
     (0, F(-17, 3072)), "3x^2/1280-3p/2560+41p^2/10240x^2 mod p^3"),
    ('T8.4', inv(1, 2), 'p-3', 7, dict(cx=F(68, 35), cp=F(-34, 35), cq=F(-4, 105)), (0, F(-1, 9)),
     "17/35(4x^2-2p)-4p^2/105x^2 mod p^3"),
    ('T9.5', inv(1, 1, 2), 'p-2', 3, dict(cx=8, cp=-4, cq=F(4, 3)), (0, F(-22, 9)),
     "8x^2-4p+4p^2/3x^2 mod p^3"),
    ('T10.3', inv(1, 1, 3), 'p-2', 3, dict(c0=F(32, 3), cx=F(-16, 3), cp=F(8, 3), cq=F(88, 9)),
     (F(32, 3), F(-340, 27)), "32/3-16/3 x^2+8/3 p+88p^2/9x^2 mod p^3"),
    ('T11.4', inv(1, 3), 'p-4', 11, dict(cx=F(676, 525), cp=F(-338, 525), cq=F(-1864, 51975)),
     (0, F(-53, 891)), "676/525 x^2-338/525 p-1864p^2/51975x^2 mod p^3"),
)

# sum C(2k,k)C(3k,k)C(6k,3k) w(k) / 1728^k, all mod p^2:
# (c0, cx, cp) with c0 + (p/3)(cx x^2 + cp p), then the factors of T(10) and T(2)
MIXED_1728 = (
    ('T3.5', inv(1, 1), 'p-2', 3, (0, 4, -2), (F(-1, 5), -5), "(p/3)(4x^2-2p) mod p^2"),
    ('T4.5', KPow(1), 'p-1', 3, (0, F(-5, 9), F(5, 18)), (F(-1, 36), F(-25, 36)),
     "(p/3)(-5/9 x^2+5/18 p) mod p^2"),
    ('T5.5', inv(2, -1), 'p-1', 3, (0, F(-26, 9), F(13, 9)), (F(-1, 18), F(-25, 18)),
     "(p/3)(-26/9 x^2+13/9 p) mod p^2"),
    ('T6.6', KPow(2), 'p-1', 3, (0, F(25, 486), F(-25, 972)), (F(23, 1944), F(575, 1944)),
     "(p/3)(25/486 x^2-25/972 p) mod p^2"),
    ('T7.6', KPow(3), 'p-1', 5, (0, F(5, 2187), F(-5, 4374)), (F(-197, 87480), F(-985, 17496)),
     "(p/3)(5/2187 x^2-5/4374 p) mod p^2"),
    ('T8.5', inv(1, 2), 'p-3', 11, (0, F(452, 231), F(-226, 231)), (F(-1, 15), F(-5, 3)),
     "113/231 (p/3)(4x^2-2p) mod p^2"),
    ('T9.6', inv(1, 1, 2), 'p-2', 3, (0, 8, -4), (F(-46, 25), -46), "(p/3)(8x^2-4p) mod p^2"),
    ('T10.4', inv(1, 1, 3), 'p-2', 5, (F(72, 5), F(-64, 5), F(32, 5)), (F(-1576, 125), F(-1576, 5)),
     "72/5-16/5 (p/3)(4x^2-2p) mod p^2"),
    ('T11.5', inv(1, 3), 'p-4', 17, (0, F(100, 77), F(-50, 77)), (F(-197, 5525), F(-197, 221)),
     "25/77 (p/3)(4x^2-2p) mod p^2"),
)

# C((p-1)/2, (p+5)/12) = C((p-1)/2, [p/12]) (5p+1)/(p+5) for p = 7 mod 12, and
# (5p+1)^2/(p+5)^2 = (1 + 48p/5)/25 mod p^2 moves the constant from 2/5 to 10
SEVEN_MOD_12 = 10
PRINTED_SEVEN_MOD_12 = F(2, 5)
MIXED_NOTE = ("erratum: for p = 7 mod 12 the printed constant 2/5 drops the factor "
              "(5p+1)^2/(p+5)^2; the constant is 10")

# printed forms that fail, keyed by the id of the corrected row
PRINTED_SQ4K2K = {
    'T8.4': (dict(cx=F(68, 35), cp=F(-34, 35), cp2=F(-4, 105)),
             "17/35(4x^2-2p)-4/105 p^2 mod p^3",
             "erratum: 1/3 T3.4 + 16/105 EQ1.3 gives -4p^2/105x^2, not -4/105 p^2"),
}
PRINTED_MIXED = {
    'T7.6': ((F(-17, 6912), F(-425, 6912)),
             "erratum: for p = 3 mod 4 the sum is 197/2430 times that of T4.5, "
             "so the factors are -197/87480 and -985/17496, not -17/6912 and -425/6912"),
}

# looser floors quoted alongside the preview statements of the same congruences
PREVIEW_FLOORS = {
    'T3.2': 3, 'T5.2': 3,
    'T3.3': 7, 'T4.3': 7, 'T5.3': 7, 'T6.4': 7, 'T7.4': 7, 'T8.3': 7, 'T9.4': 7, 'T10.2': 7,
}


def _cube_statements():
    for sid, weight, upper, floor, xc, (c_ratio, c_inv, c_e), quote in CUBE_64:
        yield Statement(
            id=sid, kind=Kind.THEOREM, exponent=3,
            lhs=summed(cube(64), weight, upper),
            branches=(
                x_branch(4, **xc),
                Branch('p=3 mod 4', case(4, 3),
                       lambda q, c=(c_ratio, c_inv, c_e): q.b_form(*c)),
            ),
            floor=floor, quote=quote, preview_floor=PREVIEW_FLOORS.get(sid),
        )


def _sq3k_statements():
    for sid, weight, upper, floor, xc, (c_q, c_inv, c0), quote in SQ3K_108:
        yield Statement(
            id=sid, kind=Kind.THEOREM, exponent=3,
            lhs=summed(sq3k(108), weight, upper),
            branches=(
                x_branch(3, **xc),
                Branch('p=2 mod 3', complement(3),
                       lambda q, c=(c_q, c_inv, c0): q.q_form(*c)),
            ),
            floor=floor, quote=quote, preview_floor=PREVIEW_FLOORS.get(sid),
        )


def _sq4k2k_branches(xc, c0, c_r):
    return (
        x_branch(2, **xc),
        Branch('p=5,7 mod 8', complement(2),
               lambda q: c0 + c_r * q.R('R2'), exponent=2),
    )


def _sq4k2k_statements():
    for sid, weight, upper, floor, xc, (c0, c_r), quote in SQ4K2K_256:
        printed = PRINTED_SQ4K2K.get(sid)
        statement = Statement(
            id=sid, kind=Kind.THEOREM, exponent=3,
            lhs=summed(sq4k2k(256), weight, upper),
            branches=_sq4k2k_branches(xc, c0, c_r),
            floor=floor, quote=quote, note=printed[2] if printed else '',
        )
        yield statement
        if printed:
            printed_xc, printed_quote, note = printed
            yield as_printed(statement, _sq4k2k_branches(printed_xc, c0, c_r),
                             printed_quote, note)


def _mixed_branches(c0, cx, cp, c7, c11, seven):
    return (
        signed_x_branch(4, cx=cx, cp=cp, c0=c0),
        Branch('p=7 mod 12', case(12, 7), lambda q: c0 + c7 * q.T(seven)),
        Branch('p=11 mod 12', case(12, 11), lambda q: c0 + c11 * q.T(2)),
    )


def _mixed_statements():
    for sid, weight, upper, floor, (c0, cx, cp), (c7, c11), quote in MIXED_1728:
        printed_factors, factor_note = PRINTED_MIXED.get(sid, ((c7, c11), ''))
        note = '; '.join(n for n in (MIXED_NOTE, factor_note) if n)
        statement = Statement(
            id=sid, kind=Kind.THEOREM, exponent=2,
            lhs=summed(mixed6k(1728), weight, upper),
            branches=_mixed_branches(c0, cx, cp, c7, c11, SEVEN_MOD_12),
            floor=floor, quote=quote, note=note,
        )
        yield statement
        yield as_printed(
            statement,
            _mixed_branches(c0, cx, cp, *printed_factors, PRINTED_SEVEN_MOD_12),
            f"{quote}; p=7 mod 12 with constant 2/5", note,
        )


def _closed_form_sums():
    """The four sums of the introduction, mod p^3."""
    yield Statement(
        id='EQ1.1', kind=Kind.CITED, exponent=3,
        lhs=summed(cube(64)),
        branches=(
            x_branch(4, cx=4, cp=-2, cq=F(-1, 4)),
            Branch('p=3 mod 4', case(4, 3),
                   lambda q: F(-q.p * q.p, 4) / (q.B_alt * q.B_alt)),
        ),
        floor=3, quote="4x^2-2p-p^2/4x^2 / -p^2/4 C((p-3)/2,(p-3)/4)^-2 mod p^3",
    )
    yield Statement(
        id='EQ1.2', kind=Kind.CITED, exponent=3,
        lhs=summed(sq3k(108)),
        branches=(
            x_branch(3, cx=4, cp=-2, cq=F(-1, 4)),
            Branch('p=2 mod 3', complement(3), lambda q: q.q_form(c_inv=F(-1, 2))),
        ),
        floor=3, quote="-p^2/2 C((p-1)/2,(p-5)/6)^-2 mod p^3",
    )
    # C((p-1)/2, (p+3)/8) = C((p-1)/2, [p/8]) (3p+1)/(p+3) = C((p-1)/2, [p/8])/3 mod p
    # for p = 5 mod 8, and only the unit part of the binomial matters mod p^3
    eq13 = Statement(
        id='EQ1.3', kind=Kind.CITED, exponent=3,
        lhs=summed(sq4k2k(256)),
        branches=(
            x_branch(2, cx=4, cp=-2, cq=F(-1, 4)),
            Branch('p=5 mod 8', case(8, 5),
                   lambda q: F(-3 * q.p * q.p) / q.half_binom(q.p // 8) ** 2),
            Branch('p=7 mod 8', case(8, 7),
                   lambda q: F(-q.p * q.p, 3) / q.half_binom(q.p // 8) ** 2),
        ),
        floor=3, quote="-3p^2 (p=5 mod 8), -p^2/3 (p=7 mod 8) times C((p-1)/2,[p/8])^-2 mod p^3",
        note="erratum: for p = 5 mod 8 the printed -p^2/3 C((p-1)/2,[p/8])^-2 is off by a "
             "factor 9; it holds with (p+3)/8 in place of [p/8]",
    )
    yield eq13
    yield as_printed(
        eq13,
        (
            eq13.branches[0],
            Branch('p=5,7 mod 8', complement(2),
                   lambda q: F(-q.p * q.p, 3) / q.half_binom(q.p // 8) ** 2),
        ),
        "-p^2/3 C((p-1)/2,[p/8])^-2 mod p^3", eq13.note,
    )
    yield Statement(
        id='EQ1.4', kind=Kind.CITED, exponent=3,
        lhs=summed(mixed6k(1728), sign=legendre3),
        branches=(
            x_branch(4, cx=4, cp=-2, cq=F(-1, 4)),
            Branch('p=3 mod 4', case(4, 3),
                   lambda q: F(5 * q.p * q.p, 12) / (q.B_alt * q.B_alt)),
        ),
        floor=3, quote="5/12 p^2 C((p-3)/2,(p-3)/4)^-2 mod p^3",
    )
    yield Statement(
        id='Cor2.1', kind=Kind.COROLLARY, exponent=3,
        lhs=summed(mixed6k(1728)),
        branches=(
            Branch('p=7 mod 12', case(12, 7),
                   lambda q: -5 * q.p * q.p / q.half_binom(q.p // 12) ** 2),
            Branch('p=11 mod 12', case(12, 11),
                   lambda q: F(-q.p * q.p, 5) / q.half_binom(q.p // 12) ** 2),
        ),
        floor=3, condition=mod(4, 3), condition_text='p = 3 mod 4',
        quote="-5p^2/C((p-1)/2,[p/12])^2 / -p^2/(5C((p-1)/2,[p/12])^2) mod p^3",
    )


def statements():
    yield from _closed_form_sums()
    yield from _cube_statements()
    yield from _sq3k_statements()
    yield from _sq4k2k_statements()
    yield from _mixed_statements()
