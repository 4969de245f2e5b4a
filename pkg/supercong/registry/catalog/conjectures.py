# registry/catalog/conjectures.py
"""
Open congruences, checked as experiments.

Sub-sums are named by their weight: k2 = 1/(k+2), k3 = 1/(k+3),
k1sq = 1/(k+1)^2, k2sq = 1/(k+2)^2, k3sq = 1/(k+3)^2, k1cube = 1/(k+1)^3.
"""
from fractions import Fraction as F

from seqlib.services import half_sign
from sums.specs import cube, inv, mixed6k, sq3k, sq4k2k

from ..types import Branch, Kind, Statement
from .common import (
    FORM_CONDITIONS,
    FORM_NAMES,
    always,
    case,
    complement,
    form_condition,
    legendre3,
    mod,
    quarter_sign,
    summed,
    x_branch,
    y_branch,
)

WEIGHTS = {
    'k2': inv(1, 2),
    'k3': inv(1, 3),
    'k1sq': inv(1, 1, 2),
    'k2sq': inv(1, 2, 2),
    'k3sq': inv(1, 3, 2),
    'k1cube': inv(1, 1, 3),
}

# Half-range sums of C(2k,k)^3 / m^k, each split into the form class (i, mod p^3)
# and its complement (ii, mod p^2).
# part i entries: sub -> (form variable, c1, cp, cq, c0, c0 times the sign)
# part ii entries: sub -> (coefficient of R, cp, c0, c0 times the sign)
CUBE_HALF = {
    'C13.1': dict(
        m=1, floor=7, d=7, aggregate='R7', sign=None,
        i={
            'k2': ('y', F(-466, 27), F(29, 27), F(17, 864)),
            'k3': ('y', F(-36052, 3375), F(2378, 3375), F(1421, 108000)),
            'k1sq': ('y', -68, 1, F(-1, 4)),
            'k2sq': ('y', F(-287, 27), F(119, 216), F(7, 864)),
            'k3sq': ('y', F(-68722, 16875), F(33079, 135000), F(4987, 1080000)),
            'k1cube': ('y', F(-201, 2), F(-9, 4), F(-39, 32), F(1, 8)),
        },
        ii={
            'k2': (F(1, 24), F(-1, 9)),
            'k3': (F(1, 120), F(-11, 225)),
            'k2sq': (F(7, 72), F(-7, 72)),
            'k3sq': (F(37, 3600), F(-307, 9000)),
            'k1cube': (24, 18, F(1, 8)),
        },
    ),
    'C13.2': dict(
        m=16, floor=5, d=3, aggregate='R3', sign=None,
        i={
            'k2': ('x', F(64, 27), F(-4, 3), F(-1, 9)),
            'k3': ('x', F(5056, 3375), F(-302, 375), F(-97, 1125)),
            'k1sq': ('y', -24, 2, F(-1, 2)),
            'k2sq': ('y', F(-40, 9), F(14, 27), F(-1, 54)),
            'k3sq': ('y', F(-9656, 5625), F(3958, 16875), F(169, 33750)),
            'k1cube': ('y', -24, 0, F(-5, 2), 2),
        },
        ii={
            'k2': (F(-4, 27), F(-4, 27)),
            'k3': (F(-4, 135), F(-38, 675)),
            'k2sq': (F(-16, 27), F(-2, 9)),
            'k3sq': (F(-56, 675), F(-58, 1125)),
            'k1cube': (-32, -4, 2),
        },
    ),
    'C13.3': dict(
        m=-8, floor=5, d=4, aggregate='R1', sign=None,
        i={
            'k2': ('x', F(64, 27), F(-35, 27), F(-4, 27)),
            'k3': ('x', F(202, 135), F(-538, 675), F(-611, 6750)),
            'k1sq': ('y', -32, 1, F(-7, 16)),
            'k2sq': ('y', F(-152, 27), F(16, 27), F(7, 216)),
            'k3sq': ('y', F(-1504, 675), F(811, 3375), F(1927, 270000)),
            'k1cube': ('y', -48, 0, F(-33, 16), -1),
        },
        ii={
            'k2': (0, F(1, 9)),
            'k3': (F(1, 250), F(11, 225)),
            'k2sq': (F(-1, 18), F(1, 9)),
            'k3sq': (F(47, 5625), F(43, 1125)),
            'k1cube': (12, 6, -1),
        },
    ),
    'C13.4': dict(
        m=-64, floor=5, d=2, aggregate='R2', sign=half_sign,
        i={
            'k2': ('x', 2, F(-8, 9), F(-2, 9)),
            'k3': ('x', F(198, 125), F(-1036, 1125), F(-52, 1125)),
            'k1sq': ('y', -8, 0, -1),
            'k2sq': ('y', F(-40, 9), F(32, 27), F(1, 3)),
            'k3sq': ('y', F(56, 5625), F(-1312, 16875), F(-81, 625)),
            'k1cube': ('y', -32, 8, -4, 0, -8),
        },
        ii={
            'k2': (F(7, 54), F(1, 9)),
            'k3': (F(-19, 270), F(-29, 225)),
            'k2sq': (F(19, 27), F(2, 27)),
            'k3sq': (F(-233, 675), F(-254, 3375)),
            'k1cube': (-12, 0, 0, -8),
        },
    ),
    'C13.5': dict(
        m=-512, floor=5, d=4, aggregate='R1', sign=quarter_sign,
        i={
            'k2': ('x', F(-152, 27), F(190, 27), F(-22, 27)),
            'k3': ('x', F(4504, 135), F(-23074, 675), F(9104, 3375)),
            'k1sq': ('y', 64, -8, -1),
            'k2sq': ('y', F(-6464, 27), F(664, 27), F(65, 27)),
            'k1cube': ('y', -192, 72, -3, 0, -64),
        },
        ii={
            'k2': (F(28, 3), F(38, 9)),
            'k3': (F(-14348, 375), F(-3938, 225)),
            'k2sq': (F(424, 9), F(-16, 3)),
            'k1cube': (-96, 24, 0, -64),
        },
    ),
    'C13.6': dict(
        m=256, floor=5, d=3, aggregate='R3', sign=half_sign,
        i={
            'k2': ('x', F(-8, 27), F(10, 9), F(2, 9)),
            'k3': ('x', F(-12344, 3375), F(4354, 1125), F(728, 1125)),
            'k1sq': ('y', -48, 8, 0),
            'k2sq': ('y', -48, F(200, 27), 0),
            'k1cube': ('y', 96, -24, -2, 0, 32),
        },
        ii={
            'k2': (F(176, 27), F(26, 27)),
            'k3': (F(1808, 135), F(1378, 675)),
            'k2sq': (32, F(-16, 27)),
            'k3sq': (F(13856, 225), F(-1184, 675)),
            'k1cube': (128, 8, 0, 32),
        },
    ),
    'C13.7': dict(
        m=4096, floor=7, d=7, aggregate='R7', sign=half_sign,
        i={
            'k2': ('y', F(52616, 27), F(-34, 27), F(-20, 27)),
            'k3': ('y', F(217125848, 3375), F(-250882, 3375), F(-83972, 3375)),
            'k1sq': ('y', -1136, 64, 2),
            'k1cube': ('y', 6432, -648, -6, 0, 512),
        },
        ii={
            'k2': (-1216, F(-11266, 9)),
            'k3': (F(-199232, 5), F(-1845802, 45)),
            'k1cube': (-1536, -1944, 0, 512),
        },
    ),
}

# Printed rows that fail at every admissible prime in 5..103. For 13.5(i) the residues at
# p = 13 and 17 fit -64(-1)^((p-1)/4) - 384y^2 mod p rather than the printed -192y^2.
COUNTEREXAMPLES = {
    'C13.5.i.k1cube': "fails as printed; mod p the y^2 coefficient fits -384, not -192",
    'C13.6.ii.k1cube': "fails as printed at every admissible prime checked",
}

# Full-range sums with 4p = x^2 + 27y^2 (or p = x^2 + 3y^2) in one class and
# W = (2p+1)C([2p/3],[p/3])^2 (or R_3) in the other.
# entries: sub -> (upper, (c1, cp, cq, c0), (cW, cp, c0) or None)
SQ3K_192 = {
    'k2': ('p-3', (F(2, 5), F(-7, 15), F(-23, 20), 0), (-1, F(-1, 3), 0)),
    'k3': ('p-4', (F(99, 200), F(-103, 75), F(141, 700), 0), (F(13, 14), F(23, 60), 0)),
    'k1cube': ('p-2', (F(51, 8), -9, F(147, 4), -16), (F(115, 2), F(-15, 4), -16)),
    'k1sq': ('p-2', (F(1, 4), -2, F(19, 2), 0), None),
}

SQ4K2K_144 = {
    'k2': ('p-3', (F(-32, 5), F(16, 15), F(19, 315), 0), (F(-4, 21), 0, 0)),
    'k3': ('p-4', (F(-3584, 825), F(1682, 2475), F(431, 17325), 0), (F(4, 63), F(2, 45), 0)),
    'k1cube': ('p-2', (F(-376, 9), F(56, 9), F(-211, 54), -6), (F(1360, 27), F(20, 27), -6)),
    'k1sq': ('p-2', (F(-40, 3), F(2, 3), F(-13, 18), 0), None),
}


def _signed(sign, c0, c0s):
    if not c0s:
        return lambda p: F(c0)
    return lambda p: F(c0) + c0s * sign(p)


def _outside(d):
    (m, classes), _ = FORM_CONDITIONS[d]
    return lambda p: p % m not in classes


def _form_rhs(d, entry, sign):
    var, c1, cp, cq, *rest = entry
    c0, c0s = (list(rest) + [0, 0])[:2]
    constant = _signed(sign, c0, c0s)
    if var == 'x':
        return lambda q: q.x_form(d, cx=c1, cp=cp, cq=cq, c0=constant(q.p))
    return lambda q: q.y_form(d, cy=c1, cp=cp, cq=cq, c0=constant(q.p))


def _aggregate_rhs(aggregate, entry, sign):
    c_r, cp, *rest = entry
    c0, c0s = (list(rest) + [0, 0])[:2]
    constant = _signed(sign, c0, c0s)
    return lambda q: c_r * q.R(aggregate) + (constant(q.p) + F(cp) * q.p)


def _cube_half():
    for cid, row in CUBE_HALF.items():
        family, d, sign = cube(row['m']), row['d'], row['sign']
        in_form, form_text = form_condition(d)
        outside = _outside(d)
        for sub, entry in row['i'].items():
            yield Statement(
                id=f"{cid}.i.{sub}", kind=Kind.CONJECTURE, exponent=3,
                lhs=summed(family, WEIGHTS[sub], '(p-1)/2', sign),
                branches=(Branch(FORM_NAMES[d], always, _form_rhs(d, entry, sign)),),
                floor=row['floor'], condition=in_form, condition_text=form_text,
                quote=f"{family} * {WEIGHTS[sub]} over k <= (p-1)/2 mod p^3",
                note=COUNTEREXAMPLES.get(f"{cid}.i.{sub}", ''),
            )
        for sub, entry in row['ii'].items():
            yield Statement(
                id=f"{cid}.ii.{sub}", kind=Kind.CONJECTURE, exponent=2,
                lhs=summed(family, WEIGHTS[sub], '(p-1)/2', sign),
                branches=(Branch(f"outside {FORM_NAMES[d]}", always,
                                 _aggregate_rhs(row['aggregate'], entry, sign)),),
                floor=row['floor'], condition=outside,
                condition_text=f"not ({form_text})",
                quote=f"{family} * {WEIGHTS[sub]} via {row['aggregate']}(p) mod p^2",
                note=COUNTEREXAMPLES.get(f"{cid}.ii.{sub}", ''),
            )


def _full_range(cid, family, floor, d, table, other, y_forms):
    for sub, (upper, (c1, cp, cq, c0), second) in table.items():
        if y_forms:
            first = y_branch(d, cy=c1, cp=cp, cq=cq, c0=c0)
        else:
            first = x_branch(d, cx=c1, cp=cp, cq=cq, c0=c0)
        branches = [first]
        condition, text = None, ''
        if second is None:
            condition, text = mod(3, 1), 'p = 1 mod 3'
        else:
            branches.append(Branch('p=2 mod 3', complement(3), other(*second), exponent=2))
        yield Statement(
            id=f"{cid}.{sub}", kind=Kind.CONJECTURE, exponent=3,
            lhs=summed(family, WEIGHTS[sub], upper),
            branches=tuple(branches), floor=floor,
            condition=condition, condition_text=text,
            quote=f"{family} * {WEIGHTS[sub]} over k <= {upper}",
        )


def _w_rhs(c_w, cp, c0):
    return lambda q: c_w * q.W + (F(c0) + F(cp) * q.p)


def _r3_rhs(c_r, cp, c0):
    return lambda q: c_r * q.R('R3') + (F(c0) + F(cp) * q.p)


def statements():
    yield from _cube_half()
    yield from _full_range('C13.8', sq3k(-192), 7, 27, SQ3K_192, _w_rhs, y_forms=False)
    yield from _full_range('C13.9', sq4k2k(-144), 11, 3, SQ4K2K_144, _r3_rhs, y_forms=True)
    yield Statement(
        id='RM3.1', kind=Kind.CONJECTURE, exponent=3,
        lhs=summed(mixed6k(1728), inv(1, 1), 'p-2', legendre3),
        branches=(
            x_branch(4, cx=4, cp=-2),
            Branch('p=3 mod 4', case(4, 3), lambda q: F(3, 5) * q.R('R1'), exponent=2),
        ),
        floor=5, quote="(p/3) sum_{k<=p-2} C(2k,k)C(3k,k)C(6k,3k)/(1728^k(k+1))",
    )
