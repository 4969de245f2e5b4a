# registry/catalog/common.py
"""Small builders shared by the catalog modules."""
from dataclasses import replace
from fractions import Fraction

from seqlib.services import legendre
from sums.services import spec
from sums.specs import ONE

from ..types import Branch, Kind, SumLhs

F = Fraction

ERRATUM_SUFFIX = '.as-printed'

# primes represented by each form, as p-predicates
FORM_CONDITIONS = {
    2: ((8, (1, 3)), 'p = 1, 3 mod 8'),
    3: ((3, (1,)), 'p = 1 mod 3'),
    4: ((4, (1,)), 'p = 1 mod 4'),
    7: ((7, (1, 2, 4)), 'p = 1, 2, 4 mod 7'),
    27: ((3, (1,)), 'p = 1 mod 3'),
}

FORM_NAMES = {
    2: 'p=x^2+2y^2',
    3: 'p=x^2+3y^2',
    4: 'p=x^2+4y^2',
    7: 'p=x^2+7y^2',
    27: '4p=x^2+27y^2',
}


def mod(m, *classes):
    return lambda p: p % m in classes


def case(m, *classes):
    return lambda q: q.p % m in classes


def form_case(d):
    (m, classes), _ = FORM_CONDITIONS[d]
    return case(m, *classes)


def complement(d):
    (m, classes), _ = FORM_CONDITIONS[d]
    return lambda q: q.p % m not in classes


def form_condition(d):
    (m, classes), text = FORM_CONDITIONS[d]
    return mod(m, *classes), text


def always(q):
    return True


def legendre3(p):
    return legendre(p, 3)


def quarter_sign(p):
    """(-1)^((p-1)/4) for p = 1 mod 4 and (-1)^((p-3)/4) for p = 3 mod 4"""
    return -1 if (p // 4) % 2 else 1


def summed(family, weight=ONE, upper='p-1', sign=None):
    return SumLhs(spec(family, weight, upper), sign)


def x_branch(d, exponent=None, **coeffs):
    return Branch(FORM_NAMES[d], form_case(d), lambda q: q.x_form(d, **coeffs), exponent)


def y_branch(d, exponent=None, **coeffs):
    return Branch(FORM_NAMES[d], form_case(d), lambda q: q.y_form(d, **coeffs), exponent)


def signed_x_branch(d, exponent=None, cx=0, cp=0, c0=0):
    """c0 + (p/3)(cx*x^2 + cp*p)"""
    return Branch(
        FORM_NAMES[d], form_case(d),
        lambda q: F(c0) + legendre3(q.p) * q.x_form(d, cx=cx, cp=cp), exponent,
    )


def single(rhs, exponent=None):
    return (Branch('all', always, rhs, exponent),)


def avoiding(*classes):
    """Admissibility a != c mod p for each listed c."""
    def admissible(q):
        return all(q.r != c % q.p for c in classes)
    return admissible


def avoiding_text(*classes):
    return 'a not = ' + ', '.join(str(c) for c in classes) + ' mod p'


def pole_free(offset):
    """
    Admissibility for weights 1/(k+a-offset): a - offset must not be an integer
    in [1-p, 0], where the pole at k = offset - a meets the vanishing factor
    C(-1-a, k) and the summand has no value.
    """
    def admissible(q):
        b = q.a - offset
        return not (b.denominator == 1 and 1 - q.p <= b <= 0)
    return admissible


def pole_free_text(offset):
    shifted = 'a' if not offset else f"a-{offset}"
    return f"{shifted} not an integer in [1-p, 0]"


def all_of(*predicates):
    return lambda q: all(check(q) for check in predicates)


def as_printed(statement, branches, quote, note):
    """The printed form of a corrected statement, kept under its own id to show it fails."""
    return replace(statement, id=statement.id + ERRATUM_SUFFIX, kind=Kind.ERRATUM,
                   branches=branches, quote=quote, note=note, preview_floor=None)
