# sums/oracle.py
"""Brute-force evaluation of sums over exact rationals."""
from fractions import Fraction
from math import comb

from padic.exceptions import OutOfRange

from .services import FAMILY_BINOMIALS, exact_weight
from .specs import Family, SumSpec, TermFamily


def rational_binomial(a, k: int) -> Fraction:
    """C(a, k) = a(a-1)...(a-k+1)/k! for rational a."""
    if k < 0:
        return Fraction(0)
    a = Fraction(a)
    result = Fraction(1)
    for j in range(k):
        result = result * (a - j) / (j + 1)
    return result


def exact_term(family: TermFamily, k: int) -> Fraction:
    if family.tag is Family.GENERAL_A:
        a = family.a
        return rational_binomial(a, k) * rational_binomial(-1 - a, k) * Fraction(comb(2 * k, k), 4 ** k)
    numerator = 1
    for n, r in FAMILY_BINOMIALS[family.tag]:
        numerator *= comb(n * k, r * k)
    return Fraction(numerator) / Fraction(family.m) ** k


def exact_oracle(spec: SumSpec, p: int) -> Fraction:
    """
    The sum as an exact rational, independent of the p-adic path.

    Args:
        spec: Sum description
        p: Prime fixing the range; keep it small since rationals grow fast
    """
    upper = spec.upper.resolve(p)
    if upper >= p:
        raise OutOfRange(f"Upper bound {upper} exceeds p-1")
    total = Fraction(0)
    for k in range(upper + 1):
        term = exact_term(spec.family, k)
        weight = exact_weight(spec.weight, k)
        if term:
            total += term * weight
    return total


def reflected_cube_sums(m: int, p: int):
    """
    Both sides of
        sum_{k=1}^{p-1} C(2k,k)^3 / (m^k (2k-1)^3)
            = (8/m) sum_{r=0}^{p-2} C(2r,r)^3 / (m^r (r+1)^3),
    which follows from C(2k,k)/(2k-1) = 2 C(2k-2,k-1)/k.
    """
    m = Fraction(m)
    lhs = sum((Fraction(comb(2 * k, k) ** 3) / (m ** k * (2 * k - 1) ** 3) for k in range(1, p)), Fraction(0))
    rhs = 8 / m * sum((Fraction(comb(2 * r, r) ** 3) / (m ** r * (r + 1) ** 3) for r in range(p - 1)), Fraction(0))
    return lhs, rhs
