# sums/specs.py
"""Descriptions of the summands, weights and ranges of every sum."""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from padic.exceptions import OutOfRange


class Family(Enum):
    """Product of binomial coefficients in the k-th term"""
    GENERAL_A = 'general'
    CENTRAL_CUBE = 'central-cube'
    CENTRAL_SQ_3K = 'central-sq-3k'
    CENTRAL_SQ_4K2K = 'central-sq-4k2k'
    MIXED_6K = 'mixed-6k'


@dataclass(frozen=True)
class TermFamily:
    tag: Family
    m: int = 4
    a: Optional[Fraction] = None

    def __post_init__(self):
        if self.tag is Family.GENERAL_A:
            if self.a is None:
                raise OutOfRange("GeneralA family needs a parameter a")
            object.__setattr__(self, 'a', Fraction(self.a))
            object.__setattr__(self, 'm', 4)
        elif self.m == 0:
            raise OutOfRange("Power base m must be nonzero")

    def __str__(self):
        if self.tag is Family.GENERAL_A:
            return f"general(a={self.a})"
        return f"{self.tag.value}(m={self.m})"


def general(a) -> TermFamily:
    return TermFamily(Family.GENERAL_A, a=Fraction(a))


def cube(m: int) -> TermFamily:
    return TermFamily(Family.CENTRAL_CUBE, m=m)


def sq3k(m: int) -> TermFamily:
    return TermFamily(Family.CENTRAL_SQ_3K, m=m)


def sq4k2k(m: int) -> TermFamily:
    return TermFamily(Family.CENTRAL_SQ_4K2K, m=m)


def mixed6k(m: int) -> TermFamily:
    return TermFamily(Family.MIXED_6K, m=m)


@dataclass(frozen=True)
class KPow:
    """k^j"""
    j: int = 0

    def at(self, k: int) -> Fraction:
        return Fraction(k) ** self.j

    def __str__(self):
        return f"pow:{self.j}"


@dataclass(frozen=True)
class InvLinear:
    """1 / (alpha*k + beta)^j"""
    alpha: Fraction
    beta: Fraction
    j: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'alpha', Fraction(self.alpha))
        object.__setattr__(self, 'beta', Fraction(self.beta))

    def denominator(self, k: int) -> Fraction:
        return self.alpha * k + self.beta

    def __str__(self):
        return f"inv:{self.alpha},{self.beta},{self.j}"


Weight = Union[KPow, InvLinear]

ONE = KPow(0)


def inv(alpha, beta, j=1) -> InvLinear:
    return InvLinear(Fraction(alpha), Fraction(beta), j)


def parse_weight(text: str) -> Weight:
    """
    Parses "pow:J" or "inv:ALPHA,BETA,J" (e.g. "inv:2,-1,1" for 1/(2k-1)).
    """
    try:
        kind, _, body = text.partition(':')
        if kind == 'pow':
            return KPow(int(body or 0))
        if kind == 'inv':
            parts = body.split(',')
            j = int(parts[2]) if len(parts) > 2 else 1
            return InvLinear(Fraction(parts[0]), Fraction(parts[1]), j)
    except (ValueError, IndexError, ZeroDivisionError) as e:
        raise OutOfRange(f"Malformed weight {text!r}: {str(e)}")
    raise OutOfRange(f"Unknown weight kind in {text!r}")


class Upper(Enum):
    """Inclusive upper summation bound as a function of p"""
    P_MINUS_1 = 'p-1'
    P_MINUS_2 = 'p-2'
    P_MINUS_3 = 'p-3'
    P_MINUS_4 = 'p-4'
    HALF = '(p-1)/2'

    def resolve(self, p: int) -> int:
        if self is Upper.HALF:
            return (p - 1) // 2
        return p - int(self.value[2:])


@dataclass(frozen=True)
class SumSpec:
    family: TermFamily
    weight: Weight = ONE
    upper: Upper = Upper.P_MINUS_1

    def __str__(self):
        return f"sum_{{k<={self.upper.value}}} {self.family} * {self.weight}"
