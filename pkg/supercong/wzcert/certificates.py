# wzcert/certificates.py
"""
WZ pairs behind the finite-sum lemmas, as exact rational evaluators.

Two shapes occur:
    G-style: F(a,k) = G(a,k+1) - G(a,k), so sum_{k<n} F = G(a,n) - G(a,0)
    R-style: F(a,k) = F(a,k+1)R(a,k+1) - F(a,k)R(a,k), with R(a,0) = 0
"""
from enum import Enum
from fractions import Fraction
from math import comb

from sums.oracle import rational_binomial


class Style(Enum):
    G_STYLE = 'G'
    R_STYLE = 'R'


def central(n: int) -> Fraction:
    """C(2n, n) / 4^n"""
    return Fraction(comb(2 * n, n), 4 ** n)


def pair(a, n: int) -> Fraction:
    """C(a, n) C(-1-a, n)"""
    return rational_binomial(a, n) * rational_binomial(-1 - a, n)


def term(a, k: int) -> Fraction:
    return pair(a, k) * central(k)


def partial_sum(a, n: int) -> Fraction:
    """S_n(a)"""
    return sum((term(a, k) for k in range(n)), Fraction(0))


def weighted_sum(a, n: int, weight) -> Fraction:
    return sum((term(a, k) * weight(k) for k in range(n)), Fraction(0))


class Certificate:
    """
    Base class for certificates.

    Subclasses give F and either G or R, plus both sides of the finite-sum
    equation the pair proves.
    """
    id = None
    style = None
    excluded = ()

    def admissible(self, a) -> bool:
        return Fraction(a) not in self.excluded

    def F(self, a: Fraction, k: int) -> Fraction:
        raise NotImplementedError

    def relation(self, a: Fraction, k: int):
        """(left, right) of the defining relation at k"""
        raise NotImplementedError

    def boundary(self, a: Fraction):
        """(attained, expected) value at k = 0"""
        raise NotImplementedError

    def tail(self, a: Fraction, n: int) -> Fraction:
        raise NotImplementedError

    def sum_lhs(self, a: Fraction, n: int) -> Fraction:
        raise NotImplementedError

    def sum_rhs(self, a: Fraction, n: int) -> Fraction:
        raise NotImplementedError

    def __str__(self):
        return f"{self.id} ({self.style.value}-style)"


class GStyleCertificate(Certificate):
    style = Style.G_STYLE

    def G(self, a: Fraction, k: int) -> Fraction:
        raise NotImplementedError

    def boundary_constant(self, a: Fraction) -> Fraction:
        return Fraction(0)

    def relation(self, a, k):
        return self.F(a, k), self.G(a, k + 1) - self.G(a, k)

    def boundary(self, a):
        return self.G(a, 0), self.boundary_constant(a)

    def tail(self, a, n):
        return self.G(a, n)


class RStyleCertificate(Certificate):
    style = Style.R_STYLE

    def R(self, a: Fraction, k: int) -> Fraction:
        raise NotImplementedError

    def relation(self, a, k):
        return self.F(a, k), self.F(a, k + 1) * self.R(a, k + 1) - self.F(a, k) * self.R(a, k)

    def boundary(self, a):
        return self.R(a, 0), Fraction(0)

    def tail(self, a, n):
        return self.F(a, n) * self.R(a, n)


class ShiftByTwo(GStyleCertificate):
    """(a+2)^2 S_n(a+2) - (a+1)^2 S_n(a) = G(a,n)"""
    id = 'SEC2'

    def F(self, a, k):
        return (a + 2) ** 2 * term(a + 2, k) - (a + 1) ** 2 * term(a, k)

    def G(self, a, k):
        head = (a + 2) * (2 * a + 3) * k / (Fraction(4) ** (k - 1) * (a + 1 + k))
        return (head * rational_binomial(2 * k - 1, k - 1)
                * rational_binomial(a + 1, k - 1) * rational_binomial(-3 - a, k - 1))

    def sum_lhs(self, a, n):
        return (a + 2) ** 2 * partial_sum(a + 2, n) - (a + 1) ** 2 * partial_sum(a, n)

    def sum_rhs(self, a, n):
        return self.G(a, n)


class ReciprocalShiftOne(RStyleCertificate):
    """weight 1/(k+1)"""
    id = 'L3.1'
    excluded = (Fraction(0),)

    def F(self, a, n):
        return ((pair(a, n) * (Fraction(1, n + 1) - 1) - (a + 1) / a * pair(a + 1, n))
                * central(n))

    def R(self, a, n):
        return -2 * n ** 2 * (n + 1) / (n ** 2 + 2 * (a + 1) ** 2 * n + (a + 1) ** 2)

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: Fraction(1, k + 1))

    def sum_rhs(self, a, n):
        return partial_sum(a, n) + (a + 1) / a * partial_sum(a + 1, n) + self.tail(a, n)


class LinearWeight(RStyleCertificate):
    """weight k"""
    id = 'L4.1'

    def F(self, a, n):
        return (pair(a, n) * (n - a * (a + 1)) + (a + 1) ** 2 * pair(a + 1, n)) * central(n)

    def R(self, a, n):
        return 2 * n ** 3 / (n ** 2 - 2 * (a + 1) ** 2 * n - (a + 1) ** 2)

    def sum_lhs(self, a, n):
        return (weighted_sum(a, n, lambda k: k)
                - (a * (a + 1) * partial_sum(a, n) - (a + 1) ** 2 * partial_sum(a + 1, n)))

    def sum_rhs(self, a, n):
        return self.tail(a, n)


class ReciprocalOdd(RStyleCertificate):
    """weight 1/(2k-1)"""
    id = 'L5.1'

    def F(self, a, n):
        c = 2 * a ** 2 + 2 * a + 1
        return ((pair(a, n) * (Fraction(1, 2 * n - 1) + c) + 2 * (a + 1) ** 2 * pair(a + 1, n))
                * central(n))

    def R(self, a, n):
        return -2 * n ** 3 / (n ** 2 + 2 * (a + 1) ** 2 * n - (a + 1) ** 2)

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: Fraction(1, 2 * k - 1))

    def sum_rhs(self, a, n):
        return (-(2 * a ** 2 + 2 * a + 1) * partial_sum(a, n)
                - 2 * (a + 1) ** 2 * partial_sum(a + 1, n) + self.tail(a, n))


class QuadraticWeight(GStyleCertificate):
    id = 'L6.1'

    def F(self, a, k):
        return term(a, k) * (3 * k ** 2 - (2 * a ** 2 + 2 * a - 1) * k - a * (a + 1))

    def G(self, a, k):
        return 2 * k ** 3 * term(a, k)

    def sum_lhs(self, a, n):
        return sum((self.F(a, k) for k in range(n)), Fraction(0))

    def sum_rhs(self, a, n):
        return self.G(a, n)


class CubicWeight(GStyleCertificate):
    id = 'L7.1'

    def F(self, a, k):
        b = a * (a + 1)
        return term(a, k) * (15 * k ** 3 - (4 * b ** 2 - b + 1) * k - b * (2 * b - 1))

    def G(self, a, k):
        return 2 * k ** 3 * (3 * k + 2 * a * (a + 1) - 4) * term(a, k)

    def sum_lhs(self, a, n):
        return sum((self.F(a, k) for k in range(n)), Fraction(0))

    def sum_rhs(self, a, n):
        return self.G(a, n)


class ReciprocalShiftTwo(RStyleCertificate):
    """weight 1/(k+2) - 1/(3(k+1)) + 1/(3(a-1)(a+2))"""
    id = 'L8.1'
    excluded = (Fraction(1), Fraction(-2))

    @staticmethod
    def weight(a, k):
        return Fraction(1, k + 2) - Fraction(1, 3 * (k + 1)) + 1 / (3 * (a - 1) * (a + 2))

    def F(self, a, n):
        return term(a, n) * self.weight(a, n)

    def R(self, a, n):
        return -2 * n ** 2 * (n + 2) / (n ** 2 + (2 * a * (a + 1) - 1) * n + a * (a + 1))

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: self.weight(a, k))

    def sum_rhs(self, a, n):
        return self.tail(a, n)


class ReciprocalSquare(RStyleCertificate):
    """weight 1/(k+1)^2"""
    id = 'L9.1'
    excluded = (Fraction(0),)

    def F(self, a, n):
        c = (2 * a ** 2 + 2 * a - 1) / a ** 2
        return (pair(a, n) * (Fraction(1, (n + 1) ** 2) - 2) - c * pair(a + 1, n)) * central(n)

    def R(self, a, n):
        m = n + 1
        top = -2 * m ** 2 * ((2 * a - 1) * m ** 2 + (2 - 3 * a) * m + a - 1)
        bottom = ((2 * a - 1) * m ** 3 + (4 * a ** 3 + 6 * a ** 2 - a) * m ** 2
                  + a ** 2 * m - a ** 2 * (a + 2))
        return top / bottom

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: Fraction(1, (k + 1) ** 2))

    def sum_rhs(self, a, n):
        c = (2 * a ** 2 + 2 * a - 1) / a ** 2
        return 2 * partial_sum(a, n) + c * partial_sum(a + 1, n) + self.tail(a, n)


class ReciprocalCube(GStyleCertificate):
    """
    weight 1/(k+1)^3; written as G = F * R with the R of an R-style pair,
    whose value at k = 0 is 2/(a(a+1)) instead of 0.
    """
    id = 'L10.1'
    excluded = (Fraction(0), Fraction(-1))

    @staticmethod
    def coefficients(a):
        b = a * (a + 1)
        return (2 * a + 1) ** 2 / b, (4 * b ** 2 - b + 1) / (a ** 3 * (a + 1))

    def F(self, a, n):
        c1, c2 = self.coefficients(a)
        return (pair(a, n) * (Fraction(1, (n + 1) ** 3) - c1) - c2 * pair(a + 1, n)) * central(n)

    def R(self, a, n):
        m = n + 1
        top = -2 * m ** 3 * ((4 * a ** 2 - 2 * a + 1) * m ** 2
                             + (-6 * a ** 2 + 3 * a - 2) * m + 3 * a ** 2 - a + 1)
        bottom = ((4 * a ** 2 - 2 * a + 1) * m ** 4 + (8 * a ** 4 + 12 * a ** 3 + a) * m ** 3
                  + a ** 3 * m - a ** 3 * (a + 2))
        return top / bottom

    def G(self, a, k):
        return self.F(a, k) * self.R(a, k)

    def boundary_constant(self, a):
        return 2 / (a * (a + 1))

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: Fraction(1, (k + 1) ** 3))

    def sum_rhs(self, a, n):
        c1, c2 = self.coefficients(a)
        return (-2 / (a * (a + 1)) + c1 * partial_sum(a, n) + c2 * partial_sum(a + 1, n)
                + self.tail(a, n))


class ReciprocalShiftThree(GStyleCertificate):
    """weight 1/(k+3)"""
    id = 'L11.1'
    excluded = tuple(Fraction(x) for x in (0, 1, -1, 2, -2, -3))

    @staticmethod
    def coefficients(a):
        b = a * (a + 1)
        return ((3 * b - 10) / (15 * (a - 1) * (a + 2)),
                (a + 1) * (3 * b - 16) / (15 * a * (a - 2) * (a + 3)))

    def F(self, a, n):
        # C(a+1,n)C(-2-a,n) = (a+1+n)/(a+1-n) C(a,n)C(-1-a,n), kept in product form
        c1, c2 = self.coefficients(a)
        return term(a, n) * (Fraction(1, n + 3) - c1) - c2 * term(a + 1, n)

    @staticmethod
    def N(a, n):
        return ((3 * a ** 4 + 12 * a ** 3 - 13 * a ** 2 - 50 * a + 32) * n ** 2
                + (3 * a ** 4 + 12 * a ** 3 - 29 * a ** 2 - 82 * a + 96) * n + 64)

    def G(self, a, n):
        scale = 15 * a * (a ** 2 - 1) * (a ** 2 - 4) * (a + 3) * (n + 1) * (n + 2)
        return (2 * n ** 2 * self.N(a, n) / scale
                * rational_binomial(a + 1, n) * rational_binomial(-1 - a, n) * central(n))

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: Fraction(1, k + 3))

    def sum_rhs(self, a, n):
        c1, c2 = self.coefficients(a)
        return c1 * partial_sum(a, n) + c2 * partial_sum(a + 1, n) + self.G(a, n)


class ReciprocalShiftParameter(RStyleCertificate):
    """weight 1/(a-1+k)"""
    id = 'L12.1'
    excluded = (Fraction(0), Fraction(1))

    @staticmethod
    def coefficient(a):
        return ((a - 1) ** 2 + 1) / (2 * (a - 1) ** 3)

    def F(self, a, n):
        return ((pair(a, n) * (1 / (a - 1 + n) - self.coefficient(a))
                 - 1 / (2 * (a - 1)) * pair(a - 1, n)) * central(n))

    def R(self, a, n):
        return -2 * n ** 3 / (n ** 2 + (2 * a ** 2 - 2 * a + 1) * n + a * (a - 1))

    def sum_lhs(self, a, n):
        return weighted_sum(a, n, lambda k: 1 / (a - 1 + k))

    def sum_rhs(self, a, n):
        return (self.coefficient(a) * partial_sum(a, n)
                + partial_sum(a - 1, n) / (2 * (a - 1)) + self.tail(a, n))


CERTIFICATES = {
    cert.id: cert for cert in (
        ShiftByTwo(),
        ReciprocalShiftOne(),
        LinearWeight(),
        ReciprocalOdd(),
        QuadraticWeight(),
        CubicWeight(),
        ReciprocalShiftTwo(),
        ReciprocalSquare(),
        ReciprocalCube(),
        ReciprocalShiftThree(),
        ReciprocalShiftParameter(),
    )
}
