from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies

from padic.exceptions import OutOfRange
from padic.services import a_prime, from_rational, make_context, reduce_mod

from .certificates import CERTIFICATES, Style
from .services import (
    Outcome,
    tail_value,
    verify_boundary,
    verify_sum_identity,
    verify_telescoping,
)

GRID = [Fraction(1, 5), Fraction(-1, 5), Fraction(2, 7), Fraction(-2, 7), Fraction(3), Fraction(-4, 3)]


class ExampleTestCase(SimpleTestCase):

    def test_shift_by_two_at_one(self):
        result = verify_sum_identity('SEC2', 1, 1)
        self.assertEqual(result.outcome, Outcome.PASS)
        self.assertEqual(result.lhs, 5)
        self.assertEqual(result.rhs, 5)

    def test_quadratic_weight_at_one(self):
        result = verify_sum_identity('L6.1', 1, 1)
        self.assertEqual(result.outcome, Outcome.PASS)
        self.assertEqual(result.lhs, -2)

    def test_zero_parameter_annihilates(self):
        self.assertEqual(verify_telescoping('L6.1', 0, 30).outcome, Outcome.PASS)
        result = verify_sum_identity('L7.1', 0, 3)
        self.assertEqual(result.outcome, Outcome.PASS)
        self.assertEqual(result.lhs, 0)

    def test_telescoping_example(self):
        self.assertTrue(verify_telescoping('L3.1', Fraction(1, 5), 30).passed)

    def test_boundaries(self):
        self.assertTrue(verify_boundary('L3.1', Fraction(2, 7)).passed)
        self.assertTrue(verify_boundary('L12.1', 3).passed)
        result = verify_boundary('L10.1', Fraction(1, 3))
        self.assertTrue(result.passed)
        self.assertEqual(result.rhs, Fraction(9, 2))

    def test_styles(self):
        r_style = {'L3.1', 'L4.1', 'L5.1', 'L8.1', 'L9.1', 'L12.1'}
        for cert_id, cert in CERTIFICATES.items():
            expected = Style.R_STYLE if cert_id in r_style else Style.G_STYLE
            self.assertEqual(cert.style, expected, cert_id)
        self.assertEqual(len(CERTIFICATES), 11)

    def test_unknown_and_excluded(self):
        with self.assertRaises(OutOfRange):
            verify_telescoping('L99', 1, 5)
        with self.assertRaises(OutOfRange):
            verify_sum_identity('L8.1', 1, 5)
        with self.assertRaises(OutOfRange):
            verify_boundary('L11.1', -3)

    def test_pole_is_reported(self):
        # n^2 + 2(a+1)^2 n + (a+1)^2 vanishes at n = 0 when a = -1
        result = verify_telescoping('L3.1', -1, 5)
        self.assertEqual(result.outcome, Outcome.POLE)
        self.assertEqual(result.k, 0)


class CertificateSuiteTestCase(SimpleTestCase):

    def test_sum_identity_grid(self):
        for cert_id, cert in CERTIFICATES.items():
            for a in GRID:
                if not cert.admissible(a):
                    continue
                for n in range(1, 26):
                    result = verify_sum_identity(cert, a, n)
                    self.assertNotEqual(result.outcome, Outcome.FAIL, f"{cert_id} a={a} n={n}")

    def test_boundary_grid(self):
        for cert_id, cert in CERTIFICATES.items():
            for a in GRID:
                if cert.admissible(a):
                    self.assertNotEqual(verify_boundary(cert, a).outcome, Outcome.FAIL, f"{cert_id} a={a}")

    @settings(max_examples=25, deadline=None)
    @given(strategies.builds(
        Fraction,
        strategies.integers(min_value=-12, max_value=12),
        strategies.integers(min_value=1, max_value=12),
    ))
    def test_random_telescoping(self, a):
        for cert_id, cert in CERTIFICATES.items():
            if not cert.admissible(a):
                continue
            result = verify_telescoping(cert, a, 30)
            self.assertNotEqual(result.outcome, Outcome.FAIL, f"{cert_id} a={a} k={result.k}")


class PAdicConsistencyTestCase(SimpleTestCase):

    def test_shift_one_tail_mod_p_cubed(self):
        p = 11
        ctx = make_context(p, 6)
        for a in (Fraction(2, 5), Fraction(-1, 3), Fraction(7), Fraction(3, 4)):
            ap = a_prime(ctx, a)
            expected = -ap * (ap + 1) / (a * (a + 1)) * p ** 2
            tail = tail_value('L3.1', a, p)
            self.assertEqual(reduce_mod(from_rational(ctx, tail), 3),
                             reduce_mod(from_rational(ctx, expected), 3), f"a={a}")
