from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies

from .exceptions import (
    BadPrecision,
    CompositeModulus,
    DivisionByZero,
    NegativeValuation,
    NotPAdicInteger,
    PrecisionExhausted,
)
from .services import (
    a_prime,
    add,
    default_precision,
    div,
    from_rational,
    from_residue,
    make_context,
    mul,
    neg,
    power,
    reduce_mod,
    residue_index,
    sub,
)

SMALL_PRIMES = [3, 5, 7, 11, 13, 17, 19, 23]

primes = strategies.sampled_from(SMALL_PRIMES)
rationals = strategies.fractions(max_denominator=400).filter(lambda q: abs(q) < 10 ** 6)


def p_integral(p):
    return rationals.filter(lambda q: q.denominator % p != 0)


class ContextTestCase(SimpleTestCase):

    def test_modulus(self):
        self.assertEqual(make_context(7, 3).modulus, 343)
        self.assertEqual(make_context(13, 1).modulus, 13)

    def test_composite_rejected(self):
        with self.assertRaises(CompositeModulus):
            make_context(4, 3)
        with self.assertRaises(CompositeModulus):
            make_context(2, 3)

    def test_bad_precision(self):
        with self.assertRaises(BadPrecision):
            make_context(7, 0)

    def test_composite_is_validation_error(self):
        from django.core.exceptions import ValidationError
        with self.assertRaises(ValidationError):
            make_context(9, 2)

    def test_default_precision(self):
        self.assertEqual(default_precision(3), 6)
        self.assertEqual(default_precision(4), 7)

    def test_inverse_table(self):
        ctx = make_context(11, 4)
        for k in range(1, 11):
            self.assertEqual(ctx.inverse(k) * k % ctx.modulus, 1)


class FromRationalTestCase(SimpleTestCase):

    def test_unit(self):
        ctx = make_context(7, 3)
        x = from_rational(ctx, Fraction(3, 4))
        self.assertEqual(x.v, 0)
        self.assertEqual(x.u, 3 * pow(4, -1, 343) % 343)
        self.assertEqual(x.prec, 3)

    def test_positive_valuation(self):
        ctx = make_context(7, 3)
        x = from_rational(ctx, Fraction(14, 3))
        self.assertEqual(x.v, 1)
        self.assertEqual(x.u, 2 * pow(3, -1, 343) % 343)

    def test_zero(self):
        ctx = make_context(7, 3)
        self.assertTrue(from_rational(ctx, 0).is_exact_zero)


class RingTestCase(SimpleTestCase):

    def setUp(self):
        self.ctx = make_context(5, 4)

    def test_mul_identity(self):
        x = mul(from_rational(self.ctx, Fraction(1, 2)), from_rational(self.ctx, 2))
        self.assertEqual(reduce_mod(x, 4), 1)
        self.assertEqual((x.v, x.u, x.prec), (0, 1, 4))

    def test_exact_cancellation(self):
        x = add(from_rational(self.ctx, Fraction(1, 5)), from_rational(self.ctx, Fraction(-1, 5)))
        self.assertTrue(x.is_exact_zero)
        self.assertIsNone(x.absolute_precision)

    def test_exact_cancellation_of_products(self):
        third = from_rational(self.ctx, Fraction(1, 3))
        x = sub(mul(third, from_rational(self.ctx, 6)), from_rational(self.ctx, 2))
        self.assertTrue(x.is_exact_zero)
        self.assertEqual(reduce_mod(x, 10), 0)

    def test_residue_cancellation_is_approximate(self):
        x = sub(from_residue(self.ctx, 3), from_rational(self.ctx, 3))
        self.assertTrue(x.zero)
        self.assertFalse(x.is_exact_zero)
        self.assertEqual(x.zero_prec, 4)

    def test_large_values_drop_exact_tracking(self):
        big = from_rational(self.ctx, Fraction(2 ** 200 + 1, 3))
        self.assertIsNone(big.exact)
        x = sub(big, from_rational(self.ctx, Fraction(2 ** 200 + 1, 3)))
        self.assertTrue(x.zero)
        self.assertFalse(x.is_exact_zero)

    def test_carry_consumes_precision(self):
        x = add(from_rational(self.ctx, 3), from_rational(self.ctx, 2))
        self.assertEqual((x.v, x.u, x.prec), (1, 1, 3))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            div(from_rational(self.ctx, 1), from_rational(self.ctx, 0))

    def test_division_by_cancelled_zero(self):
        z = sub(from_residue(self.ctx, 3), from_rational(self.ctx, 3))
        with self.assertRaises(PrecisionExhausted):
            div(from_rational(self.ctx, 1), z)

    def test_division_by_exactly_cancelled_zero(self):
        z = sub(from_rational(self.ctx, 3), from_rational(self.ctx, 3))
        with self.assertRaises(DivisionByZero):
            div(from_rational(self.ctx, 1), z)

    def test_exact_zero_keeps_precision(self):
        x = add(from_rational(self.ctx, 7), mul(from_rational(self.ctx, 0), from_rational(self.ctx, 3)))
        self.assertEqual(x.prec, 4)

    def test_operators(self):
        x = from_rational(self.ctx, Fraction(2, 3))
        y = (x + 1) * 3 - 5
        self.assertEqual(reduce_mod(y, 4), 0)
        self.assertEqual(reduce_mod(1 / (x * 3), 4), pow(2, -1, 625))
        self.assertEqual(reduce_mod(x ** -2 * Fraction(4, 9), 4), 1)

    def test_power_zero_exponent(self):
        self.assertEqual(reduce_mod(power(from_rational(self.ctx, 25), 0), 3), 1)


class ReduceModTestCase(SimpleTestCase):

    def test_negative_unit(self):
        ctx = make_context(7, 3)
        self.assertEqual(reduce_mod(from_rational(ctx, Fraction(-1, 8)), 3), 300)

    def test_valuation_above_exponent(self):
        ctx = make_context(5, 4)
        self.assertEqual(reduce_mod(from_rational(ctx, 25), 3), 25)
        self.assertEqual(reduce_mod(from_rational(ctx, 625), 3), 0)

    def test_negative_valuation(self):
        ctx = make_context(5, 4)
        with self.assertRaises(NegativeValuation):
            reduce_mod(from_rational(ctx, Fraction(1, 5)), 2)

    def test_precision_exhausted(self):
        ctx = make_context(5, 2)
        x = add(from_rational(ctx, 3), from_rational(ctx, 2))
        self.assertEqual(x.prec, 1)
        self.assertEqual(reduce_mod(x, 2), 5)
        with self.assertRaises(PrecisionExhausted):
            reduce_mod(x, 3)

    def test_cancelled_zero_precision(self):
        ctx = make_context(5, 3)
        third = reduce_mod(from_rational(ctx, Fraction(1, 3)), 3)
        z = sub(from_residue(ctx, third), from_rational(ctx, Fraction(1, 3)))
        self.assertEqual(reduce_mod(z, 3), 0)
        with self.assertRaises(PrecisionExhausted):
            reduce_mod(z, 4)

    def test_exact_zero_reduces_at_any_exponent(self):
        ctx = make_context(5, 3)
        z = sub(from_rational(ctx, Fraction(1, 3)), from_rational(ctx, Fraction(1, 3)))
        self.assertEqual(reduce_mod(z, 4), 0)


class ResidueIndexTestCase(SimpleTestCase):

    def test_examples(self):
        ctx = make_context(7, 3)
        self.assertEqual(residue_index(ctx, Fraction(-1, 2)), 3)
        self.assertEqual(residue_index(ctx, Fraction(2, 3)), 3)
        self.assertEqual(residue_index(ctx, 5), 5)

    def test_not_integral(self):
        with self.assertRaises(NotPAdicInteger):
            residue_index(make_context(7, 3), Fraction(1, 14))

    def test_a_prime(self):
        self.assertEqual(a_prime(make_context(7, 3), Fraction(1, 2)), Fraction(-1, 2))
        self.assertEqual(a_prime(make_context(7, 3), 5), 0)
        ap = a_prime(make_context(13, 3), Fraction(-1, 6))
        self.assertEqual(ap, Fraction(-1, 6))
        self.assertEqual(ap * (ap + 1), Fraction(-5, 36))


class PadicPropertyTestCase(SimpleTestCase):

    @settings(max_examples=200, deadline=None)
    @given(primes, strategies.integers(min_value=1, max_value=6), strategies.data())
    def test_round_trip(self, p, e, data):
        ctx = make_context(p, 6)
        q = data.draw(p_integral(p))
        assume(q != 0)
        residue = reduce_mod(from_rational(ctx, q), e)
        modulus = p ** e
        self.assertEqual((q.numerator - residue * q.denominator) % modulus, 0)

    @settings(max_examples=200, deadline=None)
    @given(primes, strategies.data())
    def test_ring_laws(self, p, data):
        ctx = make_context(p, 6)
        x, y, z = (from_rational(ctx, data.draw(p_integral(p))) for _ in range(3))
        left = mul(x, add(y, z))
        right = add(mul(x, y), mul(x, z))
        e = min(left.absolute_precision or 6, right.absolute_precision or 6, 4)
        if e >= 1:
            self.assertEqual(reduce_mod(left, e), reduce_mod(right, e))
        self.assertEqual(reduce_mod(mul(mul(x, y), z), 3), reduce_mod(mul(x, mul(y, z)), 3))

    @settings(max_examples=200, deadline=None)
    @given(primes, strategies.data())
    def test_sum_matches_rational(self, p, data):
        ctx = make_context(p, 6)
        q, r = data.draw(p_integral(p)), data.draw(p_integral(p))
        total = add(from_rational(ctx, q), from_rational(ctx, r))
        exact = from_rational(ctx, q + r)
        if exact.is_exact_zero:
            self.assertTrue(total.zero)
        elif total.zero:
            self.assertGreaterEqual(exact.v, total.zero_prec)
        else:
            self.assertEqual(total.v, exact.v)
            self.assertEqual(reduce_mod(total, 3), reduce_mod(exact, 3))

    @settings(max_examples=200, deadline=None)
    @given(primes, rationals, rationals)
    def test_valuation_additivity(self, p, q, r):
        assume(q != 0 and r != 0)
        ctx = make_context(p, 6)
        x, y = from_rational(ctx, q), from_rational(ctx, r)
        self.assertEqual(mul(x, y).v, x.v + y.v)
        self.assertEqual(div(x, y).v, x.v - y.v)

    @settings(max_examples=200, deadline=None)
    @given(primes, strategies.data())
    def test_a_prime_identity(self, p, data):
        ctx = make_context(p, 4)
        a = data.draw(p_integral(p))
        ap = a_prime(ctx, a)
        self.assertEqual(a, residue_index(ctx, a) + p * ap)
        self.assertNotEqual(ap.denominator % p, 0)

    @settings(max_examples=100, deadline=None)
    @given(primes, strategies.data())
    def test_inverse_of_units(self, p, data):
        ctx = make_context(p, 6)
        q = data.draw(p_integral(p))
        assume(q.numerator % p != 0)
        x = from_rational(ctx, q)
        self.assertEqual(reduce_mod(mul(x, div(from_rational(ctx, 1), x)), 6), 1)
        self.assertEqual(reduce_mod(add(x, neg(x)), 6), 0)


class FromResidueTestCase(SimpleTestCase):

    def test_absolute_precision(self):
        ctx = make_context(7, 3)
        x = from_residue(ctx, 49 * 3)
        self.assertEqual((x.v, x.prec), (2, 1))
        self.assertEqual(x.absolute_precision, 3)
        self.assertTrue(from_residue(ctx, 343).zero)
        with self.assertRaises(PrecisionExhausted):
            reduce_mod(from_residue(ctx, 0), 4)
