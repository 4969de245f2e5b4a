from fractions import Fraction
from math import comb

from django.test import SimpleTestCase
from hypothesis import given, strategies
from sympy import euler, primerange
from sympy.ntheory import legendre_symbol

from padic.exceptions import NotAUnit, OutOfRange
from padic.services import from_rational, make_context, reduce_mod

from .cache import SEQ_CACHE, SeqCache
from .services import (
    Aggregate,
    binom_integer,
    binom_rational,
    euler_mod_p,
    fermat_quotient,
    harmonic,
    legendre,
    r_aggregates,
    sequence_suites,
    u_mod_p,
)


def exact_harmonic(n, r=1):
    return sum((Fraction(1, k ** r) for k in range(1, n + 1)), Fraction(0))


class HarmonicTestCase(SimpleTestCase):

    def test_small_values(self):
        ctx = make_context(7, 4)
        self.assertEqual(reduce_mod(harmonic(ctx, 3), 4), reduce_mod(from_rational(ctx, Fraction(11, 6)), 4))
        self.assertEqual(reduce_mod(harmonic(ctx, 2, 2), 4), reduce_mod(from_rational(ctx, Fraction(5, 4)), 4))
        self.assertTrue(harmonic(ctx, 0).is_exact_zero)

    def test_out_of_range(self):
        with self.assertRaises(OutOfRange):
            harmonic(make_context(7, 3), 7)

    def test_against_exact(self):
        for p in (5, 11, 13):
            ctx = make_context(p, 5)
            for n in range(p):
                for r in (1, 2):
                    self.assertEqual(
                        reduce_mod(harmonic(ctx, n, r), 4),
                        reduce_mod(from_rational(ctx, exact_harmonic(n, r)), 4),
                    )


class FermatQuotientTestCase(SimpleTestCase):

    def test_values(self):
        self.assertEqual(reduce_mod(fermat_quotient(make_context(7, 3), 2), 3), 9)
        self.assertEqual(reduce_mod(fermat_quotient(make_context(5, 3), 2), 3), 3)

    def test_not_a_unit(self):
        with self.assertRaises(NotAUnit):
            fermat_quotient(make_context(5, 3), 5)

    def test_full_precision(self):
        ctx = make_context(11, 6)
        expected = (2 ** 10 - 1) // 11
        self.assertEqual(reduce_mod(fermat_quotient(ctx, 2), 6), expected % 11 ** 6)


class SequenceTestCase(SimpleTestCase):

    def test_euler_examples(self):
        ctx = make_context(101, 1)
        self.assertEqual(euler_mod_p(ctx, 1), 0)
        self.assertEqual(euler_mod_p(ctx, 2), 100)
        self.assertEqual(euler_mod_p(ctx, 4), 5)

    def test_u_examples(self):
        ctx = make_context(101, 1)
        self.assertEqual(u_mod_p(ctx, 1), 0)
        self.assertEqual(u_mod_p(ctx, 2), 99)
        self.assertEqual(u_mod_p(ctx, 4), 22)

    def test_euler_against_sympy(self):
        for p in (13, 29, 53):
            ctx = make_context(p, 1)
            for n in range(0, 2 * p, 2):
                self.assertEqual(euler_mod_p(ctx, n), int(euler(n)) % p)

    def test_cache_is_write_once(self):
        ctx = make_context(37, 1)
        first = euler_mod_p(ctx, 34)
        self.assertIn(('E', 37, 34), SEQ_CACHE)
        self.assertEqual(euler_mod_p(ctx, 34), first)

    def test_concurrent_fill_idempotent(self):
        from concurrent.futures import ThreadPoolExecutor
        cache = SeqCache()
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda i: cache.fill('k', lambda: i), range(32)))
        self.assertEqual(len(set(results)), 1)
        self.assertEqual(cache.get('k'), results[0])

    def test_cache_keeps_recent_primes(self):
        cache = SeqCache(max_primes=2)
        cache.put(('E', 5, 2), 1)
        cache.put(('E', 7, 2), 2)
        cache.put(('E', 5, 4), 3)
        cache.put(('E', 11, 2), 4)
        self.assertEqual(cache.primes(), [5, 11])
        self.assertNotIn(('E', 7, 2), cache)
        self.assertEqual(cache.get(('E', 5, 2)), 1)
        self.assertEqual(len(cache), 3)

    def test_evicted_key_is_recomputed(self):
        cache = SeqCache(max_primes=1)
        self.assertEqual(cache.fill(('B', 13, 2), lambda: 'first'), 'first')
        cache.fill(('B', 17, 2), lambda: 'other')
        self.assertEqual(cache.fill(('B', 13, 2), lambda: 'again'), 'again')
        self.assertEqual(cache.primes(), [13])

    def test_sweep_cache_is_bounded(self):
        SEQ_CACHE.clear()
        for p in primerange(5, 100):
            euler_mod_p(make_context(p, 1), p - 1)
        self.assertLessEqual(len(SEQ_CACHE.primes()), SEQ_CACHE.max_primes)
        self.assertIn(97, SEQ_CACHE.primes())


class LegendreTestCase(SimpleTestCase):

    def test_examples(self):
        self.assertEqual(legendre(3, 7), -1)
        self.assertEqual(legendre(2, 7), 1)
        self.assertEqual(legendre(14, 7), 0)

    @given(strategies.integers(min_value=-500, max_value=500), strategies.sampled_from(list(primerange(3, 200))))
    def test_against_sympy(self, a, p):
        expected = 0 if a % p == 0 else legendre_symbol(a % p, p)
        self.assertEqual(legendre(a, p), expected)


class BinomialTestCase(SimpleTestCase):

    def test_rational(self):
        ctx = make_context(7, 3)
        self.assertEqual(reduce_mod(binom_rational(ctx, Fraction(-1, 2), 1), 3),
                         reduce_mod(from_rational(ctx, Fraction(-1, 2)), 3))
        self.assertEqual(reduce_mod(binom_rational(ctx, Fraction(1, 2), 2), 3), 300)

    def test_minus_half_identity(self):
        for p in (5, 7, 13):
            ctx = make_context(p, 5)
            for k in range(p):
                expected = from_rational(ctx, Fraction(comb(2 * k, k), (-4) ** k))
                self.assertEqual(reduce_mod(binom_rational(ctx, Fraction(-1, 2), k), 5),
                                 reduce_mod(expected, 5))

    def test_product_identities(self):
        for p in (7, 11, 13):
            ctx = make_context(p, 6)
            for k in range(p):
                pairs = [
                    ((Fraction(-1, 3), Fraction(-2, 3)), Fraction(comb(2 * k, k) * comb(3 * k, k), 27 ** k)),
                    ((Fraction(-1, 4), Fraction(-3, 4)), Fraction(comb(2 * k, k) * comb(4 * k, 2 * k), 64 ** k)),
                    ((Fraction(-1, 6), Fraction(-5, 6)), Fraction(comb(3 * k, k) * comb(6 * k, 3 * k), 432 ** k)),
                ]
                for (a, b), value in pairs:
                    product = binom_rational(ctx, a, k) * binom_rational(ctx, b, k)
                    expected = from_rational(ctx, value)
                    self.assertEqual(product.v, expected.v)
                    self.assertEqual(product.u, expected.u)

    def test_out_of_range(self):
        with self.assertRaises(OutOfRange):
            binom_rational(make_context(7, 3), Fraction(1, 2), 7)
        with self.assertRaises(OutOfRange):
            binom_integer(3, 4, make_context(7, 3))

    def test_integer(self):
        ctx = make_context(5, 4)
        self.assertEqual(reduce_mod(binom_integer(4, 2, ctx), 4), 6)
        self.assertEqual(binom_integer(10, 5, ctx).v, 0)
        self.assertEqual(binom_integer(14, 7, make_context(7, 3)).v, 0)
        self.assertEqual(binom_integer(10, 5, make_context(7, 3)).v, 1)


class AggregateTestCase(SimpleTestCase):

    def test_r7(self):
        ctx = make_context(5, 6)
        self.assertEqual(reduce_mod(r_aggregates(ctx, Aggregate.R7), 6), 77)

    def test_r1_at_three(self):
        self.assertEqual(reduce_mod(r_aggregates(make_context(3, 6), 'R1'), 6), 4)

    def test_r2_at_five(self):
        ctx = make_context(5, 6)
        self.assertEqual(reduce_mod(r_aggregates(ctx, 'R2'), 6), (-29) % 5 ** 6)

    def test_r3_exact(self):
        p = 11
        ctx = make_context(p, 6)
        exact = (1 + 2 * p + Fraction(4, 3) * (2 ** (p - 1) - 1) - Fraction(3, 2) * (3 ** (p - 1) - 1)) \
            * comb(5, 1) ** 2
        self.assertEqual(reduce_mod(r_aggregates(ctx, 'R3'), 5), reduce_mod(from_rational(ctx, exact), 5))


class SuiteTestCase(SimpleTestCase):

    def test_suites_small_primes(self):
        for p in primerange(5, 120):
            verdicts = sequence_suites(make_context(p, 6))
            failed = [name for name, ok in verdicts.items() if not ok]
            self.assertEqual(failed, [], f"p={p}")
