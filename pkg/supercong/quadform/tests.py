from django.test import SimpleTestCase
from hypothesis import given, settings, strategies
from sympy import primerange
from sympy.ntheory import sqrt_mod

from padic.exceptions import NoRepresentation

from .services import exhaustive_search, is_represented, represent, represent_4p27
from .utils.sqrt import prime_mod_sqrt

PRIMES = list(primerange(3, 2000))


class SqrtTestCase(SimpleTestCase):

    @settings(max_examples=300, deadline=None)
    @given(strategies.sampled_from(PRIMES), strategies.integers(min_value=0, max_value=10 ** 6))
    def test_roots_square_back(self, p, a):
        roots = prime_mod_sqrt(a, p)
        for r in roots:
            self.assertEqual(r * r % p, a % p)
        expected = sqrt_mod(a % p, p, all_roots=True) or []
        self.assertEqual(sorted(set(roots)), sorted(set(expected)))

    def test_non_residue(self):
        self.assertEqual(prime_mod_sqrt(3, 7), [])


class RepresentTestCase(SimpleTestCase):

    def test_examples(self):
        rep = represent(13, 4)
        self.assertEqual((rep.x, rep.y), (3, 1))
        rep = represent(11, 2)
        self.assertEqual((rep.x, rep.y), (3, 1))
        with self.assertRaises(NoRepresentation):
            represent(7, 4)

    def test_4p27_examples(self):
        self.assertEqual((represent_4p27(7).x, represent_4p27(7).y), (1, 1))
        self.assertEqual((represent_4p27(13).x, represent_4p27(13).y), (5, 1))
        with self.assertRaises(NoRepresentation):
            represent_4p27(11)

    def test_exact_and_criterion(self):
        for p in primerange(3, 10 ** 4):
            for d in (2, 3, 4, 7):
                if is_represented(p, d):
                    rep = represent(p, d)
                    self.assertEqual(rep.x ** 2 + d * rep.y ** 2, p)
                    self.assertGreater(rep.x, 0)
                    self.assertGreater(rep.y, 0)
                else:
                    with self.assertRaises(NoRepresentation):
                        represent(p, d)
            if p % 3 == 1:
                rep = represent_4p27(p)
                self.assertEqual(rep.x ** 2 + 27 * rep.y ** 2, 4 * p)

    def test_criterion_matches_search(self):
        for p in PRIMES:
            for d in (2, 3, 4, 7):
                found = exhaustive_search(p, d)
                self.assertEqual(bool(found), is_represented(p, d), f"p={p} d={d}")
                if found:
                    self.assertEqual(len(found), 1)
                    rep = represent(p, d)
                    self.assertEqual(found[0], (rep.x, rep.y))
            if p > 7:
                found = exhaustive_search(p, 27, scale=4)
                self.assertEqual(bool(found), p % 3 == 1)
                if found:
                    self.assertEqual(len(found), 1)
