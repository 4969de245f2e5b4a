from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies
from sympy import primerange

from padic.exceptions import CompositeModulus, OutOfRange
from padic.services import make_context

from .catalog import build_catalog, resolve
from .catalog.conjectures import COUNTEREXAMPLES
from .quantities import Quantities
from .serializers import (
    RECORD_FIELDS,
    RunConfigSerializer,
    StatementSerializer,
    VerificationResultSerializer,
    parse_sample,
)
from .services import (
    check,
    check_parametric,
    check_range,
    default_samples,
    get_statement,
    resolve_ids,
)
from .types import Kind, Sample, Sampler, Status


class CatalogTestCase(SimpleTestCase):

    def test_inventory(self):
        entries = build_catalog()
        for sid in ('EQ1.1', 'T2.1', 'T2.2', 'Cor2.1', 'L2.5', 'T7.1', 'T12.2', 'C13.1.i.k2',
                    'C13.8.k1sq', 'RM3.1', 'R-Tauraso', 'R-Guo', 'WOLST', 'X-Cor5.1'):
            self.assertIn(sid, entries)
        self.assertEqual(entries['C13.1.i.k2'].kind, Kind.CONJECTURE)
        self.assertEqual(entries['R-Beukers'].kind, Kind.CITED)
        for sid in ('T8.4', 'T3.5', 'T7.6', 'T11.5', 'EQ1.3'):
            self.assertIs(entries[f"{sid}.as-printed"].kind, Kind.ERRATUM)
            self.assertIn('erratum', entries[sid].note)

    def test_errata_resolution(self):
        self.assertEqual(sorted(resolve(['T8.*'])),
                         ['T8.1', 'T8.1.alt', 'T8.2', 'T8.3', 'T8.4', 'T8.5'])
        self.assertEqual(resolve(['T8.4.as-printed']), ['T8.4.as-printed'])
        printed = resolve(['*.as-printed'])
        self.assertEqual(printed[0], 'EQ1.3.as-printed')
        self.assertIn('T8.4.as-printed', printed)
        self.assertTrue(all(sid.endswith('.as-printed') for sid in printed))
        self.assertIn('T8.4.as-printed', resolve(['T8.*'], include_errata=True))
        self.assertNotIn('EQ1.3.as-printed', resolve_ids([]))
        self.assertIn('EQ1.3.as-printed', resolve_ids([], include_errata=True))

    def test_prefix_and_glob(self):
        self.assertEqual(resolve(['C13.7.i']),
                         ['C13.7.i.k2', 'C13.7.i.k3', 'C13.7.i.k1sq', 'C13.7.i.k1cube'])
        self.assertEqual(resolve(['C13.5.ii']),
                         ['C13.5.ii.k2', 'C13.5.ii.k3', 'C13.5.ii.k2sq', 'C13.5.ii.k1cube'])
        self.assertIn('T8.2', resolve(['T*.2']))
        self.assertNotIn('T8.1', resolve(['T*.2']))
        with self.assertRaises(OutOfRange):
            resolve(['L99'])

    def test_exclude_conjectures(self):
        ids = resolve_ids(['C13.1*', 'T2.2'], include_conjectures=False)
        self.assertEqual(ids, ['T2.2'])

    def test_unknown_statement(self):
        with self.assertRaises(OutOfRange):
            get_statement('T99.9')

    def test_preview_floors(self):
        self.assertEqual(get_statement('T3.3').preview_floor, 7)
        self.assertEqual(get_statement('T3.3').effective_floor(strict=True), 7)
        self.assertEqual(get_statement('T3.3').effective_floor(), 3)

    def test_branches_are_total(self):
        # exactly one branch fires wherever a non-parametric statement applies
        for statement in build_catalog().values():
            if statement.parametric:
                continue
            for p in primerange(5, 80):
                if not statement.applies(p):
                    continue
                q = Quantities(make_context(p, 6))
                statement.branch_for(q)

    def test_parametric_branches_are_total(self):
        p = 13
        ctx = make_context(p, 6)
        for statement in build_catalog().values():
            if not statement.parametric or statement.sampler is not Sampler.A:
                continue
            for r in range(p):
                q = Quantities(ctx, Sample(a=Fraction(r)))
                if statement.is_admissible(q):
                    statement.branch_for(q)


class CheckTestCase(SimpleTestCase):

    def test_t22_at_13(self):
        result = check('T2.2', 13)
        self.assertEqual(result.status, Status.PASS)
        self.assertEqual(result.modulus, 2197)
        self.assertEqual((result.x, result.y), (3, 1))
        self.assertEqual(result.lhs_residue, result.rhs_residue)

    def test_below_floor(self):
        result = check('T8.4', 7)
        self.assertEqual(result.status, Status.NOT_APPLICABLE)
        self.assertIsNone(result.modulus)

    def test_condition(self):
        self.assertEqual(check('Cor2.1', 13).status, Status.NOT_APPLICABLE)
        self.assertEqual(check('Cor2.1', 11).status, Status.PASS)

    def test_complement_branch(self):
        result = check('T2.2', 11)
        self.assertEqual(result.status, Status.PASS)
        self.assertEqual(result.branch, 'p=3 mod 4')
        self.assertIsNone(result.x)

    def test_closed_form_sums(self):
        for sid in ('EQ1.1', 'EQ1.2', 'EQ1.3', 'EQ1.4'):
            for p in primerange(5, 50):
                result = check(sid, p)
                self.assertEqual(result.status, Status.PASS, f"{sid} at p={p}")

    def test_mixed_exponents(self):
        self.assertEqual(check('T3.4', 13).modulus, 13 ** 2)
        self.assertEqual(check('T3.4', 11).modulus, 11 ** 3)

    def test_precision_too_low(self):
        result = check('T2.2', 13, precision=2)
        self.assertEqual(result.status, Status.PRECISION_ERROR)

    def test_composite(self):
        with self.assertRaises(CompositeModulus):
            check('T2.2', 15)

    def test_parametric_needs_sample(self):
        with self.assertRaises(OutOfRange):
            check('T2.1', 13)

    def test_lemma_2_2(self):
        self.assertEqual(check('L2.2', 7, Sample(t=1)).status, Status.PASS)

    def test_lemma_2_3(self):
        result = check('L2.3', 11, Sample(t=2, n=3))
        self.assertEqual(result.status, Status.PASS)
        self.assertEqual(check('L2.3', 11, Sample(t=2, n=6)).status, Status.NOT_APPLICABLE)

    def test_t21_odd_residue(self):
        result = check('T2.1', 13, Sample(a=Fraction(1, 2)))
        self.assertEqual(result.status, Status.PASS)
        self.assertEqual(result.branch, '<a> odd')

    def test_t31_branches(self):
        samples = [Sample(a=Fraction(-1, 3)), Sample(a=Fraction(1, 2)), Sample(a=Fraction(9))]
        results = check_parametric('T3.1', 11, samples)
        self.assertEqual(len(results), 3)
        self.assertEqual([r.branch for r in results],
                         ['<a> odd, < p-2', '<a> even', '<a> = p-2'])
        for result in results:
            self.assertEqual(result.status, Status.PASS, str(result.sample))

    def test_inadmissible_sample(self):
        result = check('T2.1', 13, Sample(a=Fraction(-1)))
        self.assertEqual(result.status, Status.NOT_APPLICABLE)
        result = check('T2.1', 13, Sample(a=Fraction(1, 13)))
        self.assertEqual(result.status, Status.NOT_APPLICABLE)

    def test_lemma_2_1_edge(self):
        result = check('L2.1', 11, Sample(a=Fraction(9)))
        self.assertEqual(result.branch, '<a> = p-2')
        self.assertEqual(result.status, Status.PASS)

    def test_corrected_p_squared_term(self):
        for p in (11, 13, 17, 19, 23):
            self.assertEqual(check('T8.4', p).status, Status.PASS, f"p={p}")
        # x = 3 at both primes, so -4/105 p^2 and -4p^2/105x^2 differ mod p^3
        for p in (11, 17):
            self.assertEqual(check('T8.4.as-printed', p).status, Status.FAIL, f"p={p}")

    def test_seven_mod_12_constant(self):
        for p in (7, 19, 31):
            result = check('T3.5', p)
            self.assertEqual(result.branch, 'p=7 mod 12')
            self.assertEqual(result.status, Status.PASS, f"p={p}")
            self.assertEqual(check('T3.5.as-printed', p).status, Status.FAIL, f"p={p}")
        self.assertEqual(check('T3.5.as-printed', 13).status, Status.PASS)

    def test_t76_factors(self):
        for p in (7, 11, 19, 23):
            self.assertEqual(check('T7.6', p).status, Status.PASS, f"p={p}")
        for p in (11, 23):
            self.assertEqual(check('T7.6.as-printed', p).status, Status.FAIL, f"p={p}")

    def test_eq13_five_mod_8(self):
        for p in (5, 13, 29):
            result = check('EQ1.3', p)
            self.assertEqual(result.branch, 'p=5 mod 8')
            self.assertEqual(result.status, Status.PASS, f"p={p}")
            self.assertEqual(check('EQ1.3.as-printed', p).status, Status.FAIL, f"p={p}")
        self.assertEqual(check('EQ1.3.as-printed', 7).status, Status.PASS)

    def test_counterexamples_fail(self):
        for p in (13, 17):
            self.assertEqual(check('C13.5.i.k1cube', p).status, Status.FAIL, f"p={p}")
        for p in (11, 17):
            self.assertEqual(check('C13.6.ii.k1cube', p).status, Status.FAIL, f"p={p}")
        self.assertEqual(check('C13.5.i.k1sq', 13).status, Status.PASS)

    def test_negative_integer_pole(self):
        # 1/(k+a) meets the vanishing C(-1-a, k) at k = -a
        for sid in ('T12.1.i', 'T12.1.i.alt'):
            self.assertEqual(check(sid, 13, Sample(a=Fraction(-5))).status, Status.NOT_APPLICABLE)
            self.assertEqual(check(sid, 13, Sample(a=Fraction(1, 3))).status, Status.PASS)
        for sid in ('T12.1.ii', 'T12.1.ii.alt'):
            self.assertEqual(check(sid, 13, Sample(a=Fraction(-4))).status, Status.NOT_APPLICABLE)
            self.assertEqual(check(sid, 13, Sample(a=Fraction(3))).status, Status.PASS)

    def test_lemma_7_1_weight(self):
        for a in (Fraction(1, 3), Fraction(-2, 5), Fraction(4)):
            self.assertEqual(check('T7.1', 13, Sample(a=a)).status, Status.PASS)


class SampleTestCase(SimpleTestCase):

    def test_deterministic(self):
        first = default_samples('T2.1', 13, seed=7, per_parity=5)
        second = default_samples('T2.1', 13, seed=7, per_parity=5)
        self.assertEqual(first, second)
        self.assertNotEqual(first, default_samples('T2.1', 13, seed=8, per_parity=5))

    def test_parity_classes(self):
        samples = default_samples('T3.1', 13, seed=1, per_parity=4)
        ctx = make_context(13, 6)
        parities = [Quantities(ctx, s).r % 2 for s in samples]
        self.assertGreaterEqual(parities.count(0), 4)
        self.assertGreaterEqual(parities.count(1), 4)
        self.assertIn(Sample(a=Fraction(11)), samples)

    def test_t_samplers(self):
        self.assertEqual(default_samples('L2.2', 11), [Sample(t=1), Sample(t=2), Sample(t=3)])
        samples = default_samples('L2.3', 11)
        self.assertIn(Sample(t=3, n=5), samples)
        self.assertTrue(all(1 <= s.n <= 5 for s in samples))

    def test_parse(self):
        self.assertEqual(parse_sample('-1/3'), Sample(a=Fraction(-1, 3)))
        self.assertEqual(parse_sample('t=2,n=3'), Sample(t=2, n=3))
        with self.assertRaises(ValueError):
            parse_sample('k=2')


class SweepTestCase(SimpleTestCase):

    def test_fixed_prime_statements(self):
        ids = [sid for sid, s in build_catalog().items()
               if not s.parametric and s.kind not in (Kind.CONJECTURE, Kind.ERRATUM)]
        for result in check_range(ids, [11, 13, 17, 19], threads=1):
            self.assertFalse(result.counts_against, f"{result.statement_id} at p={result.p}")

    def test_conjectures_small(self):
        failed = set()
        for result in check_range(['C13*', 'RM3.1'], [13, 17, 19, 29], threads=1):
            if result.status is Status.FAIL:
                failed.add(result.statement_id)
        self.assertEqual(failed, set(COUNTEREXAMPLES))

    def test_parametric_statements(self):
        ids = [sid for sid, s in build_catalog().items() if s.parametric]
        for result in check_range(ids, [11, 13], threads=1, seed=3, per_parity=3):
            self.assertFalse(result.counts_against,
                             f"{result.statement_id} at p={result.p}, {result.sample}")

    def test_order(self):
        results = list(check_range(['T2.2', 'T3.2'], [5, 7, 11], threads=1))
        self.assertEqual([(r.statement_id, r.p) for r in results],
                         [('T2.2', 5), ('T2.2', 7), ('T2.2', 11),
                          ('T3.2', 5), ('T3.2', 7), ('T3.2', 11)])

    def test_strict_floors(self):
        results = list(check_range(['T3.3'], [5, 7, 13], threads=1, strict_floors=True))
        self.assertEqual([r.status for r in results],
                         [Status.NOT_APPLICABLE, Status.NOT_APPLICABLE, Status.PASS])

    @settings(max_examples=30, deadline=None)
    @given(strategies.sampled_from(list(primerange(5, 40))),
           strategies.integers(min_value=-12, max_value=12),
           strategies.integers(min_value=1, max_value=12))
    def test_odd_residue_vanishes(self, p, num, den):
        a = Fraction(num, den)
        assume(a.denominator % p != 0)
        q = Quantities(make_context(p, 6), Sample(a=a))
        assume(q.r % 2 == 1)
        self.assertEqual(check('R-S7', p, Sample(a=a)).status, Status.PASS)


class SerializerTestCase(SimpleTestCase):

    def test_record(self):
        record = VerificationResultSerializer(check('T2.2', 13)).data
        self.assertEqual(list(record), RECORD_FIELDS)
        self.assertEqual(record['modulus'], '2197')
        self.assertEqual(record['status'], 'Pass')
        self.assertEqual(record['x'], '3')
        self.assertIsNone(record['a'])

    def test_record_without_timings(self):
        record = VerificationResultSerializer(check('T2.2', 13), timings=False).data
        self.assertIsNone(record['elapsed_ms'])

    def test_run_config(self):
        serializer = RunConfigSerializer(data={'primes': '5..499', 'ids': ['T*'],
                                               'samples': '1/2;-3'})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data['primes'], (5, 499))
        self.assertEqual(serializer.validated_data['format'], 'table')
        self.assertEqual(len(serializer.validated_data['samples']), 2)

    def test_run_config_errors(self):
        self.assertFalse(RunConfigSerializer(data={'primes': '50..5'}).is_valid())
        self.assertFalse(RunConfigSerializer(data={'primes': 'x'}).is_valid())
        self.assertFalse(RunConfigSerializer(data={'primes': '5..9', 'format': 'xml'}).is_valid())
        self.assertFalse(RunConfigSerializer(data={'primes': '5..9', 'threads': 0}).is_valid())

    def test_statement(self):
        data = StatementSerializer(get_statement('T3.4')).data
        self.assertEqual(data['exponents'], [2, 3])
        self.assertEqual(data['kind'], 'theorem')
