import json
import os
import tempfile
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies

from registry.serializers import RECORD_FIELDS
from registry.services import check
from registry.types import Status, VerificationResult

from .services import EXIT_FAILURE, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, run_exit_code


def run(*args, **options):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err, **options)
    return out.getvalue()


def records(output):
    return [json.loads(line) for line in output.splitlines() if line.strip()]


class VerifyCommandTestCase(SimpleTestCase):

    def assertExit(self, code, *args, **options):
        with self.assertRaises(CommandError) as raised:
            run(*args, **options)
        self.assertEqual(raised.exception.returncode, code)

    def test_not_applicable_below_floor(self):
        output = run('verify', '--ids', 'T8.4', '--primes', '7..7', '--format', 'json-lines')
        rows = records(output)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['status'], 'NotApplicable')
        self.assertEqual(rows[0]['p'], '7')

    def test_json_lines_record(self):
        output = run('verify', '--ids', 'T2.2', '--primes', '13', '--format', 'json-lines',
                     '--no-timings')
        [row] = records(output)
        self.assertEqual(list(row), RECORD_FIELDS)
        self.assertEqual(row['status'], 'Pass')
        self.assertEqual(row['modulus'], '2197')
        self.assertEqual(row['lhs'], row['rhs'])
        self.assertEqual((row['x'], row['y']), ('3', '1'))
        self.assertIsNone(row['elapsed_ms'])

    def test_forms_27(self):
        rows = records(run('verify', '--ids', 'C13.8.k2', '--primes', '5..31',
                           '--format', 'json-lines'))
        for row in rows:
            if row['status'] == 'Pass' and row['x'] is not None:
                x, y, p = int(row['x']), int(row['y']), int(row['p'])
                self.assertEqual(x * x + 27 * y * y, 4 * p)

    def test_csv(self):
        output = run('verify', '--ids', 'T2.2', 'T3.2', '--primes', '5..13', '--format', 'csv')
        lines = output.splitlines()
        self.assertEqual(lines[0], ','.join(RECORD_FIELDS))
        self.assertEqual(len(lines), 1 + 2 * 4)

    def test_table(self):
        output = run('verify', '--ids', 'T2.2', '--primes', '5..13')
        self.assertTrue(output.startswith('id'))
        self.assertIn('Pass', output)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'report.jsonl')
            run('verify', '--ids', 'EQ1.1', '--primes', '5..19', '--format', 'json-lines',
                '--out', path)
            with open(path) as stream:
                rows = records(stream.read())
        self.assertEqual([row['p'] for row in rows], ['5', '7', '11', '13', '17', '19'])

    def test_same_report_for_any_worker_count(self):
        args = ('verify', '--ids', 'T2.2,T3.5', '--primes', '5..40', '--format', 'json-lines',
                '--no-timings')
        self.assertEqual(run(*args, '--threads', '1'), run(*args, '--threads', '2'))

    def test_parametric_samples(self):
        rows = records(run('verify', '--ids', 'T2.1', '--primes', '13', '--samples', '1/2;-1/3',
                           '--format', 'json-lines'))
        self.assertEqual([row['a'] for row in rows], ['1/2', '-1/3'])
        self.assertTrue(all(row['status'] == 'Pass' for row in rows))

    def test_exclude_conjectures(self):
        output = run('verify', '--ids', 'C13.9*', 'EQ1.3', '--primes', '11',
                     '--exclude-conjectures', '--format', 'json-lines')
        self.assertEqual([row['id'] for row in records(output)], ['EQ1.3'])

    def test_errata_need_opt_in(self):
        args = ('verify', '--ids', 'EQ1.3*', '--primes', '7', '--format', 'json-lines')
        self.assertEqual([row['id'] for row in records(run(*args))], ['EQ1.3'])
        rows = records(run(*args, '--include-errata'))
        self.assertEqual([row['id'] for row in rows], ['EQ1.3', 'EQ1.3.as-printed'])
        self.assertExit(EXIT_FAILURE, 'verify', '--ids', 'T8.4.as-printed', '--primes', '11')

    def test_usage_errors(self):
        self.assertExit(EXIT_USAGE, 'verify', '--ids', 'L99', '--primes', '5..7')
        self.assertExit(EXIT_USAGE, 'verify', '--primes', '50..5')
        self.assertExit(EXIT_USAGE, 'verify', '--primes', '8..10')
        self.assertExit(EXIT_USAGE, 'verify', '--primes', '5..7', '--samples', 'k=1')

    def test_precision_error_exit(self):
        self.assertExit(EXIT_INTERNAL, 'verify', '--ids', 'T2.2', '--primes', '13',
                        '--precision', '2')

    def test_fail_exit_and_fail_fast(self):
        fixtures = [
            VerificationResult('T2.2', 5, Status.PASS),
            VerificationResult('T2.2', 7, Status.FAIL),
            VerificationResult('T2.2', 11, Status.NOT_APPLICABLE),
        ]
        with mock.patch('cli.management.commands.verify.check_range',
                        return_value=iter(fixtures)):
            self.assertExit(EXIT_FAILURE, 'verify', '--ids', 'T2.2', '--primes', '5..11')
        out = StringIO()
        with mock.patch('cli.management.commands.verify.check_range',
                        return_value=iter(fixtures)):
            with self.assertRaises(CommandError):
                call_command('verify', '--ids', 'T2.2', '--primes', '5..11', '--fail-fast',
                             '--format', 'json-lines', stdout=out, stderr=StringIO())
        self.assertEqual([row['p'] for row in records(out.getvalue())], ['5', '7'])

    @settings(max_examples=50, deadline=None)
    @given(strategies.lists(strategies.sampled_from(list(Status))))
    def test_exit_code_contract(self, statuses):
        code = run_exit_code(statuses)
        if Status.FAIL in statuses:
            self.assertEqual(code, EXIT_FAILURE)
        elif Status.PRECISION_ERROR in statuses:
            self.assertEqual(code, EXIT_INTERNAL)
        else:
            self.assertEqual(code, EXIT_OK)


class SumCommandTestCase(SimpleTestCase):

    def test_theorem_lhs(self):
        output = run('sum', '--family', 'central-cube', '--m', '64', '--weight', 'inv:2,-1,1',
                     '--upper', 'p-1', '--prime', '13', '--mod-exp', '3')
        expected = check('T2.2', 13).lhs_residue
        self.assertIn(f"residue: {expected} (mod 13^3)", output)

    def test_oracle(self):
        output = run('sum', '--family', 'general', '--a=-1/2', '--weight', 'pow:0',
                     '--prime', '5', '--mod-exp', '3', '--oracle')
        self.assertIn('oracle: match', output)
        self.assertIn('residue:', output)

    def test_trivial_parameter(self):
        output = run('sum', '--family', 'general', '--a', '0', '--prime', '7')
        self.assertIn('residue: 1 (mod 7^3)', output)

    def test_negative_parameter(self):
        output = run('sum', '--family', 'general', '--a=-3', '--weight', 'inv:1,5,1',
                     '--prime', '11', '--oracle')
        self.assertIn('oracle: match', output)
        with self.assertRaises(CommandError) as raised:
            run('sum', '--family', 'general', '--a=-3', '--weight', 'inv:1,-3,1', '--prime', '11')
        self.assertEqual(raised.exception.returncode, EXIT_INTERNAL)

    def test_errors(self):
        with self.assertRaises(CommandError) as raised:
            run('sum', '--family', 'central-cube', '--m', '64', '--prime', '53', '--oracle')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)
        with self.assertRaises(CommandError) as raised:
            run('sum', '--family', 'central-cube', '--m', '64', '--prime', '9')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)
        with self.assertRaises(CommandError) as raised:
            run('sum', '--family', 'general', '--prime', '7')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)
        with self.assertRaises(CommandError) as raised:
            run('sum', '--family', 'central-cube', '--m', '64', '--weight', 'inv:1,-1,1',
                '--prime', '7')
        self.assertEqual(raised.exception.returncode, EXIT_INTERNAL)


class WzCommandTestCase(SimpleTestCase):

    def test_telescoping(self):
        output = run('wz', '--cert', 'L3.1', '--a', '1/5,2/7', '--kmax', '30')
        self.assertIn('L3.1: Pass', output)
        self.assertNotIn('Fail', output)

    def test_sum_identity(self):
        output = run('wz', '--cert', 'SEC2', '--a', '1', '--n', '1')
        self.assertIn('lhs=5 rhs=5', output)

    def test_json_lines(self):
        output = run('wz', '--cert', 'SEC2', '--a', '1', '--n', '1', '--format', 'json-lines')
        outcomes = [json.loads(line) for line in output.splitlines() if line.startswith('{')]
        self.assertEqual({row['outcome'] for row in outcomes}, {'Pass'})

    def test_unknown_certificate(self):
        with self.assertRaises(CommandError) as raised:
            run('wz', '--cert', 'L99', '--a', '1')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)


class LookupCommandTestCase(SimpleTestCase):

    def test_decompose(self):
        self.assertIn('x=3 y=1', run('decompose', '13', '--d', '4'))
        output = run('decompose', '31', '--4p27', '--json')
        rep = json.loads(output)
        self.assertEqual(rep['x'] ** 2 + 27 * rep['y'] ** 2, 4 * 31)

    def test_decompose_errors(self):
        with self.assertRaises(CommandError) as raised:
            run('decompose', '11', '--d', '4')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)
        with self.assertRaises(CommandError) as raised:
            run('decompose', '15', '--d', '4')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)

    def test_special(self):
        self.assertIn('R7(5) = 77 (mod 5^', run('special', 'R7', '5'))
        # 1 + 1/2 mod 5^6
        self.assertIn('H_2(5) = 7814 (mod 5^6)', run('special', 'H', '5', '--n', '2'))
        self.assertIn('q2(7) = 9 (mod 7^', run('special', 'q2', '7'))

    def test_special_needs_index(self):
        with self.assertRaises(CommandError) as raised:
            run('special', 'H', '7')
        self.assertEqual(raised.exception.returncode, EXIT_USAGE)

    def test_catalog(self):
        output = run('catalog')
        self.assertIn('T2.1', output)
        self.assertIn('C13.1.i.k2', output)
        rows = records(run('catalog', '--kind', 'conjecture', '--format', 'json-lines'))
        self.assertTrue(rows)
        self.assertEqual({row['kind'] for row in rows}, {'conjecture'})
        rows = records(run('catalog', '--kind', 'erratum', '--format', 'json-lines'))
        self.assertEqual({row['kind'] for row in rows}, {'erratum'})
        self.assertIn('T8.4.as-printed', [row['id'] for row in rows])
