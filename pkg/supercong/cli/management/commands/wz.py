import json
import logging
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError

from cli.services import EXIT_FAILURE, command_error, usage_error
from wzcert.services import (
    Outcome,
    get_certificate,
    verify_boundary,
    verify_sum_identity,
    verify_telescoping,
)

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Check a WZ certificate exactly over the rationals'

    def add_arguments(self, parser):
        parser.add_argument('--cert', required=True, help='Certificate id, e.g. L3.1 or SEC2')
        parser.add_argument('--a', required=True,
                            help='Comma-separated rationals, e.g. 1/5,2/7; attach a list '
                                 'starting with a sign with "=", e.g. --a=-1/3,2/7')
        parser.add_argument('--kmax', type=int, default=30,
                            help='Check the telescoping relation for k <= kmax')
        parser.add_argument('--n', type=int, help='Also check the finite-sum identity with n terms')
        parser.add_argument('--format', choices=['table', 'json-lines'], default='table')

    def handle(self, *args, **options):
        try:
            cert = get_certificate(options['cert'])
            values = [Fraction(part) for part in options['a'].split(',') if part.strip()]
        except (ValueError, ZeroDivisionError):
            raise usage_error(f"Malformed --a {options['a']!r}")
        except Exception as e:
            raise command_error(e)
        if options['kmax'] < 0:
            raise usage_error("--kmax must be nonnegative")

        results = []
        try:
            for a in values:
                results.append(verify_telescoping(cert, a, options['kmax']))
                results.append(verify_boundary(cert, a))
                if options['n'] is not None:
                    results.append(verify_sum_identity(cert, a, options['n']))
        except Exception as e:
            raise command_error(e)

        for result in results:
            self.stdout.write(self._line(result, options['format']))

        failed = [r for r in results if r.outcome is Outcome.FAIL]
        poles = [r for r in results if r.outcome is Outcome.POLE]
        if poles:
            logger.warning(f"{cert.id}: {len(poles)} checks met an exact pole")
        if failed:
            raise CommandError(f"{cert.id}: {len(failed)} of {len(results)} checks failed",
                               returncode=EXIT_FAILURE)
        self.stdout.write(self.style.SUCCESS(f"{cert.id}: Pass"))

    @staticmethod
    def _line(result, fmt):
        if fmt == 'json-lines':
            return json.dumps(result.as_dict())
        parts = [result.certificate, f"a={result.a}", result.outcome.value]
        if result.k is not None:
            parts.append(f"k={result.k}")
        if result.lhs is not None:
            parts.append(f"lhs={result.lhs} rhs={result.rhs}")
        return ' '.join(parts)
