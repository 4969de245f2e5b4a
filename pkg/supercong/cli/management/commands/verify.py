import logging

from django.core.management.base import BaseCommand, CommandError

from cli.services import (
    EXIT_OK,
    ReportWriter,
    command_error,
    configure_verbosity,
    format_errors,
    run_exit_code,
    usage_error,
)
from registry.serializers import FORMATS, RunConfigSerializer
from registry.services import check_range, prime_list, resolve_ids
from registry.types import Status

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Verify catalog congruences over a range of primes'

    def add_arguments(self, parser):
        parser.add_argument('--ids', nargs='+', default=[],
                            help='Statement ids, prefixes or globs (comma lists allowed); '
                                 'default: the whole catalog')
        parser.add_argument('--primes', required=True, help='Prime range, e.g. 5..499')
        parser.add_argument('--format', choices=FORMATS, default='table', help='Report format')
        parser.add_argument('--out', help='Write the report to this file instead of stdout')
        parser.add_argument('--no-timings', action='store_true',
                            help='Leave elapsed_ms empty so reports compare byte for byte')
        parser.add_argument('--strict-floors', action='store_true',
                            help='Also skip primes below the stricter floors quoted elsewhere')
        parser.add_argument('--fail-fast', action='store_true', help='Stop at the first Fail')
        conjectures = parser.add_mutually_exclusive_group()
        conjectures.add_argument('--include-conjectures', dest='include_conjectures',
                                 action='store_true', default=True)
        conjectures.add_argument('--exclude-conjectures', dest='include_conjectures',
                                 action='store_false')
        parser.add_argument('--include-errata', action='store_true',
                            help='Let globs and prefixes also select printed forms kept as '
                                 'errata (ids ending in .as-printed)')
        parser.add_argument('--samples',
                            help='Parametric samples separated by ";", e.g. "1/2;-3" or "t=2,n=3"; '
                                 'attach a list starting with a sign with "=", '
                                 'e.g. --samples=-1/3;1/2')
        parser.add_argument('--seed', type=int, help='Seed of the default parametric samples')
        parser.add_argument('--per-parity', type=int,
                            help='Default a-samples per parity class of <a>_p')
        parser.add_argument('--threads', type=int, help='Worker processes')
        parser.add_argument('--precision', type=int,
                            help='Working precision exponent N (default max(6, e+3))')

    def handle(self, *args, **options):
        configure_verbosity(options['verbosity'])
        ids = [part for item in options['ids'] for part in item.split(',') if part]
        serializer = RunConfigSerializer(data={
            'ids': ids,
            'primes': options['primes'],
            'format': options['format'],
            'out': options['out'],
            'no_timings': options['no_timings'],
            'strict_floors': options['strict_floors'],
            'fail_fast': options['fail_fast'],
            'include_conjectures': options['include_conjectures'],
            'include_errata': options['include_errata'],
            'samples': options['samples'],
            'seed': options['seed'],
            'per_parity': options['per_parity'],
            'threads': options['threads'],
            'precision': options['precision'],
        })
        if not serializer.is_valid():
            raise usage_error(format_errors(serializer.errors))
        config = serializer.validated_data

        try:
            ids = resolve_ids(config['ids'], config['include_conjectures'],
                              config['include_errata'])
            primes = prime_list(*config['primes'])
        except Exception as e:
            raise command_error(e)
        if not primes:
            raise usage_error(f"No odd primes in {options['primes']}")

        results = check_range(
            ids, primes,
            samples=config['samples'],
            precision=config['precision'],
            strict_floors=config['strict_floors'],
            threads=config['threads'],
            seed=config['seed'],
            per_parity=config['per_parity'],
        )
        if config['out']:
            with open(config['out'], 'w', newline='') as stream:
                writer = self._write_report(stream, config, results)
            self.stdout.write(self.style.SUCCESS(f"Report written to {config['out']}"))
        else:
            writer = self._write_report(self.stdout, config, results)

        self.stderr.write(writer.summary())
        code = run_exit_code(status for status, count in writer.counts.items() if count)
        if code != EXIT_OK:
            raise CommandError(f"Verification did not pass ({writer.summary()})", returncode=code)

    def _write_report(self, stream, config, results):
        writer = ReportWriter(stream, config['format'], timings=not config['no_timings'])
        try:
            for result in results:
                writer.write(result)
                if config['fail_fast'] and result.status is Status.FAIL:
                    logger.warning(f"Stopping at the first Fail: {result.statement_id} "
                                   f"at p={result.p}")
                    break
        except Exception as e:
            logger.error(f"Error running verification: {str(e)}")
            raise command_error(e)
        finally:
            close = getattr(results, 'close', None)
            if close is not None:
                close()
        return writer

