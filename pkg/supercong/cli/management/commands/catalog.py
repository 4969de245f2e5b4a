import json

from django.core.management.base import BaseCommand

from cli.services import command_error
from registry.serializers import StatementSerializer, kind_choices
from registry.services import get_statement, resolve_ids


class Command(BaseCommand):
    help = 'List catalog statements with their kinds, hypotheses and modulus exponents'

    def add_arguments(self, parser):
        parser.add_argument('--ids', nargs='+', default=[], help='Ids, prefixes or globs')
        parser.add_argument('--kind', choices=kind_choices(), help='Only statements of this kind')
        parser.add_argument('--format', choices=['table', 'json-lines'], default='table')

    def handle(self, *args, **options):
        try:
            ids = resolve_ids(options['ids'], include_errata=True)
        except Exception as e:
            raise command_error(e)

        for sid in ids:
            data = StatementSerializer(get_statement(sid)).data
            if options['kind'] and data['kind'] != options['kind']:
                continue
            if options['format'] == 'json-lines':
                self.stdout.write(json.dumps(data))
                continue
            exponents = ','.join(str(e) for e in data['exponents'])
            self.stdout.write(f"{sid:<18} {data['kind']:<13} p^{exponents:<4} {data['hypotheses']}")
