import json

from django.core.management.base import BaseCommand
from sympy import isprime

from cli.services import command_error, usage_error
from quadform.services import SUPPORTED_FORMS, represent, represent_4p27


class Command(BaseCommand):
    help = 'Write a prime as x^2 + d*y^2, or 4p as x^2 + 27*y^2'

    def add_arguments(self, parser):
        parser.add_argument('p', type=int)
        form = parser.add_mutually_exclusive_group(required=True)
        form.add_argument('--d', type=int, choices=SUPPORTED_FORMS)
        form.add_argument('--4p27', dest='scaled', action='store_true',
                          help='Represent 4p = x^2 + 27y^2')
        parser.add_argument('--json', action='store_true', help='Print the representation as JSON')

    def handle(self, *args, **options):
        p = options['p']
        if p < 3 or not isprime(p):
            raise usage_error(f"{p} is not an odd prime")
        try:
            rep = represent_4p27(p) if options['scaled'] else represent(p, options['d'])
        except Exception as e:
            raise command_error(e)

        if options['json']:
            self.stdout.write(json.dumps({'p': p, **rep.as_dict()}))
        elif rep.scaled:
            self.stdout.write(f"x={rep.x} y={rep.y}  (4*{p} = {rep.x}^2 + 27*{rep.y}^2)")
        else:
            self.stdout.write(f"x={rep.x} y={rep.y}  ({p} = {rep.x}^2 + {rep.d}*{rep.y}^2)")
