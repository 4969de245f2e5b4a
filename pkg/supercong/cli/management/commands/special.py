import logging

from django.conf import settings
from django.core.management.base import BaseCommand
from sympy import isprime

from cli.services import command_error, usage_error
from padic.services import default_precision, make_context, reduce_mod
from seqlib.services import (
    Aggregate,
    euler_mod_p,
    fermat_quotient,
    harmonic,
    mod_p_value,
    r_aggregates,
    u_mod_p,
)

logger = logging.getLogger(__name__)

INDEXED = {'H': 1, 'H2': 2}


def special_value(name, ctx, n=None):
    """The named quantity at ctx.p; H and H2 need the index n."""
    p = ctx.p
    if name in {a.value for a in Aggregate}:
        return r_aggregates(ctx, name)
    if name == 'E':
        return mod_p_value(ctx, euler_mod_p(ctx, p - 3))
    if name == 'U':
        return mod_p_value(ctx, u_mod_p(ctx, p - 3))
    if name in ('q2', 'q3'):
        return fermat_quotient(ctx, int(name[1]))
    return harmonic(ctx, n, INDEXED[name])


NAMES = [a.value for a in Aggregate] + ['E', 'U', 'q2', 'q3'] + list(INDEXED)


class Command(BaseCommand):
    help = 'Print a special quantity at a prime: R1, R2, R3, R7, E, U, q2, q3, H, H2'

    def add_arguments(self, parser):
        parser.add_argument('name', choices=NAMES)
        parser.add_argument('p', type=int)
        parser.add_argument('--n', type=int, help='Index of H_n and H_n^(2)')
        parser.add_argument('--precision', type=int, help='Working precision exponent N')

    def handle(self, *args, **options):
        name, p, n = options['name'], options['p'], options['n']
        if p < 5 or not isprime(p):
            raise usage_error(f"{p} is not a prime greater than 3")
        if name in INDEXED and n is None:
            raise usage_error(f"{name} needs --n")
        precision = options['precision']
        try:
            if precision is None:
                precision = settings.SUPERCONG.get('PRECISION') or default_precision(3)
            ctx = make_context(p, precision)
            value = special_value(name, ctx, n)
            attained = value.absolute_precision
            e = ctx.N if attained is None else min(ctx.N, attained)
            residue = reduce_mod(value, e)
        except Exception as error:
            logger.error(f"Error computing {name} at p={p}: {str(error)}")
            raise command_error(error)

        label = f"{name}_{n}" if name in INDEXED else name
        self.stdout.write(f"{label}({p}) = {residue} (mod {p}^{e})")

