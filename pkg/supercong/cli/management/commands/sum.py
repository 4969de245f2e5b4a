import logging
from fractions import Fraction

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from cli.services import EXIT_FAILURE, command_error, usage_error
from padic.exceptions import NegativeValuation
from padic.services import default_precision, from_rational, make_context, reduce_mod
from sums.oracle import exact_oracle
from sums.services import evaluate
from sums.specs import Family, SumSpec, TermFamily, Upper, parse_weight

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = 'Evaluate one weighted binomial sum at a prime'

    def add_arguments(self, parser):
        parser.add_argument('--family', required=True, choices=[f.value for f in Family])
        parser.add_argument('--a', help='Rational parameter of the general family; attach signed '
                                        'values with "=", e.g. --a=-1/2')
        parser.add_argument('--m', type=int, default=4, help='Power base m of the k-th term')
        parser.add_argument('--weight', default='pow:0',
                            help='"pow:J" for k^J or "inv:ALPHA,BETA,J" for (ALPHA k+BETA)^-J')
        parser.add_argument('--upper', choices=[u.value for u in Upper], default='p-1')
        parser.add_argument('--prime', type=int, required=True)
        parser.add_argument('--mod-exp', type=int, default=3, help='Report the residue mod p^e')
        parser.add_argument('--precision', type=int, help='Working precision exponent N')
        parser.add_argument('--oracle', action='store_true',
                            help='Cross-check against the exact rational sum (small p only)')

    def handle(self, *args, **options):
        p, exponent = options['prime'], options['mod_exp']
        if exponent < 1:
            raise usage_error(f"--mod-exp must be at least 1, got {exponent}")
        try:
            spec = self._spec(options)
            ctx = make_context(p, options['precision'] or default_precision(exponent))
            value = evaluate(ctx, spec)
        except CommandError:
            raise
        except Exception as error:
            logger.error(f"Error evaluating the sum: {str(error)}")
            raise command_error(error)

        self.stdout.write(f"sum: {spec}")
        self.stdout.write(f"p = {p}, N = {ctx.N}")
        attained = value.absolute_precision
        self.stdout.write(f"attained precision: {'exact' if attained is None else f'p^{attained}'}")
        try:
            residue = reduce_mod(value, exponent)
        except NegativeValuation:
            self.stdout.write(f"value: p^{value.v} * {value.u} (mod p^{value.v + value.prec})")
            residue = None
        except Exception as error:
            raise command_error(error)
        if residue is not None:
            self.stdout.write(f"residue: {residue} (mod {p}^{exponent})")

        if options['oracle']:
            self._oracle(spec, ctx, value, exponent)

    @staticmethod
    def _spec(options):
        family = Family(options['family'])
        if family is Family.GENERAL_A:
            if options['a'] is None:
                raise usage_error("--family general needs --a")
            try:
                a = Fraction(options['a'])
            except (ValueError, ZeroDivisionError):
                raise usage_error(f"Malformed --a {options['a']!r}")
            term = TermFamily(family, a=a)
        else:
            term = TermFamily(family, m=options['m'])
        return SumSpec(term, parse_weight(options['weight']), Upper(options['upper']))

    def _oracle(self, spec, ctx, value, e):
        limit = getattr(settings, 'SUPERCONG', {}).get('ORACLE_PRIME_LIMIT', 50)
        if ctx.p > limit:
            raise usage_error(f"--oracle is limited to p <= {limit}")
        exact = exact_oracle(spec, ctx.p)
        difference = from_rational(ctx, exact) - value
        if difference.zero or difference.v >= e:
            self.stdout.write(self.style.SUCCESS("oracle: match"))
            return
        logger.warning(f"Oracle mismatch for {spec} at p={ctx.p}")
        self.stdout.write(self.style.ERROR("oracle: mismatch"))
        raise CommandError("The p-adic value disagrees with the exact sum", returncode=EXIT_FAILURE)
