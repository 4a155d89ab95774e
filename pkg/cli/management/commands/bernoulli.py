from exact_core.bernoulli import bernoulli_number, bernoulli_polynomial
from exact_core.polynomial import format_rational

from cli.base import BernoulliCommand
from core.exceptions import InvalidArgument


class Command(BernoulliCommand):
    help = 'Exact Bernoulli numbers and polynomials: numbers N | poly N | table MAX'

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=('numbers', 'poly', 'table'))
        parser.add_argument('n', type=int)

    def run(self, options, output, prec):
        n = options['n']
        if n < 0:
            raise InvalidArgument("n must be >= 0", n=n)
        action = options['action']
        if action == 'numbers':
            value = format_rational(bernoulli_number(n))
            return {'n': n, 'b_n': value} if output.format != 'pretty' else value
        if action == 'poly':
            value = str(bernoulli_polynomial(n))
            return {'n': n, 'B_n': value} if output.format != 'pretty' else value
        # b_0, b_2, ..., b_2n
        return [{'n': k, 'b_2n': format_rational(bernoulli_number(2 * k))} for k in range(n + 1)]
