from cli.base import BernoulliCommand
from core.exceptions import InvalidArgument
from trig_sums.expansions import BRACKET_KINDS, MAX_BRACKET_N, I_sweep, J_sweep
from trig_sums.sums import TRIG_KINDS, trig_sum

SWEEPS = {'I': I_sweep, 'J': J_sweep}


class Command(BernoulliCommand):
    help = 'Trigonometric sums: trig KIND --p P, or trig verify --max-p N [--m M] [--kind I|J]'

    def add_command_arguments(self, parser):
        parser.add_argument('kind', choices=TRIG_KINDS + ('verify',))
        parser.add_argument('--p', type=int, default=None)
        parser.add_argument('--max-p', type=int, default=None)
        parser.add_argument('--m', type=int, default=0, help='Truncation index of the bracket')
        parser.add_argument('--sum', dest='sweep_kind', choices=BRACKET_KINDS, default='I',
                            help='Sum swept by verify')

    def run(self, options, output, prec):
        if options['kind'] == 'verify':
            return self.sweep(options)
        if options['p'] is None:
            raise InvalidArgument("--p is required")
        result = trig_sum(options['kind'], options['p'], prec=prec)
        return result.as_dict(output.digits)

    def sweep(self, options):
        max_p, m = options['max_p'], options['m']
        if max_p is None or max_p < 1:
            raise InvalidArgument("--max-p must be >= 1", max_p=max_p)
        if not 0 <= m <= MAX_BRACKET_N:
            raise InvalidArgument(f"--m must lie in 0..{MAX_BRACKET_N}", m=m)
        # brackets are checked at the sweep precision unless --prec is given
        return SWEEPS[options['sweep_kind']](max_p, n=m, prec=options['prec'])

    def handle(self, *args, **options):
        if options['kind'] == 'verify' and options['format'] is None:
            options['format'] = 'csv'
        return super().handle(*args, **options)
