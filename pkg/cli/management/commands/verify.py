import logging

from cli.base import BernoulliCommand, VerificationFailed
from core.exceptions import InvalidArgument
from verification.suites import ALL_SUITES, SUITE_NAMES, SuiteOptions, run_suite

logger = logging.getLogger('cli')


class Command(BernoulliCommand):
    help = 'Run a verification suite; exits 1 if any check fails'
    default_format = 'json'

    def add_command_arguments(self, parser):
        parser.add_argument('suite', choices=SUITE_NAMES + (ALL_SUITES,))
        parser.add_argument('--max-n', type=int, default=None, help='Index budget for the exact and analytic suites')
        parser.add_argument('--max-p', type=int, default=None, help='Largest p of the trigonometric sweeps')

    def run(self, options, output, prec):
        for name in ('max_n', 'max_p'):
            if options[name] is not None and options[name] < 2:
                raise InvalidArgument(f"--{name.replace('_', '-')} must be >= 2", value=options[name])
        suite_options = SuiteOptions(
            fast=options['fast'],
            max_n=options['max_n'],
            max_p=options['max_p'],
            prec=options['prec'],
        )
        report = run_suite(options['suite'], suite_options)
        payload = self.payload(report, output)
        if not report.passed:
            logger.error(f"verify {report.suite}: {report.failures} failing checks")
            raise VerificationFailed(payload)
        return payload

    @staticmethod
    def payload(report, output):
        if output.format == 'json':
            data = report.as_dict()
            data['traceability'] = report.traceability()
            return data
        return [{key: row.get(key) for key in ('name', 'tag', 'status', 'margin')}
                for row in report.as_dict()['checks']]
