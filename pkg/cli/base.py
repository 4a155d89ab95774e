# cli/base.py
"""
Shared plumbing for the numeric management commands: the common flags,
error-to-exit-code mapping and output rendering.
"""

import logging

from django.core.management.base import BaseCommand, CommandError

from analytic_core.precision import MIN_PREC, resolve_prec, setting
from core.exceptions import BernoulliError, InvalidArgument

from .output import FORMATS, OutputSpec, header_line, render

logger = logging.getLogger(__name__)

EXIT_FAILURE = 1
EXIT_USAGE = 2


class VerificationFailed(Exception):
    """Raised by a command whose checks ran but did not all pass."""

    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


class BernoulliCommand(BaseCommand):
    """
    Subclasses implement `add_command_arguments` and `run(options, output, prec)`,
    returning the payload to render.

    Exit codes: 0 on success, 1 when a check fails, 2 on bad arguments.
    """
    default_format = 'pretty'
    requires_system_checks = []

    def add_arguments(self, parser):
        self.add_command_arguments(parser)
        parser.add_argument('--prec', type=int, default=None,
                            help='Working precision in bits (default: BERN_PREC or 256)')
        parser.add_argument('--format', choices=FORMATS, default=None, help='Output format')
        parser.add_argument('--out', default=None, help='Write output to this file instead of stdout')
        parser.add_argument('--digits', type=int, default=30, help='Significant digits of decimal output')
        parser.add_argument('--fast', action='store_true', help='Use the reduced verification budgets')
        parser.add_argument('--no-header', action='store_true', help='Omit the timestamp header line')

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        try:
            prec = self.resolve_prec(options['prec'])
            output = OutputSpec.build(
                format=options['format'] or self.default_format,
                path=options['out'],
                digits=options['digits'],
                header=not options['no_header'],
                prec=prec,
            )
            payload = self.run(options, output, prec)
        except InvalidArgument as exc:
            logger.warning(f"{self.command_name()}: {exc.detail}")
            raise CommandError(exc.detail, returncode=EXIT_USAGE)
        except VerificationFailed as exc:
            self.emit(exc.payload, output, prec)
            raise CommandError("verification failed", returncode=EXIT_FAILURE)
        except BernoulliError as exc:
            logger.error(f"{self.command_name()}: {exc.detail}")
            raise CommandError(exc.detail, returncode=EXIT_FAILURE)
        self.emit(payload, output, prec)

    def resolve_prec(self, prec) -> int:
        maximum = int(setting('MAX_PREC'))
        if prec is not None and not MIN_PREC <= prec <= maximum:
            raise InvalidArgument(f"prec must lie in {MIN_PREC}..{maximum}", prec=prec)
        return resolve_prec(prec)

    def emit(self, payload, output: OutputSpec, prec: int) -> None:
        text = render(payload, output, header_line(self.command_name(), prec))
        if output.path:
            with open(output.path, 'w', encoding='utf-8', newline='') as handle:
                handle.write(text + '\n')
            self.stderr.write(self.style.SUCCESS(f"Wrote {output.path}"))
        else:
            self.stdout.write(text)

    def command_name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

    def run(self, options, output: OutputSpec, prec: int):
        raise NotImplementedError
