# core/exceptions.py
"""
Domain exceptions shared by every app, and the DRF exception handler that
turns them into JSON error responses.
"""

import logging

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import exception_handler

logger = logging.getLogger(__name__)


class BernoulliError(Exception):
    """Base class for every failure raised by the toolkit."""

    code = 'bernoulli_error'
    http_status = status.HTTP_422_UNPROCESSABLE_ENTITY

    def __init__(self, detail=None, **diagnostics):
        self.detail = detail or self.__class__.__doc__ or self.code
        self.diagnostics = {key: str(value) for key, value in diagnostics.items()}
        super().__init__(self.detail)

    def as_dict(self):
        return {
            'error': self.__class__.__name__,
            'code': self.code,
            'detail': self.detail,
            'diagnostics': self.diagnostics,
        }


class InvalidArgument(BernoulliError, ValueError):
    """An argument is outside the domain of the operation."""

    code = 'invalid_argument'
    http_status = status.HTTP_400_BAD_REQUEST


class NotInteger(BernoulliError):
    """A quantity that must be an integer has a non-trivial denominator."""

    code = 'not_integer'


class BracketFailure(BernoulliError):
    """No sign change was found on the bisection bracket."""

    code = 'bracket_failure'


class ToleranceFailure(BernoulliError):
    """Two independent computations disagree beyond their tolerances."""

    code = 'tolerance_failure'


class PreconditionViolated(BernoulliError):
    """The hypothesis of a certified bound does not hold for this input."""

    code = 'precondition_violated'


class OrderMismatch(BernoulliError):
    """A scaled error sequence does not settle to its predicted limit."""

    code = 'order_mismatch'


class BoundViolation(BernoulliError):
    """A residual exceeds its proven bound."""

    code = 'bound_violation'


class PrecisionUnreachable(BernoulliError):
    """The requested precision is beyond the configured limits."""

    code = 'precision_unreachable'


class SandwichViolation(BernoulliError):
    """A remainder witness left its open interval."""

    code = 'sandwich_violation'


class IdentityViolation(BernoulliError):
    """An identity failed to hold within its tolerance."""

    code = 'identity_violation'


def api_exception_handler(exc, context):
    """
    DRF exception handler: domain errors become 400/422 JSON bodies,
    everything else goes through the stock handler.
    """
    if isinstance(exc, BernoulliError):
        view = context.get('view')
        logger.warning(
            f"{exc.__class__.__name__} in {view.__class__.__name__ if view else 'unknown view'}: {exc.detail}"
        )
        return Response(exc.as_dict(), status=exc.http_status)

    return exception_handler(exc, context)
