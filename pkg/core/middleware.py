# core/middleware.py
"""
Request logging and last-resort JSON error responses for the API
"""

import json
import logging
import time

from django.http import JsonResponse
from django.utils.deprecation import MiddlewareMixin
from rest_framework import status

from core.exceptions import BernoulliError

logger = logging.getLogger(__name__)

SLOW_REQUEST_SECONDS = 1.0
LOGGED_PARAMS = ('n', 'm', 'p', 'kind', 'rule', 'fn', 'prec', 'suite')


class RequestLoggingMiddleware(MiddlewareMixin):
    """
    Logs each API request with its numeric parameters and duration.
    Requests slower than a second are logged as warnings.
    """

    def process_request(self, request):
        request.start_time = time.monotonic()

    def process_response(self, request, response):
        if not hasattr(request, 'start_time') or not request.path.startswith('/api/'):
            return response
        duration = time.monotonic() - request.start_time
        log_data = {
            'method': request.method,
            'path': request.path,
            'params': {name: request.GET[name] for name in LOGGED_PARAMS if name in request.GET},
            'status': response.status_code,
            'duration_ms': round(duration * 1000, 2),
            'ip': self.get_client_ip(request),
        }
        if duration > SLOW_REQUEST_SECONDS:
            logger.warning(f"SLOW REQUEST: {json.dumps(log_data)}")
        else:
            logger.info(f"Response: {json.dumps(log_data)}")
        return response

    @staticmethod
    def get_client_ip(request):
        x_forwarded_for = request.META.get('HTTP_X_FORWARDED_FOR')
        if x_forwarded_for:
            return x_forwarded_for.split(',')[0]
        return request.META.get('REMOTE_ADDR')


class ErrorHandlingMiddleware(MiddlewareMixin):
    """
    Turns exceptions that escape the views on /api/ into JSON: domain errors
    keep their status and diagnostics, anything else is a 500.
    """

    def process_exception(self, request, exception):
        if not request.path.startswith('/api/'):
            return None

        if isinstance(exception, BernoulliError):
            logger.warning(f"{exception.__class__.__name__} on {request.path}: {exception.detail}")
            return JsonResponse(exception.as_dict(), status=exception.http_status)

        logger.error(
            f"Unhandled exception: {exception}",
            exc_info=True,
            extra={'request_path': request.path, 'request_method': request.method},
        )
        return JsonResponse(
            {
                'error': 'Internal Server Error',
                'message': 'An unexpected error occurred.',
                'status_code': 500,
            },
            status=status.HTTP_500_INTERNAL_SERVER_ERROR,
        )
