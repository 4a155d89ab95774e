# core/urls.py

from django.contrib import admin
from django.urls import include, path
from drf_spectacular.views import SpectacularAPIView
from rest_framework.decorators import api_view, permission_classes
from rest_framework.permissions import AllowAny
from rest_framework.response import Response
from rest_framework.reverse import reverse

from core import views as core_views

API_ENDPOINTS = (
    'exact_numbers', 'exact_polynomial', 'exact_evaluate', 'exact_power_sum', 'exact_von_staudt',
    'analytic_periodic', 'analytic_sup_norm', 'analytic_alpha', 'analytic_l1_norm', 'analytic_b2n_bound',
    'analytic_dilcher', 'analytic_convergence',
    'em_composite_mean', 'em_identity', 'em_decay', 'em_signed_remainder', 'em_validate',
    'quadrature_apply', 'quadrature_expansion', 'quadrature_order_limit', 'quadrature_convergence',
    'quadrature_romberg', 'quadrature_q_binomial', 'quadrature_monotone_remainder',
    'series_harmonic', 'series_gamma', 'series_gamma_table', 'series_expansion', 'series_value', 'series_check',
    'trig_sum', 'trig_identities', 'trig_expansion', 'trig_bracket', 'trig_sweep',
    'verification_runs',
    'api_health', 'api_schema',
)


@api_view(['GET'])
@permission_classes([AllowAny])
def api_root(request, format=None):
    """
    The entry point of the Bernoulli API.
    """
    return Response({name: reverse(name, request=request, format=format) for name in API_ENDPOINTS})


urlpatterns = [
    # Django Admin Site
    path('admin/', admin.site.urls),

    # API Root: GET /api/
    path('api/', api_root, name='api_root'),
    path('api/schema/', SpectacularAPIView.as_view(), name='api_schema'),

    # Health and readiness endpoints
    path('api/health/', core_views.health_check, name='api_health'),
    path('api/ready/', core_views.readiness_check, name='api_ready'),
    path('api/alive/', core_views.liveness_check, name='api_alive'),

    path('api/exact/', include('exact_core.urls')),
    path('api/analytic/', include('analytic_core.urls')),
    path('api/em/', include('euler_maclaurin.urls')),
    path('api/quadrature/', include('quadrature.urls')),
    path('api/series/', include('asymptotic_series.urls')),
    path('api/trig/', include('trig_sums.urls')),
    path('api/verification/', include('verification.urls')),
]
