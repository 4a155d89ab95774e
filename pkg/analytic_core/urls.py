# analytic_core/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path('periodic/', views.PeriodicBernoulliView.as_view(), name='analytic_periodic'),
    path('sup-norm/', views.SupNormView.as_view(), name='analytic_sup_norm'),
    path('alpha/', views.AlphaZeroView.as_view(), name='analytic_alpha'),
    path('l1-norm/', views.L1NormView.as_view(), name='analytic_l1_norm'),
    path('b2n-bound/', views.B2nBoundView.as_view(), name='analytic_b2n_bound'),
    path('dilcher/', views.DilcherView.as_view(), name='analytic_dilcher'),
    path('convergence/', views.NormalizedConvergenceView.as_view(), name='analytic_convergence'),
]
