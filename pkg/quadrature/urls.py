# quadrature/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path('apply/', views.ApplyRuleView.as_view(), name='quadrature_apply'),
    path('expansion/', views.ExpansionView.as_view(), name='quadrature_expansion'),
    path('order-limit/', views.OrderLimitView.as_view(), name='quadrature_order_limit'),
    path('convergence/', views.ConvergenceView.as_view(), name='quadrature_convergence'),
    path('romberg/', views.RombergCheckView.as_view(), name='quadrature_romberg'),
    path('q-binomial/', views.QBinomialView.as_view(), name='quadrature_q_binomial'),
    path('monotone-remainder/', views.MonotoneRemainderView.as_view(), name='quadrature_monotone_remainder'),
]
