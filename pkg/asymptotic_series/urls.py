# asymptotic_series/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path('harmonic/', views.HarmonicView.as_view(), name='series_harmonic'),
    path('gamma/', views.EulerGammaView.as_view(), name='series_gamma'),
    path('gamma-table/', views.GammaTableView.as_view(), name='series_gamma_table'),
    path('expansion/', views.HarmonicExpansionView.as_view(), name='series_expansion'),
    path('value/', views.SeriesValueView.as_view(), name='series_value'),
    path('check/', views.SeriesCheckView.as_view(), name='series_check'),
]
