# trig_sums/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path('sum/', views.TrigSumView.as_view(), name='trig_sum'),
    path('identities/', views.IdentityView.as_view(), name='trig_identities'),
    path('expansion/', views.ExpansionCheckView.as_view(), name='trig_expansion'),
    path('bracket/', views.BracketView.as_view(), name='trig_bracket'),
    path('sweep/', views.SweepView.as_view(), name='trig_sweep'),
]
