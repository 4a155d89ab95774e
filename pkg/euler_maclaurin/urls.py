# euler_maclaurin/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path('composite-mean/', views.CompositeMeanView.as_view(), name='em_composite_mean'),
    path('identity/', views.IdentityCheckView.as_view(), name='em_identity'),
    path('decay/', views.DecayView.as_view(), name='em_decay'),
    path('signed-remainder/', views.SignedRemainderView.as_view(), name='em_signed_remainder'),
    path('validate/', views.ValidateIntegrandView.as_view(), name='em_validate'),
]
