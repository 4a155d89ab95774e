from django.urls import path

from .views import VerificationRunDetailView, VerificationRunListCreateView

urlpatterns = [
    path('runs/', VerificationRunListCreateView.as_view(), name='verification_runs'),
    path('runs/<int:pk>/', VerificationRunDetailView.as_view(), name='verification_run_detail'),
]
