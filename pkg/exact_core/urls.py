# exact_core/urls.py
from django.urls import path

from .views import (
    BernoulliEvaluateView,
    BernoulliNumbersView,
    BernoulliPolynomialView,
    PowerSumView,
    VonStaudtClausenView,
)

urlpatterns = [
    path('numbers/', BernoulliNumbersView.as_view(), name='exact_numbers'),
    path('polynomial/', BernoulliPolynomialView.as_view(), name='exact_polynomial'),
    path('evaluate/', BernoulliEvaluateView.as_view(), name='exact_evaluate'),
    path('power-sum/', PowerSumView.as_view(), name='exact_power_sum'),
    path('von-staudt/', VonStaudtClausenView.as_view(), name='exact_von_staudt'),
]
