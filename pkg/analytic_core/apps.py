from django.apps import AppConfig


class AnalyticCoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'analytic_core'
    verbose_name = 'High-precision bounds'
