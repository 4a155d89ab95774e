from django.apps import AppConfig


class AsymptoticSeriesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'asymptotic_series'
    verbose_name = 'Harmonic-number series'
