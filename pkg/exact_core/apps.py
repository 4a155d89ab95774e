from django.apps import AppConfig


class ExactCoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'exact_core'
    verbose_name = 'Exact Bernoulli arithmetic'
