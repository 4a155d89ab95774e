from django.apps import AppConfig


class TrigSumsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'trig_sums'
    verbose_name = 'Trigonometric sums'
