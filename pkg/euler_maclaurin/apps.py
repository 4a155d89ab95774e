from django.apps import AppConfig


class EulerMaclaurinConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'euler_maclaurin'
    verbose_name = 'Euler-Maclaurin summation'
