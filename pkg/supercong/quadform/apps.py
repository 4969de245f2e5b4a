from django.apps import AppConfig


class QuadformConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'quadform'
    verbose_name = 'Binary quadratic form representations'
