from django.apps import AppConfig


class SeqlibConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'seqlib'
    verbose_name = 'Special sequences'
