from django.apps import AppConfig


class WzcertConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'wzcert'
    verbose_name = 'WZ certificates'
