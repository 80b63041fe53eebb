from django.apps import AppConfig


class ModularConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'modular'
    verbose_name = 'Блоки и характеры Брауэра'
