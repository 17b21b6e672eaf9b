from django.apps import AppConfig


class RootsConfig(AppConfig):
    name = 'roots'
    verbose_name = 'Системы корней и группы Вейля'
