from django.apps import AppConfig


class PolytopesConfig(AppConfig):
    name = 'polytopes'
