from django.apps import AppConfig


class ExpansionConfig(AppConfig):
    name = 'QueryExpansion.expansion'
    label = 'expansion'
