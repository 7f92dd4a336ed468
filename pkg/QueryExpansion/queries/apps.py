from django.apps import AppConfig


class QueriesConfig(AppConfig):
    name = 'QueryExpansion.queries'
    label = 'queries'
