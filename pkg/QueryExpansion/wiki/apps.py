from django.apps import AppConfig


class WikiConfig(AppConfig):
    name = 'QueryExpansion.wiki'
    label = 'wiki'
