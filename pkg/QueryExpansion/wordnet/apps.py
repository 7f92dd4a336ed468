from django.apps import AppConfig


class WordnetConfig(AppConfig):
    name = 'QueryExpansion.wordnet'
    label = 'wordnet'
