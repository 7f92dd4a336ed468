from django.apps import AppConfig


class RetrievalConfig(AppConfig):
    name = 'QueryExpansion.retrieval'
    label = 'retrieval'
