"""
Django settings for the query expansion project.

Only the management command machinery, logging and error reporting are used; there are no models, views or
databases. Every pipeline default can be overridden through the environment or a ``localsettings`` module.
"""
import logging
import os

import sentry_sdk
from sentry_sdk.integrations.django import DjangoIntegration
from sentry_sdk.integrations.logging import LoggingIntegration


def env_true(var_name, alt='FALSE'):
    return os.getenv(var_name, alt).upper() in {'1', 'TRUE'}


DJ_DIR = os.path.dirname(__file__)
BASE_DIR = os.path.dirname(DJ_DIR)

SECRET_KEY = os.getenv('SECRET_KEY', 'qe-local-only-7v9x!k2#m4p0r8s1t5w3y6z')

try:
    from localsettings import DEBUG  # noqa

    DEBUG = DEBUG or env_true('DEBUG')
except ImportError:
    DEBUG = env_true('DEBUG')

TESTING = env_true('TESTING')

INSTALLED_APPS = [
    'QueryExpansion.wiki',
    'QueryExpansion.wordnet',
    'QueryExpansion.queries',
    'QueryExpansion.expansion',
    'QueryExpansion.retrieval',
]

DATABASES = {}

LANGUAGE_CODE = 'en-gb'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# =======================================
# Stores and resources
# =======================================
STORE_ROOT = os.getenv('QE_STORE_ROOT', os.path.join(BASE_DIR, 'stores'))
WIKI_INGEST_WORKERS = int(os.getenv('QE_INGEST_WORKERS', '1'))
WIKI_INGEST_CHUNK_SIZE = int(os.getenv('QE_INGEST_CHUNK_SIZE', str(1 << 20)))

STOPWORDS_PATH = os.getenv('QE_STOPWORDS', os.path.join(DJ_DIR, 'retrieval', 'data', 'stopwords.txt'))
TAGGER_LEXICON_PATH = os.getenv('QE_TAGGER_LEXICON', os.path.join(DJ_DIR, 'queries', 'data', 'lexicon.txt'))

# =======================================
# Expansion and retrieval defaults
# =======================================
EXPANSION_DEFAULTS = {
    'n_intermediate': int(os.getenv('QE_N_INTERMEDIATE', '100')),
    'm_final': int(os.getenv('QE_M_FINAL', '30')),
    'relations': ('synonym', 'hyponym'),
    'sources': ('wiki', 'wordnet'),
    'expansion_weight': float(os.getenv('QE_EXPANSION_WEIGHT', '0.5')),
    'phrase_boost': float(os.getenv('QE_PHRASE_BOOST', '1.0')),
}

RETRIEVAL_DEFAULTS = {
    'model': os.getenv('QE_MODEL', 'bm25'),
    'depth': int(os.getenv('QE_DEPTH', '1000')),
    'k1': 1.2,
    'b': 0.75,
    'stemming': not env_true('QE_NO_STEMMING'),
    'cutoffs': (5, 10, 20, 30),
    'run_tag': os.getenv('QE_RUN_TAG', 'qe'),
}

SWEEP_M_VALUES = (10, 20, 30, 40, 50, 60)
SWEEP_MODELS = ('bm25', 'tfidf')

# =======================
#   Logging
# =======================
LOGGING = {
    'version': 1,
    'disable_existing_loggers': True,
    'filters': {
        'require_debug_true': {'()': 'django.utils.log.RequireDebugTrue'},
    },
    'formatters': {
        'qe': {'format': '[%(asctime)s] %(stage)-10s %(message)s', 'datefmt': '%d/%b/%Y %H:%M:%S'},
    },
    'handlers': {
        'debug_console': {'level': 'DEBUG', 'filters': ['require_debug_true'], 'class': 'logging.StreamHandler'},
        'qe_console': {
            'level': 'DEBUG' if DEBUG else 'INFO',
            'class': 'QueryExpansion.streamhandler.PipelineStreamHandler',
            'formatter': 'qe',
        },
    },
    'loggers': {
        'django': {'handlers': ['debug_console'], 'level': 'INFO'},
        'qe': {'handlers': ['qe_console'], 'level': 'DEBUG', 'propagate': False},
        'sentry.errors': {'level': 'WARNING', 'handlers': ['debug_console'], 'propagate': False},
    },
}


sentry_logging = LoggingIntegration(level=logging.INFO, event_level=logging.WARNING)
sentry_sdk.init(dsn=None if TESTING else os.getenv('SENTRY_DSN'), integrations=[DjangoIntegration(), sentry_logging])


try:
    from localsettings import *  # noqa
except ImportError:
    pass
