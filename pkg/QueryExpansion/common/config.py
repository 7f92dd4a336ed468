"""
Run configuration shared by every subcommand.

Values are resolved in three layers: Django settings defaults, then an optional INI file given with ``--config``,
then command line flags. The INI file has up to three sections::

    [paths]
    store = /data/qe/stores
    topics = /data/fire/topics.txt

    [expansion]
    m = 30
    relations = synonym, hyponym

    [retrieval]
    model = bm25
    cutoffs = 5, 10, 20, 30
"""
import configparser
from dataclasses import dataclass, fields, replace
from pathlib import Path

from django.conf import settings

from QueryExpansion.common.errors import ConfigError
from QueryExpansion.expansion.pipeline import SOURCES, ExpansionParams
from QueryExpansion.wordnet.lexicon import RELATIONS

# created by the command when absent
OUTPUT_FIELDS = ('out',)
PATH_FIELDS = (
    'dump',
    'wordnet',
    'corpus',
    'topics',
    'qrels',
    'run',
    'queries',
    'baseline',
    'store',
    'index',
    'out',
    'stopwords',
    'lexicon',
)
EXPANSION_FIELDS = {
    'n': int,
    'm': int,
    'relations': tuple,
    'sources': tuple,
    'expansion_weight': float,
    'phrase_boost': float,
}
RETRIEVAL_FIELDS = {'model': str, 'depth': int, 'stemming': bool, 'cutoffs': tuple, 'tag': str}


@dataclass(frozen=True)
class RunConfig:
    dump: Path | None = None
    wordnet: Path | None = None
    corpus: Path | None = None
    topics: Path | None = None
    qrels: Path | None = None
    run: Path | None = None
    queries: Path | None = None
    baseline: Path | None = None
    store: Path | None = None
    index: Path | None = None
    out: Path | None = None
    stopwords: Path | None = None
    lexicon: Path | None = None

    n: int = 100
    m: int = 30
    relations: tuple[str, ...] = RELATIONS
    sources: tuple[str, ...] = SOURCES
    expansion_weight: float = 0.5
    phrase_boost: float = 1.0

    model: str = 'bm25'
    depth: int = 1000
    stemming: bool = True
    cutoffs: tuple[int, ...] = (5, 10, 20, 30)
    tag: str = 'qe'

    workers: int = 1
    profile: bool = False

    @classmethod
    def defaults(cls) -> 'RunConfig':
        exp, ret = settings.EXPANSION_DEFAULTS, settings.RETRIEVAL_DEFAULTS
        return cls(
            store=Path(settings.STORE_ROOT),
            stopwords=Path(settings.STOPWORDS_PATH),
            lexicon=Path(settings.TAGGER_LEXICON_PATH),
            n=exp['n_intermediate'],
            m=exp['m_final'],
            relations=tuple(exp['relations']),
            sources=tuple(exp['sources']),
            expansion_weight=exp['expansion_weight'],
            phrase_boost=exp['phrase_boost'],
            model=ret['model'],
            depth=ret['depth'],
            stemming=ret['stemming'],
            cutoffs=tuple(ret['cutoffs']),
            tag=ret['run_tag'],
            workers=settings.WIKI_INGEST_WORKERS,
        )

    def with_values(self, **values) -> 'RunConfig':
        known = {f.name for f in fields(self)}
        unknown = set(values) - known
        if unknown:
            raise ConfigError(f'unknown configuration keys: {", ".join(sorted(unknown))}')
        for name in PATH_FIELDS:
            if values.get(name) is not None:
                values[name] = Path(values[name]).expanduser()
        return replace(self, **{k: v for k, v in values.items() if v is not None})

    @property
    def index_dir(self) -> Path:
        return self.index or self.store / 'index'

    def require(self, *names: str):
        """
        Checks that every named path was given and that the inputs among them exist.
        """
        missing = [f'--{n}' for n in names if getattr(self, n) is None]
        if missing:
            raise ConfigError(f'missing required input: {", ".join(missing)}')
        absent = [
            f'{getattr(self, n)} (--{n})' for n in names if n not in OUTPUT_FIELDS and not getattr(self, n).exists()
        ]
        if absent:
            raise ConfigError(f'input not found: {", ".join(absent)}')

    def expansion_params(self, **overrides) -> ExpansionParams:
        values = {
            'n_intermediate': self.n,
            'm_final': self.m,
            'relations': self.relations,
            'sources': self.sources,
            'expansion_weight': self.expansion_weight,
            'phrase_boost': self.phrase_boost,
            **overrides,
        }
        try:
            return ExpansionParams(**values)
        except ValueError as e:
            raise ConfigError(str(e)) from e


def split_list(value: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in value.split(',') if v.strip())


def _convert(name: str, kind, raw: str):
    try:
        if kind is tuple:
            items = split_list(raw)
            return tuple(int(i) for i in items) if name == 'cutoffs' else items
        if kind is bool:
            if raw.strip().lower() not in configparser.ConfigParser.BOOLEAN_STATES:
                raise ValueError(raw)
            return configparser.ConfigParser.BOOLEAN_STATES[raw.strip().lower()]
        return kind(raw)
    except ValueError as e:
        raise ConfigError(f'invalid value for {name}: "{raw}"') from e


def read_config_file(path: Path) -> dict:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f'config file {path} not found')
    parser = configparser.ConfigParser()
    try:
        parser.read(path, encoding='utf-8')
    except configparser.Error as e:
        raise ConfigError(f'{path}: {e}') from e
    sections = {'paths': dict.fromkeys(PATH_FIELDS, str), 'expansion': EXPANSION_FIELDS, 'retrieval': RETRIEVAL_FIELDS}
    values = {}
    for section in parser.sections():
        if section not in sections:
            raise ConfigError(f'{path}: unknown section [{section}]')
        for key, raw in parser.items(section):
            if key not in sections[section]:
                raise ConfigError(f'{path}: unknown key "{key}" in [{section}]')
            values[key] = _convert(key, sections[section][key], raw)
    # relative paths in the file are relative to the file
    for name in PATH_FIELDS:
        if name in values:
            p = Path(values[name]).expanduser()
            values[name] = p if p.is_absolute() else path.parent / p
    return values


def validate(config: RunConfig) -> RunConfig:
    bad_relations = set(config.relations) - set(RELATIONS)
    if bad_relations:
        raise ConfigError(f'unknown relation(s) {", ".join(sorted(bad_relations))}, expected {", ".join(RELATIONS)}')
    bad_sources = set(config.sources) - set(SOURCES)
    if bad_sources:
        raise ConfigError(f'unknown source(s) {", ".join(sorted(bad_sources))}, expected {", ".join(SOURCES)}')
    if config.depth < 1:
        raise ConfigError('--k must be at least 1')
    if config.workers < 1:
        raise ConfigError('--workers must be at least 1')
    return config


def load_run_config(options: dict) -> RunConfig:
    config = RunConfig.defaults()
    if options.get('config'):
        config = config.with_values(**read_config_file(options['config']))
    flags = {f.name: options.get(f.name) for f in fields(RunConfig) if options.get(f.name) is not None}
    return validate(config.with_values(**flags))
