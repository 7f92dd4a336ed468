"""
Read-only view of a WordNet database in the Princeton ``dict/`` format.

Parsing, offset seeking and pointer traversal are nltk's ``WordNetCorpusReader``; this module adds the checks run
when a database is ingested and the two level synonym and hyponym expansion on top of it. Lemma keys are lowercase
with underscores for spaces, and no morphological reduction is applied beyond that.
"""
import logging
import warnings
from collections.abc import Iterable, Iterator
from pathlib import Path

from nltk.corpus.reader.wordnet import Synset, WordNetCorpusReader, WordNetError

from QueryExpansion.common.errors import PipelineError

logger = logging.getLogger('qe.wordnet')

POS_FILES = {'n': 'noun', 'v': 'verb', 'a': 'adj', 'r': 'adv'}
RELATIONS = ('synonym', 'hyponym')
DATABASE_FILES = (
    *(f'data.{name}' for name in POS_FILES.values()),
    *(f'index.{name}' for name in POS_FILES.values()),
    *(f'{name}.exc' for name in POS_FILES.values()),
    'lexnames',
)
# raised by nltk's line parsers on malformed input, StopIteration turns into RuntimeError inside its generators
READER_ERRORS = (WordNetError, ValueError, KeyError, IndexError, AssertionError, StopIteration, RuntimeError)


class WordnetLoadError(PipelineError):
    def __init__(self, message: str, filename: str | Path | None = None):
        self.filename = str(filename) if filename else None
        super().__init__(f'{filename}: {message}' if filename else message)


class DictReader(WordNetCorpusReader):
    """
    ``WordNetCorpusReader`` over a bare dict directory with no Open Multilingual Wordnet data attached.
    """

    def __init__(self, root: Path):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            super().__init__(str(root), None)

    def map_wn30(self):
        # offsets are only remapped to 3.0 for multilingual lookups
        return None


def normalize_lemma(unit: str) -> str:
    return '_'.join(unit.replace('_', ' ').casefold().split())


def display_lemma(lemma: str) -> str:
    return lemma.replace('_', ' ').casefold()


def _unique(synsets: Iterable[Synset]) -> list[Synset]:
    return list(dict.fromkeys(synsets))


class LexicalStore:
    """
    Synset lookups and two level expansion over an open ``DictReader``.
    """

    def __init__(self, reader: WordNetCorpusReader, path: Path, n_synsets: int):
        self.reader = reader
        self.path = Path(path)
        self.n_synsets = n_synsets

    def __repr__(self):
        return f'<LexicalStore {self.path} synsets={self.n_synsets}>'

    @property
    def n_lemmas(self) -> int:
        return sum(1 for _ in self.reader.all_lemma_names())

    def all_synsets(self) -> Iterator[Synset]:
        return self.reader.all_synsets()

    def lookup(self, unit: str) -> list[Synset]:
        """
        Every sense, in every part of speech, whose lemmas include ``unit`` exactly.
        """
        name = normalize_lemma(unit)
        if not name:
            return []
        return _unique(lemma.synset() for lemma in self.reader.lemmas(name))

    def synonyms(self, unit: str) -> set[str]:
        """
        Lemmas sharing a synset with ``unit``, space separated and lowercase, excluding ``unit`` itself.
        """
        unit_key = normalize_lemma(unit)
        return {
            display_lemma(name)
            for s in self.lookup(unit)
            for name in s.lemma_names()
            if normalize_lemma(name) != unit_key
        }

    def two_level_terms(self, unit: str, relation: str) -> set[str]:
        """
        Terms reached from ``unit`` in at most two steps of ``relation``.

        For synonyms the second level is the synonyms of every first level synonym. For hyponyms it is the lemmas of
        the hyponyms of the first level hyponym synsets.
        """
        if relation not in RELATIONS:
            raise ValueError(f'unknown relation "{relation}", expected one of {", ".join(RELATIONS)}')
        if relation == 'synonym':
            first = self.synonyms(unit)
            second = {display_lemma(name) for term in first for s in self.lookup(term) for name in s.lemma_names()}
            terms = first | second
        else:
            level1 = _unique(h for s in self.lookup(unit) for h in s.hyponyms())
            level2 = _unique(h for s in level1 for h in s.hyponyms())
            terms = {display_lemma(name) for s in level1 + level2 for name in s.lemma_names()}
        unit_key = normalize_lemma(unit)
        return {t for t in terms if normalize_lemma(t) != unit_key}


def open_reader(path: Path) -> DictReader:
    path = Path(path)
    if not path.is_dir():
        raise WordnetLoadError('WordNet directory not found', path)
    for name in DATABASE_FILES:
        if not (path / name).exists():
            raise WordnetLoadError('required WordNet file is missing', path / name)
    try:
        return DictReader(path)
    except (OSError, LookupError, *READER_ERRORS) as e:
        raise WordnetLoadError(f'cannot read the database, {e}', path) from e


def check_database(reader: WordNetCorpusReader, path: Path) -> int:
    """
    Parses every synset and follows every hyponym pointer and index entry, returning the number of synsets.
    """
    count = 0
    with warnings.catch_warnings():
        # nltk warns and returns None for an offset with no synset, that is reported below instead
        warnings.simplefilter('ignore')
        for pos, name in POS_FILES.items():
            data_file = path / f'data.{name}'
            try:
                for synset in reader.all_synsets(pos):
                    count += 1
                    if None in synset.hyponyms():
                        raise WordnetLoadError(f'{synset.name()} points to a missing hyponym', data_file)
            except (*READER_ERRORS, AttributeError, TypeError) as e:
                raise WordnetLoadError(f'corrupt synset, {e}', data_file) from e

            index_file = path / f'index.{name}'
            for lemma in reader.all_lemma_names(pos):
                try:
                    synsets = reader.synsets(lemma, pos)
                except READER_ERRORS as e:
                    raise WordnetLoadError(f'"{lemma}" refers to a corrupt synset, {e}', index_file) from e
                if None in synsets:
                    raise WordnetLoadError(f'"{lemma}" refers to an unknown synset', index_file)
    return count


def load_wordnet(path: Path) -> LexicalStore:
    """
    Opens and checks a WordNet dict directory; a missing or corrupt file raises ``WordnetLoadError`` naming it.
    """
    path = Path(path)
    reader = open_reader(path)
    n_synsets = check_database(reader, path)
    store = LexicalStore(reader, path, n_synsets)
    logger.info('loaded %d synsets and %d lemmas from %s', n_synsets, store.n_lemmas, path)
    return store
