"""
A lexical store is a checked copy of the WordNet dict files with a manifest, so expansion runs open a database whose
files have not changed since ingestion and skip the full check.
"""
import logging
import shutil
from pathlib import Path

from QueryExpansion.common.artifacts import read_manifest, staged_directory, write_manifest
from QueryExpansion.wordnet.lexicon import DATABASE_FILES, LexicalStore, open_reader

logger = logging.getLogger('qe.wordnet')

STORE_FORMAT = 'qe-lexical-store'
STORE_VERSION = 2


def save_lexical_store(store: LexicalStore, target: Path) -> Path:
    with staged_directory(Path(target)) as directory:
        for name in DATABASE_FILES:
            shutil.copyfile(store.path / name, directory / name)
        write_manifest(
            directory,
            STORE_FORMAT,
            STORE_VERSION,
            DATABASE_FILES,
            n_synsets=store.n_synsets,
            n_lemmas=store.n_lemmas,
        )
    logger.info('wrote lexical store with %d synsets to %s', store.n_synsets, target)
    return Path(target)


def load_lexical_store(directory: Path, verify: bool = True) -> LexicalStore:
    directory = Path(directory)
    manifest = read_manifest(directory, STORE_FORMAT, STORE_VERSION, verify=verify)
    return LexicalStore(open_reader(directory), directory, manifest['n_synsets'])
