"""
Inverted index over a TREC collection, stored as:

    manifest.json  format, version, document count, analyzer settings and checksums
    docs.tsv       DOCNO, tab, document length; line order is the internal document number
    postings.tsv   term, tab, space separated doc:tf pairs; sorted by term
    stopwords.txt  the stopword list the index was built with, so queries are analysed the same way
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import TextIO

from QueryExpansion.common.artifacts import read_manifest, staged_directory, write_manifest
from QueryExpansion.common.errors import StoreFormatError
from QueryExpansion.retrieval.analysis import Analyzer
from QueryExpansion.retrieval.trec import IndexBuildError, iter_documents

logger = logging.getLogger('qe.retrieval')

INDEX_FORMAT = 'qe-inverted-index'
INDEX_VERSION = 1


@dataclass(frozen=True)
class InvertedIndex:
    postings: MappingProxyType
    doc_lengths: tuple[int, ...]
    docnos: tuple[str, ...]
    stopwords: frozenset[str] = frozenset()
    stemming: bool = True
    analyzer: Analyzer = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'analyzer', Analyzer(self.stopwords, self.stemming))

    @property
    def n_docs(self) -> int:
        return len(self.docnos)

    @property
    def avg_doc_length(self) -> float:
        return sum(self.doc_lengths) / self.n_docs if self.n_docs else 0.0

    def document_frequency(self, term: str) -> int:
        return len(self.postings.get(term, ()))


def build_index(corpus: TextIO | str, stopwords: frozenset[str] = frozenset(), stemming: bool = True) -> InvertedIndex:
    text = corpus if isinstance(corpus, str) else corpus.read()
    analyzer = Analyzer(stopwords, stemming)
    postings: dict[str, list[tuple[int, int]]] = defaultdict(list)
    docnos, lengths, seen = [], [], set()
    for docno, body in iter_documents(text):
        if docno in seen:
            raise IndexBuildError(f'duplicate DOCNO {docno}')
        seen.add(docno)
        terms = analyzer(body)
        doc = len(docnos)
        for term, tf in sorted(Counter(terms).items()):
            postings[term].append((doc, tf))
        docnos.append(docno)
        lengths.append(len(terms))
    if not docnos:
        raise IndexBuildError('the corpus contains no documents')
    logger.info('indexed %d documents, %d terms', len(docnos), len(postings))
    return InvertedIndex(
        postings=MappingProxyType({t: tuple(p) for t, p in postings.items()}),
        doc_lengths=tuple(lengths),
        docnos=tuple(docnos),
        stopwords=frozenset(stopwords),
        stemming=stemming,
    )


def save_index(index: InvertedIndex, target: Path) -> Path:
    with staged_directory(Path(target)) as directory:
        with open(directory / 'docs.tsv', 'w', encoding='utf-8') as f:
            for docno, length in zip(index.docnos, index.doc_lengths):
                f.write(f'{docno}\t{length}\n')
        with open(directory / 'postings.tsv', 'w', encoding='utf-8') as f:
            for term in sorted(index.postings):
                f.write(f'{term}\t{" ".join(f"{d}:{tf}" for d, tf in index.postings[term])}\n')
        (directory / 'stopwords.txt').write_text(''.join(f'{w}\n' for w in sorted(index.stopwords)), encoding='utf-8')
        write_manifest(
            directory,
            INDEX_FORMAT,
            INDEX_VERSION,
            ['docs.tsv', 'postings.tsv', 'stopwords.txt'],
            n_docs=index.n_docs,
            n_terms=len(index.postings),
            stemming=index.stemming,
        )
    return Path(target)


def load_index(directory: Path, verify: bool = True) -> InvertedIndex:
    directory = Path(directory)
    manifest = read_manifest(directory, INDEX_FORMAT, INDEX_VERSION, verify=verify)
    docnos, lengths = [], []
    with open(directory / 'docs.tsv', encoding='utf-8') as f:
        for line in f:
            docno, _, length = line.rstrip('\n').partition('\t')
            docnos.append(docno)
            lengths.append(int(length))
    postings = {}
    with open(directory / 'postings.tsv', encoding='utf-8') as f:
        for line in f:
            term, _, pairs = line.rstrip('\n').partition('\t')
            postings[term] = tuple((int(d), int(tf)) for d, _, tf in (p.partition(':') for p in pairs.split()))
    if len(docnos) != manifest['n_docs']:
        raise StoreFormatError(f'{directory}: manifest lists {manifest["n_docs"]} documents, found {len(docnos)}')
    stopwords = frozenset((directory / 'stopwords.txt').read_text(encoding='utf-8').split())
    return InvertedIndex(
        postings=MappingProxyType(postings),
        doc_lengths=tuple(lengths),
        docnos=tuple(docnos),
        stopwords=stopwords,
        stemming=manifest['stemming'],
    )
