import math
from collections import defaultdict
from collections.abc import Iterable

from django.conf import settings

from QueryExpansion.common.errors import PipelineError
from QueryExpansion.retrieval.index import InvertedIndex
from QueryExpansion.retrieval.trec import RunEntry


class UnknownModel(PipelineError):
    pass


def bm25(tf: int, df: int, doc_length: int, index: InvertedIndex, k1: float, b: float) -> float:
    idf = math.log(1 + (index.n_docs - df + 0.5) / (df + 0.5))
    norm = k1 * (1 - b + b * doc_length / index.avg_doc_length) if index.avg_doc_length else k1
    return idf * tf * (k1 + 1) / (tf + norm)


def tfidf(tf: int, df: int, doc_length: int, index: InvertedIndex, k1: float, b: float) -> float:
    return tf * math.log(1 + index.n_docs / df)


MODELS = {'bm25': bm25, 'tfidf': tfidf}


def query_term_weights(index: InvertedIndex, weighted_query: Iterable[tuple[str, float]]) -> dict[str, float]:
    """
    Analyses each query term like the documents were; weights of terms that analyse to the same index term add up.
    """
    weights: dict[str, float] = defaultdict(float)
    for term, weight in weighted_query:
        for index_term in index.analyzer(term):
            weights[index_term] += weight
    return {t: w for t, w in weights.items() if w > 0}


def search(
    index: InvertedIndex,
    weighted_query: Iterable[tuple[str, float]],
    model: str = 'bm25',
    k: int | None = None,
    k1: float | None = None,
    b: float | None = None,
) -> list[RunEntry]:
    """
    Ranks documents by the sum over query terms of weight times the model's term score; ties go to the smaller DOCNO.
    """
    defaults = settings.RETRIEVAL_DEFAULTS
    k = defaults['depth'] if k is None else k
    k1 = defaults['k1'] if k1 is None else k1
    b = defaults['b'] if b is None else b
    if k < 1:
        raise ValueError('k must be at least 1')
    try:
        term_score = MODELS[model]
    except KeyError as e:
        raise UnknownModel(f'unknown retrieval model "{model}", choose from {", ".join(MODELS)}') from e

    scores: dict[int, float] = defaultdict(float)
    for term, weight in query_term_weights(index, weighted_query).items():
        postings = index.postings.get(term)
        if not postings:
            continue
        df = len(postings)
        for doc, tf in postings:
            scores[doc] += weight * term_score(tf, df, index.doc_lengths[doc], index, k1, b)

    ranked = sorted(scores.items(), key=lambda item: (-item[1], index.docnos[item[0]]))[:k]
    return [RunEntry(index.docnos[doc], rank, score) for rank, (doc, score) in enumerate(ranked, start=1)]
