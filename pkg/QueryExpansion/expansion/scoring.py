"""
The four scores used to rank expansion terms.

Stage one ranks Wikipedia candidates by how often the candidate article mentions the query unit (or its synonyms),
weighted by the idf of the candidate title, and WordNet candidates by how often the unit's own article mentions them.
Stage two re-scores every surviving candidate by its correlation with the whole query over the query's articles.
"""
import logging
import math
from collections.abc import Iterable

from QueryExpansion.common.errors import PipelineError
from QueryExpansion.common.text import normalize_term
from QueryExpansion.wiki.graph import ArticleId, GraphStore, InvalidArticle
from QueryExpansion.wordnet.lexicon import LexicalStore

logger = logging.getLogger('qe.expansion')


class CorrelationUndefined(PipelineError):
    pass


def inlink_score(graph: GraphStore, wn: LexicalStore, unit: str, candidate: str) -> float:
    a = graph.resolve_title(candidate)
    if a is None:
        raise InvalidArticle(f'candidate "{candidate}" has no article')
    terms = {normalize_term(unit)} | wn.synonyms(unit)
    tf = graph.term_frequency(a, terms)
    if not tf:
        return 0.0
    idf = graph.idf(candidate)
    if idf.df_substituted:
        logger.debug('title "%s" occurs in no article, using ln N as its idf', candidate)
    return tf * idf.value


def wordnet_score(graph: GraphStore, candidate: str, unit: str) -> float:
    a = graph.resolve_title(unit)
    if a is None:
        logger.debug('"%s" has no article, WordNet term "%s" scores 0', unit, candidate)
        return 0.0
    tf = graph.term_frequency(a, {candidate})
    if not tf:
        return 0.0
    return tf * graph.idf(candidate).value


def article_term_weight(graph: GraphStore, term: str, a_t: ArticleId, a_q: Iterable[ArticleId]) -> float:
    """
    tf of ``term`` in ``a_t`` times its inverse term frequency over the query articles ``a_q``.
    """
    a_q = set(a_q)
    if a_t not in a_q:
        raise ValueError(f'article {a_t} is not one of the query articles')
    tf = graph.term_frequency(a_t, {term})
    if not tf:
        return 0.0
    total = sum(graph.term_frequency(a, {term}) for a in a_q)
    return tf * math.log(total / tf)


def correlation_score(graph: GraphStore, candidate: str, query_units: Iterable[str], a_q: Iterable[ArticleId]) -> float:
    """
    Mean over resolvable query units t of w(t, a_t) * w(candidate, a_t); units without an article are left out of
    both the sum and the count.
    """
    a_q = set(a_q)
    resolved = [(unit, a) for unit in query_units if (a := graph.resolve_title(unit)) is not None]
    if not resolved:
        raise CorrelationUndefined('correlation undefined: no query unit has a Wikipedia article')
    total = 0.0
    for unit, a_t in resolved:
        total += article_term_weight(graph, unit, a_t, a_q) * article_term_weight(graph, candidate, a_t, a_q)
    return total / len(resolved)
