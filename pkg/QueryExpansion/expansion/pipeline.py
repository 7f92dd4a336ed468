import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass, field, replace
from pathlib import Path

from django.conf import settings
from nltk.tag import TaggerI

from QueryExpansion.common.text import normalize_term
from QueryExpansion.expansion.candidates import wiki_candidates, wordnet_candidates
from QueryExpansion.expansion.scoring import correlation_score, inlink_score, wordnet_score
from QueryExpansion.queries.keywords import KeywordSet, prepare_query
from QueryExpansion.wiki.graph import GraphStore
from QueryExpansion.wiki.store import load_graph_store
from QueryExpansion.wordnet.lexicon import RELATIONS, LexicalStore
from QueryExpansion.wordnet.store import load_lexical_store

logger = logging.getLogger('qe.expansion')

SOURCES = ('wiki', 'wordnet')


@dataclass(frozen=True)
class ExpansionTerm:
    term: str
    source: str
    origin: str
    stage1_score: float
    correlation: float = 0.0
    weight: float = 0.0

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f'unknown source "{self.source}"')
        if not (math.isfinite(self.stage1_score) and math.isfinite(self.correlation)):
            raise ValueError(f'scores for "{self.term}" must be finite')


def _members(name: str, values: Iterable[str], allowed: tuple[str, ...]) -> tuple[str, ...]:
    if isinstance(values, str):
        raise ValueError(f'{name} must be a collection of names, got the string "{values}"')
    values = set(values)
    if unknown := values - set(allowed):
        raise ValueError(f'unknown {name} {", ".join(sorted(unknown))}, expected some of {", ".join(allowed)}')
    return tuple(v for v in allowed if v in values)


@dataclass(frozen=True)
class ExpansionParams:
    n_intermediate: int = 100
    m_final: int = 30
    relations: tuple[str, ...] = RELATIONS
    sources: tuple[str, ...] = SOURCES
    expansion_weight: float = 0.5
    phrase_boost: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'relations', _members('relations', self.relations, RELATIONS))
        object.__setattr__(self, 'sources', _members('sources', self.sources, SOURCES))
        if self.n_intermediate < 1:
            raise ValueError('n_intermediate must be at least 1')
        if not 1 <= self.m_final <= 2 * self.n_intermediate:
            raise ValueError(f'm_final must be between 1 and {2 * self.n_intermediate}, got {self.m_final}')
        if self.expansion_weight < 0 or self.phrase_boost < 0:
            raise ValueError('expansion_weight and phrase_boost must not be negative')

    @classmethod
    def from_settings(cls, **overrides) -> 'ExpansionParams':
        values = {**settings.EXPANSION_DEFAULTS, **{k: v for k, v in overrides.items() if v is not None}}
        return cls(**values)


@dataclass(frozen=True)
class ExpandedQuery:
    original_units: KeywordSet
    terms: tuple[ExpansionTerm, ...] = ()
    # every candidate that reached correlation scoring, best first; kept so smaller m can be taken as a prefix
    ranked: tuple[ExpansionTerm, ...] = field(default=(), repr=False)
    expansion_weight: float = 0.5

    def truncated(self, m_final: int) -> 'ExpandedQuery':
        return replace(self, terms=select_terms(self.ranked, m_final, self.expansion_weight))

    @property
    def provenance(self) -> list[dict]:
        return [
            {
                'term': t.term,
                'source': t.source,
                'origin': t.origin,
                'stage1_score': t.stage1_score,
                'correlation': t.correlation,
                'weight': t.weight,
            }
            for t in self.terms
        ]

    def original_query(self) -> list[tuple[str, float]]:
        return [(normalize_term(u), 1.0) for u in self.original_units.individuals]

    def weighted_query(self) -> list[tuple[str, float]]:
        return self.original_query() + [(t.term, t.weight) for t in self.terms]


def _rank_key(score: float, term: str):
    return -score, term


def top_n(scored: dict[str, ExpansionTerm], n: int) -> list[ExpansionTerm]:
    return sorted(scored.values(), key=lambda t: _rank_key(t.stage1_score, t.term))[:n]


def rank_terms(terms: Iterable[ExpansionTerm]) -> tuple[ExpansionTerm, ...]:
    """
    Best correlation first, ties broken by term.
    """
    return tuple(sorted(terms, key=lambda t: _rank_key(t.correlation, t.term)))


def select_terms(ranked: Iterable[ExpansionTerm], m_final: int, expansion_weight: float) -> tuple[ExpansionTerm, ...]:
    """
    The first ``m_final`` ranked terms, weighted by correlation relative to the best selected term.
    """
    chosen = list(ranked)[:m_final]
    best = max((t.correlation for t in chosen), default=0.0)
    return tuple(
        replace(t, weight=expansion_weight * (t.correlation / best if best > 0 else 1.0)) for t in chosen
    )


def _keep_best(scored: dict[str, ExpansionTerm], term: ExpansionTerm):
    current = scored.get(term.term)
    if current is None or _rank_key(term.stage1_score, term.origin) < _rank_key(current.stage1_score, current.origin):
        scored[term.term] = term


def _wiki_stage(graph, wn, keywords: KeywordSet, excluded: set[str], params: ExpansionParams) -> list[ExpansionTerm]:
    scored = {}
    for unit in keywords.all_units:
        boost = params.phrase_boost if keywords.is_phrase(unit) else 1.0
        for title in wiki_candidates(graph, unit):
            if title in excluded:
                continue
            score = inlink_score(graph, wn, unit, title) * boost
            _keep_best(scored, ExpansionTerm(title, 'wiki', unit, score))
    return top_n(scored, params.n_intermediate)


def _wordnet_stage(graph, wn, keywords: KeywordSet, excluded: set[str], params: ExpansionParams):
    scored = {}
    for unit, term in wordnet_candidates(wn, keywords, params.relations):
        term = normalize_term(term)
        if not term or term in excluded:
            continue
        boost = params.phrase_boost if keywords.is_phrase(unit) else 1.0
        score = wordnet_score(graph, term, unit) * boost
        _keep_best(scored, ExpansionTerm(term, 'wordnet', unit, score))
    return top_n(scored, params.n_intermediate)


def expand(
    graph: GraphStore,
    wn: LexicalStore,
    raw_query: str,
    params: ExpansionParams | None = None,
    tagger: TaggerI | None = None,
) -> ExpandedQuery:
    """
    Runs the full expansion for one query: candidates from both sources ranked per source, the survivors re-ranked by
    correlation with the whole query and the best ``m_final`` kept. Original query units never become expansion terms.
    """
    params = params or ExpansionParams()
    keywords = prepare_query(raw_query, tagger)
    if not keywords or not params.sources:
        return ExpandedQuery(keywords, expansion_weight=params.expansion_weight)

    excluded = {normalize_term(u) for u in keywords.all_units}
    stage1 = []
    if 'wiki' in params.sources:
        stage1 += _wiki_stage(graph, wn, keywords, excluded, params)
    if 'wordnet' in params.sources:
        stage1 += _wordnet_stage(graph, wn, keywords, excluded, params)

    merged: dict[str, ExpansionTerm] = {}
    for term in stage1:
        current = merged.get(term.term)
        # wiki entries come first so they win ties
        if current is None or term.stage1_score > current.stage1_score:
            merged[term.term] = term

    a_q = {a for unit in keywords.all_units if (a := graph.resolve_title(unit)) is not None}
    individuals = [u for u in keywords.individuals if graph.resolve_title(u) is not None]
    if individuals:
        scored = [replace(t, correlation=correlation_score(graph, t.term, individuals, a_q)) for t in merged.values()]
    else:
        logger.warning('no word of "%s" has a Wikipedia article, candidates are ranked by name only', raw_query)
        scored = list(merged.values())

    ranked = rank_terms(scored)
    kept = min(len(ranked), params.m_final)
    logger.debug('"%s": %d candidates after stage one, %d kept', raw_query, len(ranked), kept)
    return ExpandedQuery(
        original_units=keywords,
        terms=select_terms(ranked, params.m_final, params.expansion_weight),
        ranked=ranked,
        expansion_weight=params.expansion_weight,
    )


def load_stores(store_root: Path) -> tuple[GraphStore, LexicalStore]:
    store_root = Path(store_root)
    return load_graph_store(store_root / 'wiki'), load_lexical_store(store_root / 'wordnet')
