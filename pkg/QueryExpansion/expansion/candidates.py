from collections.abc import Iterable

from QueryExpansion.common.text import normalize_term
from QueryExpansion.queries.keywords import KeywordSet
from QueryExpansion.wiki.graph import GraphStore
from QueryExpansion.wordnet.lexicon import RELATIONS, LexicalStore


def wiki_candidates(graph: GraphStore, unit: str) -> set[str]:
    """
    Titles of the articles that both link to and are linked from the unit's article.
    """
    a = graph.resolve_title(unit)
    if a is None:
        return set()
    return {graph.title(y) for y in graph.out_links(a) & graph.in_links(a) if y != a}


def _expanded_individuals(wn: LexicalStore, keywords: KeywordSet) -> list[str]:
    covered = set()
    for phrase in keywords.phrases:
        if wn.lookup(phrase):
            covered.update(normalize_term(phrase).split())
    return [unit for unit in keywords.individuals if normalize_term(unit) not in covered]


def wordnet_units(wn: LexicalStore, keywords: KeywordSet) -> list[str]:
    """
    Phrases found in WordNet, then every individual word not already covered by such a phrase.
    """
    phrases = [p for p in keywords.phrases if wn.lookup(p)]
    return phrases + _expanded_individuals(wn, keywords)


def wordnet_candidates(
    wn: LexicalStore, keywords: KeywordSet, relations: Iterable[str] = RELATIONS
) -> set[tuple[str, str]]:
    candidates = set()
    for unit in wordnet_units(wn, keywords):
        for relation in relations:
            candidates.update((unit, term) for term in wn.two_level_terms(unit, relation))
    return candidates
