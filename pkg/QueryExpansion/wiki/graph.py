import logging
import math
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import NamedTuple

from QueryExpansion.common.errors import PipelineError
from QueryExpansion.common.text import normalize_title, tokenize

logger = logging.getLogger('qe.wiki')

ArticleId = int


class InvalidArticle(PipelineError, LookupError):
    pass


class Idf(NamedTuple):
    value: float
    # True when the term occurs in no article and ln N was used in place of ln(N / 0)
    df_substituted: bool


@dataclass(frozen=True)
class Article:
    id: ArticleId
    title: str
    display_title: str
    body: str
    # normalised titles in wikitext order, before redirect resolution
    link_targets: tuple[str, ...]
    tokens: tuple[str, ...] = field(repr=False)


class GraphStore:
    """
    Read-only view of the Wikipedia link graph and article term statistics.

    Articles are densely numbered in dump order. ``title_index`` maps normalised article titles and redirect titles
    to the article they resolve to. Out-links are the redirect resolved, deduplicated link targets of each article;
    in-links are derived from them so the two always agree. Term statistics are counted from the tokens each article
    carries, so building a store never tokenizes a body again.
    """

    def __init__(
        self,
        articles: Sequence[Article],
        title_index: dict[str, ArticleId],
        out_adj: Sequence[Iterable[ArticleId]],
        stats: dict | None = None,
    ):
        self.articles = tuple(articles)
        self.n_articles = len(self.articles)
        self.title_index = MappingProxyType(dict(title_index))
        self.out_adj = tuple(frozenset(targets) for targets in out_adj)
        if len(self.out_adj) != self.n_articles:
            raise ValueError('out_adj must have one entry per article')
        in_adj = [set() for _ in range(self.n_articles)]
        for x, targets in enumerate(self.out_adj):
            for y in targets:
                in_adj[y].add(x)
        self.in_adj = tuple(frozenset(s) for s in in_adj)
        self.stats = MappingProxyType(dict(stats or {}))

        self._counts = tuple(Counter(a.tokens) for a in self.articles)
        docs = defaultdict(list)
        for x, counts in enumerate(self._counts):
            for term in counts:
                docs[term].append(x)
        self._term_docs = {term: tuple(ids) for term, ids in docs.items()}
        self.df_table = MappingProxyType({term: len(ids) for term, ids in self._term_docs.items()})
        self._phrase_df: dict[tuple[str, ...], int] = {}

    def __repr__(self):
        return f'<GraphStore articles={self.n_articles} titles={len(self.title_index)}>'

    def _check(self, x: ArticleId):
        if not isinstance(x, int) or not 0 <= x < self.n_articles:
            raise InvalidArticle(f'unknown article id {x!r}')

    def title(self, x: ArticleId) -> str:
        self._check(x)
        return self.articles[x].title

    def resolve_title(self, title: str) -> ArticleId | None:
        return self.title_index.get(normalize_title(title))

    def out_links(self, x: ArticleId) -> frozenset[ArticleId]:
        self._check(x)
        return self.out_adj[x]

    def in_links(self, x: ArticleId) -> frozenset[ArticleId]:
        self._check(x)
        return self.in_adj[x]

    def _phrase_count(self, x: ArticleId, phrase: tuple[str, ...]) -> int:
        tokens = self.articles[x].tokens
        width = len(phrase)
        first = phrase[0]
        return sum(
            1 for i in range(len(tokens) - width + 1) if tokens[i] == first and tokens[i : i + width] == phrase
        )

    def term_frequency(self, x: ArticleId, terms: Iterable[str]) -> int:
        """
        Total occurrences in article ``x`` of any of ``terms``; multi-word terms count contiguous matches.
        """
        self._check(x)
        phrases = {tuple(tokenize(t)) for t in terms}
        if not phrases:
            raise ValueError('term_frequency needs at least one term')
        counts = self._counts[x]
        total = 0
        for phrase in phrases:
            if len(phrase) == 1:
                total += counts[phrase[0]]
            elif phrase:
                total += self._phrase_count(x, phrase)
        return total

    def document_frequency(self, term: str) -> int:
        phrase = tuple(tokenize(term))
        if not phrase:
            return 0
        if len(phrase) == 1:
            return self.df_table.get(phrase[0], 0)
        if phrase not in self._phrase_df:
            postings = sorted((self._term_docs.get(t, ()) for t in set(phrase)), key=len)
            candidates = set(postings[0]).intersection(*postings[1:])
            self._phrase_df[phrase] = sum(1 for x in candidates if self._phrase_count(x, phrase))
        return self._phrase_df[phrase]

    def idf(self, term: str) -> Idf:
        """
        ln(N / df); a term found in no article is treated as if df were 1.
        """
        df = self.document_frequency(term)
        if df == 0:
            return Idf(math.log(self.n_articles) if self.n_articles else 0.0, True)
        return Idf(math.log(self.n_articles / df), False)
