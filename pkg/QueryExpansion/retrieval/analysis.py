from functools import lru_cache
from pathlib import Path

from nltk.stem.porter import PorterStemmer

from QueryExpansion.common.text import tokenize

_stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


@lru_cache(maxsize=200_000)
def stem(token: str) -> str:
    return _stemmer.stem(token)


def load_stopwords(path: Path) -> frozenset[str]:
    with open(path, encoding='utf-8') as f:
        return frozenset(w for line in f if (w := line.strip().casefold()) and not w.startswith('#'))


class Analyzer:
    """
    Turns document and query text into index terms: tokenize, drop stopwords, then Porter stem when enabled.
    Documents and queries must go through the same analyzer.
    """

    def __init__(self, stopwords: frozenset[str] = frozenset(), stemming: bool = True):
        self.stopwords = frozenset(stopwords)
        self.stemming = stemming

    def __call__(self, text: str) -> list[str]:
        tokens = [t for t in tokenize(text) if t not in self.stopwords]
        if self.stemming:
            return [stem(t) for t in tokens]
        return tokens
