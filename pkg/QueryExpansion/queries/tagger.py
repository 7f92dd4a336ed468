"""
Part-of-speech tagging for short keyword queries.

Tags come from a word/tag lexicon with a suffix and shape based backoff, which is enough to separate content words
from function words in topic titles. Queries already tagged as ``word_TAG`` tokens bypass the tagger.
"""
import logging
import re
from dataclasses import dataclass
from functools import cache
from pathlib import Path

from django.conf import settings
from nltk.tag import RegexpTagger, TaggerI, UnigramTagger
from nltk.tag.util import str2tuple

from QueryExpansion.common.errors import ParseError
from QueryExpansion.common.text import normalize_term, split_words

logger = logging.getLogger('qe.queries')

BACKOFF_RULES = [
    (r'^-?\d+(?:[.,]\d+)*$', 'CD'),
    (r'^[A-Z]', 'NNP'),
    (r'.*ing$', 'VBG'),
    (r'.*ed$', 'VBD'),
    (r'.*(?:ous|ful|able|ible|ive)$', 'JJ'),
    (r'.*s$', 'NNS'),
    (r'.*', 'NN'),
]
_PRETAGGED_RE = re.compile(r'^\S+_[A-Z$]+$')


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    normalized: str
    tag: str


class LexiconTagger(UnigramTagger):
    """
    Looks words up case-insensitively, so a capitalised first word of a title still finds its lexicon tag.
    """

    def context(self, tokens, index, history):
        return tokens[index].casefold()


def load_lexicon(path: Path) -> dict[str, str]:
    lexicon = {}
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith('#'):
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ParseError('expected "word TAG"', lineno, path)
            lexicon.setdefault(parts[0].casefold(), parts[1])
    return lexicon


@cache
def default_tagger(lexicon_path: str | None = None) -> TaggerI:
    path = Path(lexicon_path or settings.TAGGER_LEXICON_PATH)
    lexicon = load_lexicon(path)
    logger.debug('loaded %d tagger lexicon entries from %s', len(lexicon), path)
    return LexiconTagger(model=lexicon, backoff=RegexpTagger(BACKOFF_RULES))


def is_pretagged(text: str) -> bool:
    words = text.split()
    return bool(words) and all(_PRETAGGED_RE.match(w) for w in words)


def parse_pretagged(text: str) -> list[TaggedToken]:
    tagged = []
    for word in text.split():
        surface, tag = str2tuple(word, sep='_')
        if not tag:
            raise ParseError(f'token "{word}" has no tag')
        tagged.append(TaggedToken(surface, normalize_term(surface), tag))
    return tagged


def pos_tag(tokens: list[str], tagger: TaggerI | None = None) -> list[TaggedToken]:
    tagger = tagger or default_tagger()
    return [TaggedToken(word, normalize_term(word), tag or 'NN') for word, tag in tagger.tag(tokens)]


def tag_query(text: str, tagger: TaggerI | None = None) -> list[TaggedToken]:
    if is_pretagged(text):
        return parse_pretagged(text)
    return pos_tag(split_words(text), tagger)
