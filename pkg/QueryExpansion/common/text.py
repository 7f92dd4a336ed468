import re

WORD_RE = re.compile(r'[^\W_]+')
_SPACE_RE = re.compile(r'\s+')


def split_words(text: str) -> list[str]:
    """
    Splits text on whitespace and punctuation keeping the surface form of each word.
    """
    return WORD_RE.findall(text)


def tokenize(text: str) -> list[str]:
    """
    The tokenizer shared by article bodies, query units and the retrieval analyzer: alphanumeric runs, case-folded.
    """
    return [w.casefold() for w in WORD_RE.findall(text)]


def normalize_term(term: str) -> str:
    return ' '.join(tokenize(term))


def normalize_title(title: str) -> str:
    """
    Wikipedia titles treat underscores as spaces and ignore case for lookup purposes.
    """
    return _SPACE_RE.sub(' ', title.replace('_', ' ')).strip().casefold()
