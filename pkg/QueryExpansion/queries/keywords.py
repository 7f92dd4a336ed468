from dataclasses import dataclass

from nltk.tag import TaggerI

from QueryExpansion.common.text import normalize_term
from QueryExpansion.queries.tagger import TaggedToken, tag_query

CONTENT_TAG_PREFIXES = ('NN', 'JJ', 'VB')


def is_content_tag(tag: str) -> bool:
    return tag.startswith(CONTENT_TAG_PREFIXES) or tag == 'CD'


@dataclass(frozen=True)
class KeywordSet:
    individuals: tuple[str, ...] = ()
    phrases: tuple[str, ...] = ()
    all_units: tuple[str, ...] = ()

    def __bool__(self):
        return bool(self.all_units)

    def is_phrase(self, unit: str) -> bool:
        return len(normalize_term(unit).split()) > 1


def _dedupe(spans: list[tuple[int, int, str]]) -> list[tuple[int, int, str]]:
    seen, kept = set(), []
    for span in spans:
        key = normalize_term(span[2])
        if key and key not in seen:
            seen.add(key)
            kept.append(span)
    return kept


def extract_keywords(tagged: list[TaggedToken]) -> KeywordSet:
    """
    Individual content words plus every contiguous sub-phrase of two or more words within each run of content words.

    Individuals keep query order; phrases are ordered shortest first then by position; all_units is ordered by
    position then length. Units are deduplicated case-insensitively.
    """
    runs, current = [], []
    for i, token in enumerate(tagged):
        if is_content_tag(token.tag) and token.normalized:
            current.append(i)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)

    singles, multis = [], []
    for run in runs:
        for start_pos, start in enumerate(run):
            singles.append((start, 1, tagged[start].surface))
            for end_pos in range(start_pos + 1, len(run)):
                words = [tagged[i].surface for i in run[start_pos : end_pos + 1]]
                multis.append((start, len(words), ' '.join(words)))

    individuals = _dedupe(singles)
    phrases = _dedupe(sorted(multis, key=lambda s: (s[1], s[0])))
    all_units = sorted(individuals + phrases, key=lambda s: (s[0], s[1]))
    return KeywordSet(
        individuals=tuple(s[2] for s in individuals),
        phrases=tuple(s[2] for s in phrases),
        all_units=tuple(s[2] for s in all_units),
    )


def prepare_query(text: str, tagger: TaggerI | None = None) -> KeywordSet:
    return extract_keywords(tag_query(text, tagger))
