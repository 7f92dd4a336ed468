"""
Readers and writers for the TREC style files the retrieval step exchanges: SGML document collections, topic files,
four column qrels and six column run files.
"""
import logging
import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType

from QueryExpansion.common.errors import ParseError, PipelineError

logger = logging.getLogger('qe.retrieval')

_DOC_RE = re.compile(r'<DOC>(.*?)</DOC>', re.S | re.I)
_DOCNO_RE = re.compile(r'<DOCNO>\s*(.*?)\s*</DOCNO>', re.S | re.I)
_TEXT_RE = re.compile(r'<TEXT>(.*?)</TEXT>', re.S | re.I)
_TAG_RE = re.compile(r'<[^>]+>')
_TOP_RE = re.compile(r'<top\b[^>]*>(.*?)</top>', re.S | re.I)
_NUM_RE = re.compile(r'<num>\s*(?:Number:)?\s*(\d+)\s*(?:</num>)?', re.I)
_TITLE_RE = re.compile(r'<title>\s*(.*?)\s*(?:</title>|(?=<\w+>)|$)', re.S | re.I)


class IndexBuildError(PipelineError):
    pass


@dataclass(frozen=True)
class Topic:
    topic_id: int
    title: str


@dataclass(frozen=True)
class RunEntry:
    docno: str
    rank: int
    score: float


class QRels:
    """
    Relevance judgments keyed by (topic, DOCNO); grades of 1 or more count as relevant.
    """

    def __init__(self, judgments: dict[tuple[int, str], int]):
        self.judgments = MappingProxyType(dict(judgments))
        by_topic: dict[int, dict[str, int]] = {}
        for (topic_id, docno), grade in self.judgments.items():
            by_topic.setdefault(topic_id, {})[docno] = grade
        self._by_topic = by_topic

    def __repr__(self):
        return f'<QRels topics={len(self._by_topic)} judgments={len(self.judgments)}>'

    @property
    def topics(self) -> list[int]:
        return sorted(self._by_topic)

    def judged(self, topic_id: int) -> dict[str, int]:
        return self._by_topic.get(topic_id, {})

    def relevant(self, topic_id: int) -> set[str]:
        return {d for d, g in self.judged(topic_id).items() if g >= 1}

    def nonrelevant(self, topic_id: int) -> set[str]:
        return {d for d, g in self.judged(topic_id).items() if g < 1}


def _line_of(text: str, pos: int) -> int:
    return text.count('\n', 0, pos) + 1


def iter_documents(text: str) -> Iterator[tuple[str, str]]:
    """
    Yields (DOCNO, text) for each <DOC>; the text is every <TEXT> section with inner markup removed.
    """
    previous = None
    end = 0
    for m in _DOC_RE.finditer(text):
        stray = text.find('<DOC>', end, m.start())
        if stray != -1:
            raise IndexBuildError(f'unterminated <DOC> after DOCNO {previous} (line {_line_of(text, stray)})')
        body = m.group(1)
        docno_match = _DOCNO_RE.search(body)
        if not docno_match or not docno_match.group(1):
            raise IndexBuildError(f'document without DOCNO after DOCNO {previous} (line {_line_of(text, m.start())})')
        docno = docno_match.group(1)
        if len(re.findall(r'<TEXT>', body, re.I)) != len(re.findall(r'</TEXT>', body, re.I)):
            raise IndexBuildError(f'DOCNO {docno}: unterminated <TEXT>')
        yield docno, ' '.join(_TAG_RE.sub(' ', t) for t in _TEXT_RE.findall(body))
        previous = docno
        end = m.end()
    if text.find('<DOC>', end) != -1:
        raise IndexBuildError(f'unterminated <DOC> after DOCNO {previous}')


def parse_topics(path: Path) -> list[Topic]:
    text = Path(path).read_text(encoding='utf-8', errors='replace')
    topics = []
    for m in _TOP_RE.finditer(text):
        block, line = m.group(1), _line_of(text, m.start())
        num = _NUM_RE.search(block)
        if not num:
            raise ParseError('topic without <num>', line, path)
        title = _TITLE_RE.search(block)
        if not title or not _TAG_RE.sub(' ', title.group(1)).strip():
            raise ParseError(f'topic {num.group(1)} has no <title>', line, path)
        topics.append(Topic(int(num.group(1)), ' '.join(_TAG_RE.sub(' ', title.group(1)).split())))
    return topics


def parse_qrels(path: Path) -> QRels:
    judgments: dict[tuple[int, str], int] = {}
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            parts = line.split()
            try:
                topic_id, _, docno, grade = int(parts[0]), parts[1], parts[2], int(parts[3])
            except (IndexError, ValueError) as e:
                raise ParseError('expected "topic iteration DOCNO grade"', lineno, path) from e
            if len(parts) != 4:
                raise ParseError('expected exactly four columns', lineno, path)
            key = (topic_id, docno)
            if key in judgments:
                if judgments[key] != grade:
                    raise ParseError(f'conflicting grades for topic {topic_id} document {docno}', lineno, path)
                logger.warning('%s:%d repeats the judgment for topic %d document %s', path, lineno, topic_id, docno)
            judgments[key] = grade
    return QRels(judgments)


def write_run(path: Path, run: dict[int, list[RunEntry]], tag: str):
    with open(path, 'w', encoding='utf-8') as f:
        for line in iter_run_lines(run, tag):
            f.write(line + '\n')


def read_run(path: Path) -> dict[int, list[RunEntry]]:
    """
    Reads a six column run file; each topic is re-sorted by rank and must not list a document twice.
    """
    run: dict[int, list[RunEntry]] = {}
    seen: set[tuple[int, str]] = set()
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            parts = line.split()
            try:
                topic_id, docno, rank, score = int(parts[0]), parts[2], int(parts[3]), float(parts[4])
            except (IndexError, ValueError) as e:
                raise ParseError('expected "topic Q0 DOCNO rank score tag"', lineno, path) from e
            if (topic_id, docno) in seen:
                raise ParseError(f'document {docno} listed twice for topic {topic_id}', lineno, path)
            seen.add((topic_id, docno))
            run.setdefault(topic_id, []).append(RunEntry(docno, rank, score))
    return {t: sorted(entries, key=lambda e: e.rank) for t, entries in run.items()}


def iter_run_lines(run: dict[int, Iterable[RunEntry]], tag: str) -> Iterator[str]:
    for topic_id in sorted(run):
        for entry in run[topic_id]:
            yield f'{topic_id} Q0 {entry.docno} {entry.rank} {entry.score:.6f} {tag}'
