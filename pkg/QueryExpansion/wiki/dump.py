"""
Streaming reader for MediaWiki XML export dumps.

The dump is fed to an lxml pull parser in fixed size chunks so memory stays flat regardless of dump size, and so a
syntax error can be reported against the byte offset where parsing stopped.
"""
import bz2
import logging
import re
from collections.abc import Iterator
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

import mwparserfromhell
from lxml import etree

from QueryExpansion.common.errors import PipelineError
from QueryExpansion.common.text import normalize_title, tokenize

logger = logging.getLogger('qe.wiki')

ARTICLE_NS = 0
REDIRECT_RE = re.compile(r'^\s*#REDIRECT\s*:?\s*\[\[([^\]|#]+)', re.IGNORECASE)
# Link prefixes that point outside the main namespace; [[:Category:X]] style links start with a colon.
NAMESPACE_PREFIXES = {
    'category',
    'file',
    'help',
    'image',
    'media',
    'mediawiki',
    'module',
    'portal',
    'draft',
    'special',
    'talk',
    'template',
    'user',
    'wikipedia',
    'wiktionary',
    'wikt',
    'wp',
}


class IngestError(PipelineError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        super().__init__(message if offset is None else f'{message} (byte offset {offset})')


@dataclass(frozen=True)
class Page:
    title: str
    ns: int
    text: str
    redirect: str | None = None

    @property
    def is_article(self):
        return self.ns == ARTICLE_NS and self.redirect is None


@dataclass(frozen=True)
class ParsedArticle:
    title: str
    body: str
    link_targets: tuple[str, ...]
    tokens: tuple[str, ...]


@dataclass
class IngestStats:
    pages: int = 0
    articles: int = 0
    redirects: int = 0
    other_namespaces: int = 0
    duplicate_titles: int = 0
    links: int = 0
    dangling_links: int = 0
    bytes_read: int = 0

    def as_dict(self):
        return {
            'pages': self.pages,
            'articles': self.articles,
            'redirects': self.redirects,
            'other_namespaces': self.other_namespaces,
            'duplicate_titles': self.duplicate_titles,
            'links': self.links,
            'dangling_links': self.dangling_links,
        }


def open_dump(path: Path) -> BinaryIO:
    path = Path(path)
    return bz2.open(path, 'rb') if path.suffix == '.bz2' else open(path, 'rb')


def _local(tag) -> str:
    return etree.QName(tag).localname if isinstance(tag, str) else ''


def _error_offset(chunk_start: int, chunk: bytes, lines_before: int, exc: etree.XMLSyntaxError) -> int:
    line, column = exc.position if exc.position else (0, 0)
    line_in_chunk = line - lines_before - 1
    if line_in_chunk < 0:
        return chunk_start
    pos = 0
    for _ in range(line_in_chunk):
        nl = chunk.find(b'\n', pos)
        if nl == -1:
            return chunk_start + len(chunk)
        pos = nl + 1
    return chunk_start + min(pos + max(column - 1, 0), len(chunk))


def read_page(element) -> Page:
    title = element.findtext('{*}title') or ''
    ns_text = (element.findtext('{*}ns') or '0').strip()
    text = element.findtext('{*}revision/{*}text') or ''
    redirect = None
    redirect_el = element.find('{*}redirect')
    if redirect_el is not None:
        redirect = redirect_el.get('title') or ''
    if not redirect and (m := REDIRECT_RE.match(text)):
        redirect = m.group(1)
    return Page(title=title, ns=int(ns_text) if ns_text.lstrip('-').isdigit() else -1, text=text, redirect=redirect)


def iter_pages(stream: BinaryIO, chunk_size: int = 1 << 20, stats: IngestStats | None = None) -> Iterator[Page]:
    """
    Yields every <page> of the dump in document order, releasing each element once read.
    """
    parser = etree.XMLPullParser(events=('end',), huge_tree=True, resolve_entities=False)
    offset = 0
    lines_before = 0
    while True:
        chunk = stream.read(chunk_size)
        if not chunk:
            break
        try:
            parser.feed(chunk)
            events = list(parser.read_events())
        except etree.XMLSyntaxError as e:
            raise IngestError(f'malformed dump XML: {e}', _error_offset(offset, chunk, lines_before, e)) from e
        offset += len(chunk)
        lines_before += chunk.count(b'\n')
        if stats:
            stats.bytes_read = offset
        for _, element in events:
            if _local(element.tag) != 'page':
                continue
            yield read_page(element)
            element.clear()
            parent = element.getparent()
            if parent is not None:
                while element.getprevious() is not None:
                    del parent[0]
    if offset == 0:
        raise IngestError('no content articles: the dump is empty')
    try:
        parser.close()
    except etree.XMLSyntaxError as e:
        raise IngestError(f'malformed dump XML: {e}', offset) from e


def _is_namespaced(target: str) -> bool:
    if target.startswith(':'):
        return True
    prefix, sep, _ = target.partition(':')
    return bool(sep) and prefix.strip().casefold() in NAMESPACE_PREFIXES


def parse_article(page: Page) -> ParsedArticle:
    """
    Extracts the plain text body and the normalised link targets of an article.

    Section anchors are dropped from link targets and links into other namespaces are ignored and removed from the
    body. Templates, tables and markup are stripped.
    """
    wikicode = mwparserfromhell.parse(page.text)
    targets = []
    for link in wikicode.filter_wikilinks():
        target = str(link.title).split('#', 1)[0]
        if _is_namespaced(target):
            try:
                wikicode.remove(link)
            except ValueError:
                pass
            continue
        target = normalize_title(target)
        if target:
            targets.append(target)
    body = wikicode.strip_code(normalize=True, collapse=True)
    return ParsedArticle(
        title=page.title,
        body=body,
        link_targets=tuple(dict.fromkeys(targets)),
        tokens=tuple(tokenize(body)),
    )
