import logging
import time
from collections.abc import Iterator
from multiprocessing import Pool
from typing import BinaryIO

from QueryExpansion.common.text import normalize_title
from QueryExpansion.wiki.dump import IngestError, IngestStats, Page, ParsedArticle, iter_pages, parse_article
from QueryExpansion.wiki.graph import Article, GraphStore

logger = logging.getLogger('qe.wiki')

MAX_REDIRECT_HOPS = 8
PROGRESS_EVERY = 10_000


def _article_pages(pages: Iterator[Page], redirects: dict[str, str], stats: IngestStats) -> Iterator[Page]:
    for page in pages:
        stats.pages += 1
        if page.ns != 0:
            stats.other_namespaces += 1
        elif page.redirect is not None:
            stats.redirects += 1
            source, target = normalize_title(page.title), normalize_title(page.redirect)
            if source and target:
                redirects.setdefault(source, target)
        else:
            yield page


def _parse_all(pages: Iterator[Page], workers: int) -> Iterator[ParsedArticle]:
    if workers <= 1:
        yield from map(parse_article, pages)
        return
    # imap keeps dump order so article ids do not depend on the number of workers
    with Pool(workers) as pool:
        yield from pool.imap(parse_article, pages, chunksize=64)


def _resolve_redirects(title_index: dict[str, int], redirects: dict[str, str]):
    for source, target in redirects.items():
        if source in title_index:
            # a real article wins over a redirect of the same name
            continue
        hops = 0
        while target not in title_index and target in redirects and hops < MAX_REDIRECT_HOPS:
            target = redirects[target]
            hops += 1
        if target in title_index:
            title_index[source] = title_index[target]
        else:
            logger.debug('redirect "%s" does not reach an article', source)


def build_graph_store(stream: BinaryIO, workers: int = 1, chunk_size: int = 1 << 20) -> tuple[GraphStore, IngestStats]:
    """
    Reads a MediaWiki dump and builds the link graph and term statistics.

    Only main namespace pages that are not redirects become articles. Link targets are resolved through redirects;
    targets that do not reach an article are dropped and counted as dangling.
    """
    stats = IngestStats()
    redirects: dict[str, str] = {}
    articles: list[Article] = []
    title_index: dict[str, int] = {}
    start = time.perf_counter()

    pages = _article_pages(iter_pages(stream, chunk_size=chunk_size, stats=stats), redirects, stats)
    for parsed in _parse_all(pages, workers):
        key = normalize_title(parsed.title)
        if not key or key in title_index:
            stats.duplicate_titles += 1
            logger.warning('skipping duplicate article title "%s"', parsed.title)
            continue
        x = len(articles)
        title_index[key] = x
        articles.append(
            Article(
                id=x,
                title=key,
                display_title=parsed.title,
                body=parsed.body,
                link_targets=parsed.link_targets,
                tokens=parsed.tokens,
            )
        )
        if len(articles) % PROGRESS_EVERY == 0:
            elapsed = time.perf_counter() - start
            logger.info(
                '%d articles, %0.1f MB read, %0.0f pages/s',
                len(articles),
                stats.bytes_read / 1e6,
                stats.pages / elapsed if elapsed else 0,
            )

    if not articles:
        raise IngestError('no content articles in dump')
    stats.articles = len(articles)

    _resolve_redirects(title_index, redirects)
    out_adj = []
    for article in articles:
        resolved = set()
        for target in article.link_targets:
            y = title_index.get(target)
            if y is None:
                stats.dangling_links += 1
            else:
                resolved.add(y)
        stats.links += len(resolved)
        out_adj.append(resolved)

    logger.info(
        'ingested %d articles, %d redirects, %d links (%d dangling dropped) in %0.1fs',
        stats.articles,
        stats.redirects,
        stats.links,
        stats.dangling_links,
        time.perf_counter() - start,
    )
    return GraphStore(articles, title_index, out_adj, stats=stats.as_dict()), stats
