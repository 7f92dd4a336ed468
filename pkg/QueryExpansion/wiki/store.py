"""
On-disk layout of a wiki store:

    manifest.json   format, version, counts and a sha256 of every data file
    articles.jsonl  one article per line: id, title, display_title, sorted out-link ids, the link targets as written
                    and the plain text body
    titles.tsv      normalised title or redirect title, tab, article id; sorted by title

Article ids are the line order of articles.jsonl, so the same dump always gives byte-identical files.
"""
import logging
from pathlib import Path

from QueryExpansion.common.artifacts import read_jsonl, read_manifest, staged_directory, write_jsonl, write_manifest
from QueryExpansion.common.errors import StoreFormatError
from QueryExpansion.common.text import tokenize
from QueryExpansion.wiki.graph import Article, GraphStore

logger = logging.getLogger('qe.wiki')

STORE_FORMAT = 'qe-wiki-graph'
STORE_VERSION = 2


def save_graph_store(store: GraphStore, target: Path) -> Path:
    with staged_directory(Path(target)) as directory:
        write_jsonl(
            directory / 'articles.jsonl',
            (
                {
                    'id': a.id,
                    'title': a.title,
                    'display_title': a.display_title,
                    'links': sorted(store.out_adj[a.id]),
                    'link_targets': list(a.link_targets),
                    'body': a.body,
                }
                for a in store.articles
            ),
        )
        with open(directory / 'titles.tsv', 'w', encoding='utf-8') as f:
            for title, x in sorted(store.title_index.items()):
                f.write(f'{title}\t{x}\n')
        write_manifest(
            directory,
            STORE_FORMAT,
            STORE_VERSION,
            ['articles.jsonl', 'titles.tsv'],
            n_articles=store.n_articles,
            n_titles=len(store.title_index),
            stats=dict(store.stats),
        )
    logger.info('wrote wiki store with %d articles to %s', store.n_articles, target)
    return Path(target)


def load_graph_store(directory: Path, verify: bool = True) -> GraphStore:
    directory = Path(directory)
    manifest = read_manifest(directory, STORE_FORMAT, STORE_VERSION, verify=verify)
    articles, out_adj = [], []
    for row in read_jsonl(directory / 'articles.jsonl'):
        if row['id'] != len(articles):
            raise StoreFormatError(f'{directory}: article ids are not dense at id {row["id"]}')
        articles.append(
            Article(
                id=row['id'],
                title=row['title'],
                display_title=row['display_title'],
                body=row['body'],
                link_targets=tuple(row['link_targets']),
                tokens=tuple(tokenize(row['body'])),
            )
        )
        out_adj.append(row['links'])
    title_index = {}
    with open(directory / 'titles.tsv', encoding='utf-8') as f:
        for line in f:
            title, _, x = line.rstrip('\n').rpartition('\t')
            title_index[title] = int(x)
    if len(articles) != manifest['n_articles']:
        raise StoreFormatError(f'{directory}: manifest lists {manifest["n_articles"]} articles, found {len(articles)}')
    return GraphStore(articles, title_index, out_adj, stats=manifest.get('stats'))
