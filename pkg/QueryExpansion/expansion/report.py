"""
Line oriented outputs of an expansion run.

The per-topic report has one tab separated row per selected term with its provenance. The weighted query file has
``topic<TAB>term<TAB>weight`` rows, original words first, and is what the search step reads back.
"""
from collections.abc import Iterable
from pathlib import Path

from QueryExpansion.common.errors import ParseError
from QueryExpansion.expansion.pipeline import ExpandedQuery

REPORT_COLUMNS = ('query', 'title', 'term', 'source', 'origin', 'stage1_score', 'correlation', 'weight')


def report_rows(topic_id: int, title: str, expanded: ExpandedQuery) -> list[tuple]:
    return [
        (
            topic_id,
            title,
            t.term,
            t.source,
            t.origin,
            f'{t.stage1_score:.6f}',
            f'{t.correlation:.6f}',
            f'{t.weight:.6f}',
        )
        for t in expanded.terms
    ]


def write_expansion_report(path: Path, rows: Iterable[tuple]):
    with open(path, 'w', encoding='utf-8') as f:
        f.write('\t'.join(REPORT_COLUMNS) + '\n')
        for row in rows:
            f.write('\t'.join(str(v) for v in row) + '\n')


def write_weighted_queries(path: Path, queries: Iterable[tuple[int, list[tuple[str, float]]]]):
    with open(path, 'w', encoding='utf-8') as f:
        for topic_id, weighted in queries:
            for term, weight in weighted:
                f.write(f'{topic_id}\t{term}\t{weight:.6f}\n')


def read_weighted_queries(path: Path) -> dict[int, list[tuple[str, float]]]:
    queries: dict[int, list[tuple[str, float]]] = {}
    with open(path, encoding='utf-8') as f:
        for lineno, line in enumerate(f, start=1):
            if not line.strip():
                continue
            parts = line.rstrip('\n').split('\t')
            try:
                topic_id, term, weight = int(parts[0]), parts[1], float(parts[2])
            except (IndexError, ValueError) as e:
                raise ParseError('expected "topic<TAB>term<TAB>weight"', lineno, path) from e
            queries.setdefault(topic_id, []).append((term, weight))
    return queries
