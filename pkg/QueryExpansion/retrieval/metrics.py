"""
TREC style effectiveness measures.

Each measure is computed per topic from the ranked list and the judgments, then averaged over the topics that have at
least one relevant judgment. Topics without any are left out and listed in the report.
"""
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from QueryExpansion.retrieval.trec import QRels, RunEntry

logger = logging.getLogger('qe.retrieval')

DEFAULT_CUTOFFS = (5, 10, 20, 30)
RECALL_LEVELS = tuple(i / 10 for i in range(11))
GM_FLOOR = 1e-5


@dataclass(frozen=True)
class TopicEvaluation:
    topic_id: int
    relevant: int
    retrieved: int
    relevant_retrieved: int
    average_precision: float
    precision_at: dict[int, float]
    bpref: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class EvalReport:
    topics: tuple[TopicEvaluation, ...]
    excluded: tuple[int, ...]
    cutoffs: tuple[int, ...]
    curve: tuple[float, ...]

    def _mean(self, values: Iterable[float]) -> float:
        values = list(values)
        return sum(values) / len(values) if values else 0.0

    @property
    def map(self) -> float:
        return self._mean(t.average_precision for t in self.topics)

    @property
    def gm_map(self) -> float:
        if not self.topics:
            return 0.0
        return math.exp(self._mean(math.log(max(t.average_precision, GM_FLOOR)) for t in self.topics))

    def precision_at(self, k: int) -> float:
        return self._mean(t.precision_at[k] for t in self.topics)

    @property
    def bpref(self) -> float:
        return self._mean(t.bpref for t in self.topics)

    @property
    def recall(self) -> float:
        return self._mean(t.recall for t in self.topics)

    @property
    def f_measure(self) -> float:
        return self._mean(t.f_measure for t in self.topics)

    @property
    def relevant_retrieved(self) -> int:
        return sum(t.relevant_retrieved for t in self.topics)

    def aggregates(self) -> dict[str, float]:
        values = {'map': self.map, 'gm_map': self.gm_map}
        values.update({f'P_{k}': self.precision_at(k) for k in self.cutoffs})
        values.update(
            {
                'bpref': self.bpref,
                'recall': self.recall,
                'F1': self.f_measure,
                'num_rel_ret': self.relevant_retrieved,
            }
        )
        return values


def _flags(ranking: Sequence[RunEntry], relevant: set[str]) -> list[bool]:
    return [e.docno in relevant for e in ranking]


def average_precision(flags: Sequence[bool], n_relevant: int) -> float:
    hits, total = 0, 0.0
    for rank, is_rel in enumerate(flags, start=1):
        if is_rel:
            hits += 1
            total += hits / rank
    return total / n_relevant if n_relevant else 0.0


def bpref(ranking: Sequence[RunEntry], relevant: set[str], nonrelevant: set[str]) -> float:
    """
    Only judged documents count: each retrieved relevant document is penalised by the share of judged nonrelevant
    documents above it, capped at min(R, N).
    """
    n_rel = len(relevant)
    if not n_rel:
        return 0.0
    cap = min(n_rel, len(nonrelevant))
    nonrel_above, total = 0, 0.0
    for entry in ranking:
        if entry.docno in relevant:
            total += 1 - (min(nonrel_above, cap) / cap if cap else 0.0)
        elif entry.docno in nonrelevant:
            nonrel_above += 1
    return total / n_rel


def interpolated_precision(flags: Sequence[bool], n_relevant: int) -> tuple[float, ...]:
    points = []
    hits = 0
    for rank, is_rel in enumerate(flags, start=1):
        if is_rel:
            hits += 1
            points.append((hits / n_relevant, hits / rank))
    curve = []
    for level in RECALL_LEVELS:
        curve.append(max((p for r, p in points if r >= level - 1e-12), default=0.0))
    return tuple(curve)


def _evaluable(run: dict[int, Sequence[RunEntry]], qrels: QRels) -> tuple[list[int], list[int]]:
    kept, excluded = [], []
    for topic_id in sorted(run):
        if qrels.relevant(topic_id):
            kept.append(topic_id)
        else:
            excluded.append(topic_id)
            logger.warning('topic %d has no relevant judgments and is left out of the evaluation', topic_id)
    return kept, excluded


def evaluate_topic(topic_id: int, ranking: Sequence[RunEntry], qrels: QRels, cutoffs=DEFAULT_CUTOFFS):
    relevant, nonrelevant = qrels.relevant(topic_id), qrels.nonrelevant(topic_id)
    flags = _flags(ranking, relevant)
    rel_ret = sum(flags)
    precision = rel_ret / len(flags) if flags else 0.0
    recall = rel_ret / len(relevant)
    return TopicEvaluation(
        topic_id=topic_id,
        relevant=len(relevant),
        retrieved=len(flags),
        relevant_retrieved=rel_ret,
        average_precision=average_precision(flags, len(relevant)),
        precision_at={k: sum(flags[:k]) / k for k in cutoffs},
        bpref=bpref(ranking, relevant, nonrelevant),
        recall=recall,
        f_measure=2 * precision * recall / (precision + recall) if precision + recall else 0.0,
    )


def _mean_curve(run, qrels: QRels, kept: list[int]) -> tuple[float, ...]:
    if not kept:
        return tuple(0.0 for _ in RECALL_LEVELS)
    curves = [interpolated_precision(_flags(run[t], qrels.relevant(t)), len(qrels.relevant(t))) for t in kept]
    return tuple(sum(c[i] for c in curves) / len(curves) for i in range(len(RECALL_LEVELS)))


def interpolated_pr(run: dict[int, Sequence[RunEntry]], qrels: QRels) -> tuple[float, ...]:
    """
    Precision interpolated at the eleven standard recall levels and averaged over the evaluable topics.
    """
    kept, _ = _evaluable(run, qrels)
    return _mean_curve(run, qrels, kept)


def evaluate(run: dict[int, Sequence[RunEntry]], qrels: QRels, cutoffs: Iterable[int] = DEFAULT_CUTOFFS) -> EvalReport:
    cutoffs = tuple(sorted(set(cutoffs)))
    kept, excluded = _evaluable(run, qrels)
    return EvalReport(
        topics=tuple(evaluate_topic(t, run[t], qrels, cutoffs) for t in kept),
        excluded=tuple(excluded),
        cutoffs=cutoffs,
        curve=_mean_curve(run, qrels, kept),
    )


def compare_reports(baseline: EvalReport, report: EvalReport) -> list[tuple[str, float, float, float | None]]:
    """
    (measure, baseline value, value, change in percent) for every aggregate; the change is None when the baseline
    value is 0.
    """
    rows = []
    base_values = baseline.aggregates()
    for name, value in report.aggregates().items():
        base = base_values.get(name, 0.0)
        rows.append((name, base, value, (value - base) / base * 100 if base else None))
    return rows


def _fmt(value) -> str:
    return str(value) if isinstance(value, int) else f'{value:.4f}'


def write_report(path: Path, report: EvalReport):
    with open(path, 'w', encoding='utf-8') as f:
        for t in report.topics:
            f.write(f'map\t{t.topic_id}\t{_fmt(t.average_precision)}\n')
            for k in report.cutoffs:
                f.write(f'P_{k}\t{t.topic_id}\t{_fmt(t.precision_at[k])}\n')
            f.write(f'bpref\t{t.topic_id}\t{_fmt(t.bpref)}\n')
            f.write(f'recall\t{t.topic_id}\t{_fmt(t.recall)}\n')
            f.write(f'F1\t{t.topic_id}\t{_fmt(t.f_measure)}\n')
            f.write(f'num_rel_ret\t{t.topic_id}\t{t.relevant_retrieved}\n')
        for name, value in report.aggregates().items():
            f.write(f'{name}\tall\t{_fmt(value)}\n')
        for topic_id in report.excluded:
            f.write(f'excluded\t{topic_id}\tno relevant judgments\n')


def write_curve(path: Path, curve: Sequence[float]):
    with open(path, 'w', encoding='utf-8') as f:
        for level, precision in zip(RECALL_LEVELS, curve):
            f.write(f'{level:.1f}\t{precision:.4f}\n')


def write_comparison(path: Path, rows: Iterable[tuple[str, float, float, float | None]]):
    with open(path, 'w', encoding='utf-8') as f:
        f.write('measure\tbaseline\trun\tchange_pct\n')
        for name, base, value, change in rows:
            f.write(f'{name}\t{_fmt(base)}\t{_fmt(value)}\t{"-" if change is None else f"{change:+.2f}"}\n')
