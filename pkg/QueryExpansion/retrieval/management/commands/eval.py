from QueryExpansion.common.artifacts import output_lock, staged_files
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.retrieval.metrics import (
    compare_reports,
    evaluate,
    write_comparison,
    write_curve,
    write_report,
)
from QueryExpansion.retrieval.trec import parse_qrels, read_run


class Command(PipelineCommand):
    help = 'Evaluate a run file against relevance judgments'

    def required(self, config):
        return ('run', 'qrels', 'out') + (('baseline',) if config.baseline else ())

    def run(self, config):
        qrels = parse_qrels(config.qrels)
        report = evaluate(read_run(config.run), qrels, config.cutoffs)
        with output_lock(config.out), staged_files(config.out) as staged:
            write_report(staged.path('eval.tsv'), report)
            write_curve(staged.path('curve.tsv'), report.curve)
            if config.baseline:
                baseline = evaluate(read_run(config.baseline), qrels, config.cutoffs)
                write_comparison(staged.path('compare.tsv'), compare_reports(baseline, report))
        for name, value in report.aggregates().items():
            self.stdout.write(f'{name}\tall\t{value if isinstance(value, int) else f"{value:.4f}"}')
