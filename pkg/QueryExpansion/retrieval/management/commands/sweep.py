import logging

from django.conf import settings

from QueryExpansion.common.artifacts import output_lock, staged_files
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.expansion.pipeline import expand, load_stores
from QueryExpansion.queries.tagger import default_tagger
from QueryExpansion.retrieval.index import load_index
from QueryExpansion.retrieval.metrics import evaluate
from QueryExpansion.retrieval.search import search
from QueryExpansion.retrieval.trec import parse_qrels, parse_topics

logger = logging.getLogger('qe.retrieval')


class Command(PipelineCommand):
    help = 'MAP for each retrieval model as the number of expansion terms grows'
    required_inputs = ('store', 'topics', 'qrels', 'out')

    def run(self, config):
        m_values = settings.SWEEP_M_VALUES
        models = settings.SWEEP_MODELS
        graph, wn = load_stores(config.store)
        index = load_index(config.index_dir)
        qrels = parse_qrels(config.qrels)
        topics = parse_topics(config.topics)
        params = config.expansion_params(m_final=max(m_values))
        tagger = default_tagger(str(config.lexicon))
        # the largest expansion is computed once, smaller m values are prefixes of it
        expanded = {t.topic_id: expand(graph, wn, t.title, params, tagger) for t in topics}

        def mean_ap(queries, model):
            run = {topic_id: search(index, q, model, config.depth) for topic_id, q in queries.items()}
            return evaluate(run, qrels, config.cutoffs).map

        baseline = {model: mean_ap({t: e.original_query() for t, e in expanded.items()}, model) for model in models}
        table, term_rows = [], []
        for m in m_values:
            truncated = {t: e.truncated(m) for t, e in expanded.items()}
            queries = {t: e.weighted_query() for t, e in truncated.items()}
            table.append((m, [mean_ap(queries, model) for model in models]))
            for topic_id, e in sorted(truncated.items()):
                term_rows += [(m, topic_id, rank, term.term) for rank, term in enumerate(e.terms, start=1)]
            logger.info('m=%d: %s', m, ', '.join(f'{model} {v:.4f}' for model, v in zip(models, table[-1][1])))

        lines = [
            '# baseline\t' + '\t'.join(f'{baseline[model]:.4f}' for model in models),
            'm\t' + '\t'.join(models),
            *(f'{m}\t' + '\t'.join(f'{v:.4f}' for v in values) for m, values in table),
        ]
        with output_lock(config.out), staged_files(config.out) as staged:
            staged.path('sweep.tsv').write_text('\n'.join(lines) + '\n', encoding='utf-8')
            staged.path('sweep_terms.tsv').write_text(
                'm\ttopic\trank\tterm\n' + ''.join(f'{m}\t{t}\t{r}\t{term}\n' for m, t, r, term in term_rows),
                encoding='utf-8',
            )
        self.stdout.write('\n'.join(lines))
