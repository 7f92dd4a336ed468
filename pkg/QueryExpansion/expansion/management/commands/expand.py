import logging

from QueryExpansion.common.artifacts import output_lock, staged_files
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.expansion.pipeline import expand, load_stores
from QueryExpansion.expansion.report import report_rows, write_expansion_report, write_weighted_queries
from QueryExpansion.queries.tagger import default_tagger
from QueryExpansion.retrieval.trec import parse_topics

logger = logging.getLogger('qe.expansion')


class Command(PipelineCommand):
    help = 'Expand every topic title and write expansion reports and weighted queries'
    required_inputs = ('store', 'topics', 'out')

    def run(self, config):
        graph, wn = load_stores(config.store)
        params = config.expansion_params()
        tagger = default_tagger(str(config.lexicon))
        topics = parse_topics(config.topics)
        all_rows, weighted = [], []
        with output_lock(config.out), staged_files(config.out) as staged:
            for topic in topics:
                expanded = expand(graph, wn, topic.title, params, tagger)
                rows = report_rows(topic.topic_id, topic.title, expanded)
                write_expansion_report(staged.path(f'reports/{topic.topic_id}.tsv'), rows)
                all_rows += rows
                weighted.append((topic.topic_id, expanded.weighted_query()))
                logger.info('topic %d "%s": %d expansion terms', topic.topic_id, topic.title, len(expanded.terms))
            write_expansion_report(staged.path('expansion_report.tsv'), all_rows)
            write_weighted_queries(staged.path('weighted_queries.tsv'), weighted)
        self.stdout.write(f'expanded {len(topics)} topics -> {config.out}')
