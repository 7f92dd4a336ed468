from QueryExpansion.common.artifacts import output_lock, staged_files
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.common.errors import ConfigError
from QueryExpansion.expansion.report import read_weighted_queries
from QueryExpansion.retrieval.index import load_index
from QueryExpansion.retrieval.search import search
from QueryExpansion.retrieval.trec import parse_topics, write_run


class Command(PipelineCommand):
    help = 'Rank documents for weighted queries (or plain topic titles) and write a TREC run file'

    def required(self, config):
        if config.queries is None and config.topics is None:
            raise ConfigError('missing required input: --queries or --topics')
        return ('queries' if config.queries else 'topics', 'out')

    def run(self, config):
        index = load_index(config.index_dir)
        if config.queries:
            queries = read_weighted_queries(config.queries)
        else:
            queries = {t.topic_id: [(t.title, 1.0)] for t in parse_topics(config.topics)}
        run = {topic_id: search(index, q, config.model, config.depth) for topic_id, q in queries.items()}
        name = f'run_{config.model}.txt'
        with output_lock(config.out), staged_files(config.out) as staged:
            write_run(staged.path(name), run, config.tag)
        self.stdout.write(f'{len(run)} topics searched with {config.model} -> {config.out / name}')
