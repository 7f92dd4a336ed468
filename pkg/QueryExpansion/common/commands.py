import logging

from django.core.management import BaseCommand, CommandError

from QueryExpansion.common.config import RunConfig, load_run_config, split_list
from QueryExpansion.common.errors import PipelineError

logger = logging.getLogger('qe.cli')


def add_pipeline_arguments(parser):
    parser.add_argument('--config', help='INI file with [paths], [expansion] and [retrieval] sections')
    paths = parser.add_argument_group('paths')
    paths.add_argument('--dump', help='Wikipedia XML dump, optionally .bz2')
    paths.add_argument('--wordnet', help='WordNet dict directory')
    paths.add_argument('--corpus', help='TREC SGML document collection')
    paths.add_argument('--topics', help='TREC topic file')
    paths.add_argument('--qrels', help='relevance judgments')
    paths.add_argument('--run', help='run file to evaluate')
    paths.add_argument('--baseline', help='run file to compare against')
    paths.add_argument('--queries', help='weighted query file written by expand')
    paths.add_argument('--store', help='store root holding the wiki/ and wordnet/ stores')
    paths.add_argument('--index', help='index directory, defaults to <store>/index')
    paths.add_argument('--out', help='output directory')
    paths.add_argument('--stopwords', help='stopword list, one word per line')
    paths.add_argument('--lexicon', help='tagger lexicon, "word TAG" per line')

    expansion = parser.add_argument_group('expansion')
    expansion.add_argument('--n', type=int, help='candidates kept per source before correlation scoring')
    expansion.add_argument('--m', type=int, help='expansion terms kept per query')
    expansion.add_argument('--relations', type=split_list, help='comma separated WordNet relations')
    expansion.add_argument('--sources', type=split_list, help='comma separated sources: wiki, wordnet')
    expansion.add_argument('--expansion-weight', type=float, dest='expansion_weight')
    expansion.add_argument('--phrase-boost', type=float, dest='phrase_boost')

    retrieval = parser.add_argument_group('retrieval')
    retrieval.add_argument('--model', help='bm25 or tfidf')
    retrieval.add_argument('--k', type=int, dest='depth', help='documents retrieved per topic')
    retrieval.add_argument('--no-stemming', action='store_const', const=False, dest='stemming')
    retrieval.add_argument('--cutoffs', type=lambda v: tuple(int(c) for c in split_list(v)))
    retrieval.add_argument('--tag', help='run tag written in the last column of run files')

    parser.add_argument('--workers', type=int, help='processes used to parse the dump')
    parser.add_argument('--profile', action='store_true', default=None, help='print timing and memory use')


class PipelineCommand(BaseCommand):
    """
    Base for the pipeline subcommands: resolves a RunConfig, checks the inputs the subcommand names in
    ``required_inputs`` and reports pipeline errors as CommandError.
    """

    requires_system_checks = []
    required_inputs: tuple[str, ...] = ()

    def add_arguments(self, parser):
        add_pipeline_arguments(parser)

    def required(self, config: RunConfig) -> tuple[str, ...]:
        return self.required_inputs

    def handle(self, *args, **options):
        try:
            config = load_run_config(options)
            config.require(*self.required(config))
            self.run(config)
        except PipelineError as e:
            logger.debug('%s failed: %s', self.__module__.rsplit('.', 1)[-1], e)
            raise CommandError(str(e)) from e
        except (OSError, ValueError) as e:
            raise CommandError(f'{e.__class__.__name__}: {e}') from e

    def run(self, config: RunConfig):
        raise NotImplementedError
