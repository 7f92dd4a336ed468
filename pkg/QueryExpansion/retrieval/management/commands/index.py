from QueryExpansion.common.artifacts import output_lock
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.retrieval.analysis import load_stopwords
from QueryExpansion.retrieval.index import build_index, save_index


class Command(PipelineCommand):
    help = 'Build an inverted index over a TREC SGML collection'
    required_inputs = ('corpus', 'stopwords')

    def run(self, config):
        target = config.index_dir
        with output_lock(target.parent):
            with open(config.corpus, encoding='utf-8', errors='replace') as corpus:
                index = build_index(corpus, load_stopwords(config.stopwords), stemming=config.stemming)
            save_index(index, target)
        self.stdout.write(f'{index.n_docs} documents, {len(index.postings)} terms -> {target}')
