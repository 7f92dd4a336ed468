from QueryExpansion.common.artifacts import output_lock
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.wordnet.lexicon import load_wordnet
from QueryExpansion.wordnet.store import save_lexical_store


class Command(PipelineCommand):
    help = 'Check a WordNet dict directory and copy it into the lexical store'
    required_inputs = ('wordnet',)

    def run(self, config):
        target = config.store / 'wordnet'
        with output_lock(config.store):
            store = load_wordnet(config.wordnet)
            save_lexical_store(store, target)
        self.stdout.write(f'{store.n_synsets} synsets, {store.n_lemmas} lemmas -> {target}')
