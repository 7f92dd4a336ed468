from contextlib import nullcontext

from django.conf import settings

from QueryExpansion.common.artifacts import output_lock
from QueryExpansion.common.commands import PipelineCommand
from QueryExpansion.common.profiling import profile
from QueryExpansion.wiki.dump import open_dump
from QueryExpansion.wiki.ingest import build_graph_store
from QueryExpansion.wiki.store import save_graph_store


class Command(PipelineCommand):
    help = 'Build the wiki link graph store from a Wikipedia XML dump'
    required_inputs = ('dump',)

    def run(self, config):
        target = config.store / 'wiki'
        profiler = profile(description=f'ingest {config.dump.name}') if config.profile else nullcontext()
        with output_lock(config.store), profiler:
            with open_dump(config.dump) as stream:
                graph, stats = build_graph_store(
                    stream, workers=config.workers, chunk_size=settings.WIKI_INGEST_CHUNK_SIZE
                )
            save_graph_store(graph, target)
        self.stdout.write(
            f'{stats.articles} articles, {stats.redirects} redirects, {stats.links} links '
            f'({stats.dangling_links} dangling dropped) -> {target}'
        )
