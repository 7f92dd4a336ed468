import shutil
import tempfile
from functools import cache
from pathlib import Path

from django.test import SimpleTestCase

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures'


def fixture_path(*parts: str) -> Path:
    return FIXTURES.joinpath(*parts)


@cache
def fixture_graph():
    from QueryExpansion.wiki.ingest import build_graph_store

    with open(fixture_path('wiki', 'dump.xml'), 'rb') as f:
        return build_graph_store(f)[0]


@cache
def fixture_wordnet():
    from QueryExpansion.wordnet.lexicon import load_wordnet

    return load_wordnet(fixture_path('wordnet'))


class QETestCase(SimpleTestCase):
    def make_dir(self) -> Path:
        path = Path(tempfile.mkdtemp(prefix='qe-test-'))
        self.addCleanup(shutil.rmtree, path, ignore_errors=True)
        return path

    def assertClose(self, value, expected, tol=1e-6):
        assert abs(value - expected) <= tol, f'{value!r} != {expected!r} within {tol}'
