import pytest
from django.core.management import CommandError, call_command

from QueryExpansion.common.errors import StoreFormatError
from QueryExpansion.common.tests import QETestCase, fixture_path, fixture_wordnet
from QueryExpansion.wordnet.factories.synsets import SynsetFactory, write_wordnet
from QueryExpansion.wordnet.lexicon import RELATIONS, WordnetLoadError, load_wordnet
from QueryExpansion.wordnet.store import load_lexical_store


def read_noun_database(path):
    """
    Lemmas and hyponym offsets per synset offset, read straight from the text of data.noun.
    """
    lemmas, hyponyms = {}, {}
    with open(path / 'data.noun', encoding='utf-8') as f:
        for line in f:
            if line.startswith(' '):
                continue
            fields = line.split('|')[0].split()
            w_cnt = int(fields[3], 16)
            lemmas[int(fields[0])] = {w.lower() for w in fields[4 : 4 + 2 * w_cnt : 2]}
            p_at = 4 + 2 * w_cnt
            pointers = fields[p_at + 1 : p_at + 1 + 4 * int(fields[p_at])]
            hyponyms[int(fields[0])] = [int(pointers[i + 1]) for i in range(0, len(pointers), 4) if pointers[i] == '~']
    return lemmas, hyponyms


def brute_force_two_level(lemmas, hyponyms, unit, relation):
    senses = {offset for offset, names in lemmas.items() if unit in names}
    if relation == 'synonym':
        # every lemma within two shared-synset steps of the unit
        reached, frontier = set(), {unit}
        for _ in range(2):
            frontier = {
                other
                for lemma in frontier
                for names in lemmas.values()
                if lemma in names
                for other in names
            }
            reached |= frontier
    else:
        level1 = [h for offset in senses for h in hyponyms[offset]]
        level2 = [h for offset in level1 for h in hyponyms[offset]]
        reached = {name for offset in level1 + level2 for name in lemmas[offset]}
    return {name.replace('_', ' ') for name in reached} - {unit.replace('_', ' ')}


class LoadWordnetTestCase(QETestCase):
    def test_fixture_census(self):
        wn = fixture_wordnet()
        assert wn.n_synsets == 10
        assert len(list(wn.all_synsets())) == 10
        for synset in wn.all_synsets():
            for lemma in synset.lemma_names():
                assert synset in wn.lookup(lemma)

    def test_offsets_are_byte_positions(self):
        raw = (fixture_path('wordnet') / 'data.noun').read_bytes()
        for synset in fixture_wordnet().all_synsets():
            assert raw[synset.offset() :].startswith(b'%08d ' % synset.offset())

    def test_synset_fields(self):
        [influenza] = fixture_wordnet().lookup('influenza')
        assert influenza.name() == 'influenza.n.01'
        assert influenza.pos() == 'n'
        assert influenza.lemma_names() == ['influenza', 'flu', 'grippe']
        assert [h.name() for h in influenza.hyponyms()] == ['bird_flu.n.01', 'swine_flu.n.01']
        assert influenza.definition() == 'an acute febrile highly contagious viral disease'

    def test_empty_directory(self):
        with pytest.raises(WordnetLoadError) as exc_info:
            load_wordnet(self.make_dir())
        assert exc_info.value.filename.endswith('data.noun')

    def test_missing_directory(self):
        with pytest.raises(WordnetLoadError, match='directory not found'):
            load_wordnet(self.make_dir() / 'missing')

    def test_missing_lexnames(self):
        path = write_wordnet(self.make_dir(), [SynsetFactory()])
        (path / 'lexnames').unlink()
        with pytest.raises(WordnetLoadError) as exc_info:
            load_wordnet(path)
        assert exc_info.value.filename.endswith('lexnames')

    def test_corrupt_data_file(self):
        path = write_wordnet(self.make_dir(), [SynsetFactory()])
        with open(path / 'data.noun', 'a') as f:
            f.write('00000099 05 n zz broken\n')
        with pytest.raises(WordnetLoadError, match='corrupt synset') as exc_info:
            load_wordnet(path)
        assert exc_info.value.filename.endswith('data.noun')

    def test_corrupt_index_file(self):
        path = write_wordnet(self.make_dir(), [SynsetFactory(lemmas=('cat',))])
        with open(path / 'index.noun', 'a') as f:
            f.write('dog n 0 0 0 0\n')
        with pytest.raises(WordnetLoadError, match='index.noun'):
            load_wordnet(path)

    def test_index_points_to_unknown_synset(self):
        path = write_wordnet(self.make_dir(), [SynsetFactory(lemmas=('cat',))])
        with open(path / 'index.noun', 'a') as f:
            f.write('dog n 1 0 1 0 00000777\n')
        with pytest.raises(WordnetLoadError, match='"dog" refers to an unknown synset') as exc_info:
            load_wordnet(path)
        assert exc_info.value.filename.endswith('index.noun')


class LookupTestCase(QETestCase):
    def setUp(self):
        self.wn = fixture_wordnet()

    def test_lookup(self):
        [vaccine] = self.wn.lookup('vaccine')
        assert vaccine.lemma_names() == ['vaccine', 'vaccinum']
        assert self.wn.lookup('Pig') == self.wn.lookup('pig')
        assert [s.name() for s in self.wn.lookup('hog')] == ['pig.n.01', 'hog.n.02']

    def test_multiword_lookup(self):
        assert self.wn.lookup('swine flu')
        assert self.wn.lookup('Swine_Flu') == self.wn.lookup('swine flu')
        assert self.wn.lookup('flu vaccine') == []

    def test_no_morphological_reduction(self):
        assert self.wn.lookup('pigs') == []
        assert self.wn.lookup('birds') == []
        assert self.wn.lookup('') == []

    def test_synonyms(self):
        assert self.wn.synonyms('swine') == {'pig', 'hog'}
        assert self.wn.synonyms('bird') == {'fowl'}
        assert self.wn.synonyms('nest') == set()


class TwoLevelTermsTestCase(QETestCase):
    def test_synonym_levels(self):
        wn = load_wordnet(
            write_wordnet(
                self.make_dir(),
                [
                    SynsetFactory(lemmas=('q', 'x1')),
                    SynsetFactory(lemmas=('x1', 'y1', 'y2')),
                ],
            )
        )
        assert wn.two_level_terms('q', 'synonym') == {'x1', 'y1', 'y2'}

    def test_unit_excluded_from_loop(self):
        wn = load_wordnet(
            write_wordnet(
                self.make_dir(),
                [SynsetFactory(lemmas=('q', 'x1')), SynsetFactory(lemmas=('x1', 'q', 'z'))],
            )
        )
        assert wn.two_level_terms('q', 'synonym') == {'x1', 'z'}

    def test_hyponym_levels(self):
        wn = fixture_wordnet()
        assert wn.two_level_terms('flu', 'hyponym') == {
            'swine flu',
            'swine influenza',
            'bird flu',
            'avian influenza',
            'h5n1',
        }
        assert wn.two_level_terms('bird', 'hyponym') == {'poultry', 'domestic fowl'}

    def test_hyponym_chain_stops_at_two_levels(self):
        top, middle, bottom, below = (SynsetFactory(key=k, lemmas=(k,)) for k in ('top', 'middle', 'bottom', 'below'))
        top['hyponyms'], middle['hyponyms'], bottom['hyponyms'] = ('middle',), ('bottom',), ('below',)
        wn = load_wordnet(write_wordnet(self.make_dir(), [top, middle, bottom, below]))
        assert wn.two_level_terms('top', 'hyponym') == {'middle', 'bottom'}
        assert wn.two_level_terms('middle', 'hyponym') == {'bottom', 'below'}
        assert wn.two_level_terms('below', 'hyponym') == set()

    def test_matches_exhaustive_walk(self):
        wn = fixture_wordnet()
        lemmas, hyponyms = read_noun_database(fixture_path('wordnet'))
        every_lemma = set().union(*lemmas.values())
        assert len(every_lemma) == 20
        for lemma in sorted(every_lemma):
            for relation in RELATIONS:
                expected = brute_force_two_level(lemmas, hyponyms, lemma, relation)
                assert wn.two_level_terms(lemma, relation) == expected, (lemma, relation)
                assert wn.two_level_terms(lemma.replace('_', ' '), relation) == expected

    def test_synonym_levels_contain_level_one(self):
        wn = fixture_wordnet()
        for unit in ('hog', 'flu', 'swine flu', 'bird'):
            assert wn.synonyms(unit) <= wn.two_level_terms(unit, 'synonym')
            assert wn.two_level_terms(unit, 'synonym') == wn.two_level_terms(unit, 'synonym')

    def test_unknown_unit(self):
        wn = fixture_wordnet()
        assert wn.two_level_terms('zeppelin', 'synonym') == set()
        assert wn.two_level_terms('zeppelin', 'hyponym') == set()

    def test_unknown_relation(self):
        with pytest.raises(ValueError):
            fixture_wordnet().two_level_terms('pig', 'meronym')


class IngestWordnetCommandTestCase(QETestCase):
    def test_ingest_and_reload(self):
        store = self.make_dir()
        call_command('ingest_wordnet', wordnet=str(fixture_path('wordnet')), store=str(store))
        wn = load_lexical_store(store / 'wordnet')
        assert wn.n_synsets == 10
        assert wn.n_lemmas == 20
        assert wn.two_level_terms('flu', 'hyponym') == fixture_wordnet().two_level_terms('flu', 'hyponym')
        assert wn.lookup('hog') == fixture_wordnet().lookup('hog')

    def test_changed_store_file(self):
        store = self.make_dir()
        call_command('ingest_wordnet', wordnet=str(fixture_path('wordnet')), store=str(store))
        with open(store / 'wordnet' / 'noun.exc', 'a') as f:
            f.write('mice mouse\n')
        with pytest.raises(StoreFormatError, match='checksum mismatch for noun.exc'):
            load_lexical_store(store / 'wordnet')

    def test_empty_wordnet_directory(self):
        with pytest.raises(CommandError, match='required WordNet file is missing'):
            call_command('ingest_wordnet', wordnet=str(self.make_dir()), store=str(self.make_dir()))
