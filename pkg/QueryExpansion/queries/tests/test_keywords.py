import pytest

from QueryExpansion.common.errors import ParseError
from QueryExpansion.common.text import split_words, tokenize
from QueryExpansion.common.tests import QETestCase
from QueryExpansion.queries.factories.tokens import tagged
from QueryExpansion.queries.keywords import KeywordSet, extract_keywords, prepare_query
from QueryExpansion.queries.tagger import default_tagger, is_pretagged, load_lexicon, parse_pretagged, pos_tag


class TokenizeTestCase(QETestCase):
    def test_split_words(self):
        assert split_words('Swine flu vaccine') == ['Swine', 'flu', 'vaccine']
        assert split_words('') == []
        assert split_words('Ram Janmabhoomi verdict') == ['Ram', 'Janmabhoomi', 'verdict']
        assert split_words('H1N1: a "new" flu-strain') == ['H1N1', 'a', 'new', 'flu', 'strain']

    def test_tokenize_folds_case(self):
        assert tokenize('Swine FLU, vaccine_trial') == ['swine', 'flu', 'vaccine', 'trial']


class TaggerTestCase(QETestCase):
    def tag_words(self, words):
        return [t.tag for t in pos_tag(words)]

    def test_lexicon_tags(self):
        assert self.tag_words(['Swine', 'flu', 'vaccine']) == ['NN', 'NN', 'NN']
        assert self.tag_words(['made']) == ['VBN']
        assert self.tag_words(['of', 'the']) == ['IN', 'DT']
        assert self.tag_words(['quickly', 'only']) == ['RB', 'RB']

    def test_backoff_rules(self):
        assert self.tag_words(['Zyxwv']) == ['NNP']
        assert self.tag_words(['2009', 'glimmering', 'frobbed', 'famous', 'widgets', 'blorp']) == [
            'CD',
            'VBG',
            'VBD',
            'JJ',
            'NNS',
            'NN',
        ]

    def test_ly_nouns_stay_nouns(self):
        assert self.tag_words(['monopoly', 'anomaly', 'Italy', 'assembly']) == ['NN', 'NN', 'NNP', 'NN']
        keywords = prepare_query('monopoly anomaly')
        assert keywords.individuals == ('monopoly', 'anomaly')
        assert keywords.phrases == ('monopoly anomaly',)

    def test_normalized_form(self):
        [token] = pos_tag(['Vaccine'])
        assert token.surface == 'Vaccine'
        assert token.normalized == 'vaccine'

    def test_custom_lexicon(self):
        path = self.make_dir() / 'lexicon.txt'
        path.write_text('# test\nzyxwv VB\n\n')
        assert load_lexicon(path) == {'zyxwv': 'VB'}
        assert [t.tag for t in pos_tag(['Zyxwv'], default_tagger(str(path)))] == ['VB']

    def test_bad_lexicon_line(self):
        path = self.make_dir() / 'lexicon.txt'
        path.write_text('good NN\nbad line here\n')
        with pytest.raises(ParseError) as exc_info:
            load_lexicon(path)
        assert exc_info.value.lineno == 2

    def test_pretagged(self):
        assert is_pretagged('Swine_NN flu_NN vaccine_NN')
        assert not is_pretagged('Swine flu vaccine')
        tokens = parse_pretagged('Swine_NN flu_NN made_VBN')
        assert [(t.surface, t.tag) for t in tokens] == [('Swine', 'NN'), ('flu', 'NN'), ('made', 'VBN')]


class ExtractKeywordsTestCase(QETestCase):
    def test_query_126(self):
        keywords = extract_keywords(tagged('Swine/NN flu/NN vaccine/NN'))
        assert keywords.individuals == ('Swine', 'flu', 'vaccine')
        assert keywords.phrases == ('Swine flu', 'flu vaccine', 'Swine flu vaccine')
        assert keywords.all_units == ('Swine', 'Swine flu', 'Swine flu vaccine', 'flu', 'flu vaccine', 'vaccine')

    def test_no_content_words(self):
        keywords = extract_keywords(tagged('of/IN the/DT'))
        assert keywords == KeywordSet()
        assert not keywords

    def test_runs_broken_by_function_words(self):
        keywords = extract_keywords(tagged('big/JJ cat/NN on/IN red/JJ mat/NN'))
        assert keywords.individuals == ('big', 'cat', 'red', 'mat')
        assert keywords.phrases == ('big cat', 'red mat')

    def test_duplicates_case_insensitive(self):
        keywords = extract_keywords(tagged('Flu/NN and/CC flu/NN'))
        assert keywords.individuals == ('Flu',)
        assert keywords.phrases == ()

    def test_numbers_are_content(self):
        keywords = extract_keywords(tagged('2009/CD election/NN'))
        assert keywords.phrases == ('2009 election',)

    def test_prepare_query(self):
        assert prepare_query('Swine flu vaccine').phrases == ('Swine flu', 'flu vaccine', 'Swine flu vaccine')
        assert prepare_query('Swine_NN flu_NN vaccine_NN').individuals == ('Swine', 'flu', 'vaccine')
        assert prepare_query('Verdict of the court').individuals == ('Verdict', 'court')
        assert prepare_query('') == KeywordSet()
