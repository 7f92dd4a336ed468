import math
from unittest import mock

import pytest

from QueryExpansion.common.tests import QETestCase, fixture_graph, fixture_wordnet
from QueryExpansion.expansion.candidates import wiki_candidates, wordnet_candidates, wordnet_units
from QueryExpansion.expansion.scoring import (
    CorrelationUndefined,
    article_term_weight,
    correlation_score,
    inlink_score,
    wordnet_score,
)
from QueryExpansion.queries.factories.tokens import tagged
from QueryExpansion.queries.keywords import KeywordSet, extract_keywords
from QueryExpansion.wiki.factories.pages import PageFactory, build_graph
from QueryExpansion.wiki.graph import InvalidArticle
from QueryExpansion.wiki.tests.test_graph import isro_graph


def eight_article_graph():
    return build_graph(
        [
            PageFactory(title='Bird', text='A bird has a [[Wing|wing]].'),
            PageFactory(
                title='Wing',
                text='The wing helps every bird fly. A bird or fowl flaps it, and the bird glides. '
                'See [[Bird|the animal]].',
            ),
            PageFactory(title='Swine', text='Swine is a [[Pig|pig]]. Farmers keep every pig.'),
            PageFactory(title='Pig', text='A pig is a [[Swine|swine]].'),
            *PageFactory.build_batch(4),
        ]
    )


class WikiCandidatesTestCase(QETestCase):
    def test_out_and_in_link(self):
        graph = build_graph(
            [
                PageFactory(title='Bird', text='[[Wing]] [[Feather]] [[Egg]]'),
                PageFactory(title='Wing', text='[[Bird]]'),
                PageFactory(title='Nest', text='[[Bird]]'),
                PageFactory(title='Feather'),
                PageFactory(title='Egg'),
            ]
        )
        assert wiki_candidates(graph, 'Bird') == {'wing'}

    def test_no_article(self):
        assert wiki_candidates(fixture_graph(), 'Zeppelin') == set()

    def test_redirect(self):
        assert wiki_candidates(isro_graph(), 'ISRO') == {'satellite'}

    def test_candidates_are_sound(self):
        graph = fixture_graph()
        for unit in ('swine', 'flu', 'vaccine', 'bird', 'nest'):
            a = graph.resolve_title(unit)
            for title in wiki_candidates(graph, unit):
                y = graph.resolve_title(title)
                assert y in graph.out_links(a) and y in graph.in_links(a)


class WordnetCandidatesTestCase(QETestCase):
    def setUp(self):
        self.wn = fixture_wordnet()

    def test_phrase_first(self):
        keywords = extract_keywords(tagged('Swine/NN flu/NN vaccine/NN'))
        assert wordnet_units(self.wn, keywords) == ['Swine flu', 'vaccine']
        origins = {unit for unit, _ in wordnet_candidates(self.wn, keywords)}
        assert origins == {'Swine flu', 'vaccine'}
        assert wordnet_candidates(self.wn, keywords) == {('Swine flu', 'swine influenza'), ('vaccine', 'vaccinum')}

    def test_fallback_to_individuals(self):
        keywords = extract_keywords(tagged('flu/NN vaccine/NN'))
        assert wordnet_units(self.wn, keywords) == ['flu', 'vaccine']
        terms = {term for _, term in wordnet_candidates(self.wn, keywords, relations=('synonym',))}
        assert terms == {'influenza', 'grippe', 'vaccinum'}

    def test_empty_keywords(self):
        assert wordnet_candidates(self.wn, KeywordSet()) == set()

    def test_candidates_within_two_hops(self):
        keywords = extract_keywords(tagged('bird/NN nest/NN'))
        for unit, term in wordnet_candidates(self.wn, keywords):
            assert term in self.wn.two_level_terms(unit, 'synonym') | self.wn.two_level_terms(unit, 'hyponym')


class StageOneScoreTestCase(QETestCase):
    def setUp(self):
        self.graph = eight_article_graph()
        self.wn = fixture_wordnet()

    def test_inlink_score(self):
        assert self.graph.n_articles == 8
        self.assertClose(inlink_score(self.graph, self.wn, 'bird', 'Wing'), 4 * math.log(4), tol=1e-4)
        self.assertClose(inlink_score(self.graph, self.wn, 'bird', 'Wing'), 5.5452, tol=1e-4)

    def test_inlink_score_no_mention(self):
        assert inlink_score(self.graph, self.wn, 'tractor', 'Wing') == 0

    def test_inlink_score_idf_zero(self):
        graph = build_graph([PageFactory(title=t, text=f'{t} and [[A]] [[B]]') for t in ('A', 'B')])
        # both titles occur in both articles
        assert inlink_score(graph, self.wn, 'a', 'B') == 0

    def test_inlink_unresolvable(self):
        with pytest.raises(InvalidArticle):
            inlink_score(self.graph, self.wn, 'bird', 'Zeppelin')

    def test_wordnet_score(self):
        self.assertClose(wordnet_score(self.graph, 'pig', 'swine'), 2 * math.log(4))
        self.assertClose(wordnet_score(self.graph, 'pig', 'swine'), 2.7726, tol=1e-4)
        assert wordnet_score(self.graph, 'tractor', 'swine') == 0

    def test_wordnet_score_no_article(self):
        assert wordnet_score(self.graph, 'pig', 'swine flu') == 0

    def test_wordnet_score_term_everywhere(self):
        assert self.graph.document_frequency('a') == 8
        assert wordnet_score(self.graph, 'a', 'swine') == 0


class CorrelationTestCase(QETestCase):
    def setUp(self):
        self.graph = build_graph(
            [
                PageFactory(title='A', text='egg egg nest'),
                PageFactory(title='B', text='egg egg egg'),
                PageFactory(title='C', text='egg egg egg hatch'),
            ]
        )
        self.a_q = {0, 1, 2}

    def test_article_term_weight(self):
        self.assertClose(article_term_weight(self.graph, 'egg', 0, self.a_q), 2 * math.log(4))
        self.assertClose(article_term_weight(self.graph, 'egg', 0, self.a_q), 2.7726, tol=1e-4)

    def test_term_only_in_article(self):
        assert article_term_weight(self.graph, 'nest', 0, self.a_q) == 0

    def test_term_absent(self):
        assert article_term_weight(self.graph, 'hatch', 0, self.a_q) == 0

    def test_article_outside_query(self):
        with pytest.raises(ValueError):
            article_term_weight(self.graph, 'egg', 2, {0, 1})

    @mock.patch('QueryExpansion.expansion.scoring.article_term_weight')
    def test_correlation_average(self, mock_weight):
        mock_weight.side_effect = [3.0, 1.0, 1.0, 1.0]
        assert correlation_score(self.graph, 'hatch', ['a', 'b'], self.a_q) == 2.0
        assert mock_weight.call_count == 4

    def test_candidate_absent_everywhere(self):
        assert correlation_score(self.graph, 'zeppelin', ['a', 'b'], self.a_q) == 0

    def test_unresolvable_units_ignored(self):
        graph = fixture_graph()
        a_q = {graph.resolve_title(u) for u in ('swine', 'flu', 'vaccine')}
        score = correlation_score(graph, 'influenza', ['swine', 'zeppelin', 'flu', 'vaccine'], a_q)
        self.assertClose(score, 2.108464)

    def test_no_resolvable_unit(self):
        with pytest.raises(CorrelationUndefined, match='correlation undefined'):
            correlation_score(self.graph, 'egg', ['zeppelin'], self.a_q)


class FixtureCorrelationTestCase(QETestCase):
    def test_query_126_correlations(self):
        graph = fixture_graph()
        units = ['swine', 'flu', 'vaccine']
        a_q = {graph.resolve_title(u) for u in units}
        self.assertClose(correlation_score(graph, 'influenza', units, a_q), 2.108464)
        self.assertClose(correlation_score(graph, 'pig', units, a_q), 0.740956)
        self.assertClose(correlation_score(graph, 'swine influenza', units, a_q), 0.519708)
        assert correlation_score(graph, 'vaccinum', units, a_q) == 0
