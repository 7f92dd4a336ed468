import factory

from QueryExpansion.expansion.pipeline import ExpansionTerm


class ExpansionTermFactory(factory.Factory):
    class Meta:
        model = ExpansionTerm

    term = factory.Sequence(lambda n: f'term{n}')
    source = 'wiki'
    origin = 'query'
    stage1_score = 1.0
    correlation = 1.0
    weight = 0.0
