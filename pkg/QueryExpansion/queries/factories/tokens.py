import factory

from QueryExpansion.queries.tagger import TaggedToken


class TaggedTokenFactory(factory.Factory):
    class Meta:
        model = TaggedToken

    surface = factory.Sequence(lambda n: f'word{n}')
    normalized = factory.LazyAttribute(lambda t: t.surface.lower())
    tag = 'NN'


def tagged(text: str) -> list[TaggedToken]:
    """
    "big/JJ cat/NN" to tagged tokens.
    """
    tokens = []
    for pair in text.split():
        surface, _, tag = pair.rpartition('/')
        tokens.append(TaggedTokenFactory(surface=surface, tag=tag))
    return tokens
