import factory

from QueryExpansion.retrieval.trec import RunEntry, Topic


class TopicFactory(factory.Factory):
    class Meta:
        model = Topic

    topic_id = factory.Sequence(lambda n: 126 + n)
    title = factory.Sequence(lambda n: f'topic title {n}')


class RunEntryFactory(factory.Factory):
    class Meta:
        model = RunEntry

    docno = factory.Sequence(lambda n: f'DOC{n:03d}')
    rank = factory.Sequence(lambda n: n + 1)
    score = factory.LazyAttribute(lambda e: 100.0 - e.rank)


def ranking(docnos: list[str]) -> list[RunEntry]:
    return [RunEntryFactory(docno=d, rank=i, score=100.0 - i) for i, d in enumerate(docnos, start=1)]


def topics_file(topics: list[Topic]) -> str:
    return ''.join(f'<top>\n<num>{t.topic_id}</num>\n<title>{t.title}</title>\n</top>\n\n' for t in topics)


def trec_corpus(docs: dict[str, str]) -> str:
    return ''.join(f'<DOC>\n<DOCNO>{d}</DOCNO>\n<TEXT>\n{text}\n</TEXT>\n</DOC>\n' for d, text in docs.items())
