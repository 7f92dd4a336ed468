from pathlib import Path

import factory

from QueryExpansion.wordnet.lexicon import POS_FILES, normalize_lemma

HEADER = '  1 WordNet test database\n'
LEXNAMES = ('adj.all', 'adj.pert', 'adv.all', 'noun.Tops', 'noun.act', 'noun.animal')
LEXFILE_TYPES = {'adj': 3, 'adv': 4, 'noun': 1}
NOUN_ANIMAL = 5


class SynsetFactory(factory.DictFactory):
    key = factory.Sequence(lambda n: f'synset{n}')
    lemmas = factory.Sequence(lambda n: (f'lemma{n}',))
    gloss = 'a test synset'
    hyponyms = ()


def _data_line(synset: dict, offsets: dict[str, int], hypernyms: dict[str, list[str]]) -> str:
    words = ' '.join(f'{normalize_lemma(lemma)} 0' for lemma in synset['lemmas'])
    pointers = [f'~ {offsets[h]:08d} n 0000' for h in synset['hyponyms']]
    pointers += [f'@ {offsets[h]:08d} n 0000' for h in hypernyms.get(synset['key'], ())]
    return (
        f'{offsets[synset["key"]]:08d} {NOUN_ANIMAL:02d} n {len(synset["lemmas"]):02x} {words} '
        f'{len(pointers):03d} {" ".join(pointers)} | {synset["gloss"]}  \n'
    )


def write_wordnet(directory: Path, synsets: list[dict]) -> Path:
    """
    Writes synsets as noun data and index files, each synset at the byte offset of its line; the other parts of
    speech get header-only files.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    hypernyms = {}
    for s in synsets:
        for h in s['hyponyms']:
            hypernyms.setdefault(h, []).append(s['key'])

    # offsets are fixed width so line lengths do not depend on them
    offsets = dict.fromkeys((s['key'] for s in synsets), 0)
    position = len(HEADER)
    for s in synsets:
        offsets[s['key']] = position
        position += len(_data_line(s, offsets, hypernyms).encode())
    data = [HEADER] + [_data_line(s, offsets, hypernyms) for s in synsets]
    (directory / 'data.noun').write_text(''.join(data), encoding='utf-8')

    index = {}
    for s in synsets:
        symbols = ({'~'} if s['hyponyms'] else set()) | ({'@'} if s['key'] in hypernyms else set())
        for lemma in s['lemmas']:
            entry = index.setdefault(normalize_lemma(lemma), ([], set()))
            entry[0].append(f'{offsets[s["key"]]:08d}')
            entry[1].update(symbols)
    with open(directory / 'index.noun', 'w', encoding='utf-8') as f:
        f.write(HEADER)
        for lemma, (lemma_offsets, symbols) in sorted(index.items()):
            n = len(lemma_offsets)
            f.write(f'{lemma} n {n} {len(symbols)} {" ".join(sorted(symbols))} {n} 0 {" ".join(lemma_offsets)}  \n')

    for name in POS_FILES.values():
        if name != 'noun':
            (directory / f'data.{name}').write_text(HEADER, encoding='utf-8')
            (directory / f'index.{name}').write_text(HEADER, encoding='utf-8')
        (directory / f'{name}.exc').write_text('', encoding='utf-8')
    (directory / 'lexnames').write_text(
        ''.join(f'{i:02d}\t{name}\t{LEXFILE_TYPES[name.split(".")[0]]}\n' for i, name in enumerate(LEXNAMES)),
        encoding='utf-8',
    )
    return directory
