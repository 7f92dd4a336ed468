import io

import factory
from lxml import etree

from QueryExpansion.wiki.dump import Page

EXPORT_NS = 'http://www.mediawiki.org/xml/export-0.10/'


class PageFactory(factory.Factory):
    class Meta:
        model = Page

    title = factory.Sequence(lambda n: f'Filler {n}')
    ns = 0
    text = factory.LazyAttribute(lambda p: f"'''{p.title}''' is a filler article.")
    redirect = None


class RedirectFactory(PageFactory):
    redirect = 'Target'
    text = factory.LazyAttribute(lambda p: f'#REDIRECT [[{p.redirect}]]')


def build_dump(pages: list[Page]) -> bytes:
    """
    Serialises pages as a MediaWiki export document.
    """
    root = etree.Element(f'{{{EXPORT_NS}}}mediawiki', nsmap={None: EXPORT_NS})
    etree.SubElement(etree.SubElement(root, f'{{{EXPORT_NS}}}siteinfo'), f'{{{EXPORT_NS}}}sitename').text = 'Wikipedia'
    for i, page in enumerate(pages, start=1):
        el = etree.SubElement(root, f'{{{EXPORT_NS}}}page')
        etree.SubElement(el, f'{{{EXPORT_NS}}}title').text = page.title
        etree.SubElement(el, f'{{{EXPORT_NS}}}ns').text = str(page.ns)
        etree.SubElement(el, f'{{{EXPORT_NS}}}id').text = str(i)
        if page.redirect is not None:
            etree.SubElement(el, f'{{{EXPORT_NS}}}redirect', title=page.redirect)
        revision = etree.SubElement(el, f'{{{EXPORT_NS}}}revision')
        etree.SubElement(revision, f'{{{EXPORT_NS}}}text').text = page.text
    return etree.tostring(root, xml_declaration=True, encoding='utf-8', pretty_print=True)


def build_graph(pages: list[Page], **kwargs):
    from QueryExpansion.wiki.ingest import build_graph_store

    return build_graph_store(io.BytesIO(build_dump(pages)), **kwargs)[0]
