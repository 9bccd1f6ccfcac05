"""XML document tree shared by every reader and writer.

Documents are plain :class:`xml.etree.ElementTree.Element` trees. Rendering
is done here rather than by ``ElementTree.tostring`` so output is
byte-stable: two-space indent, one element per line, double-quoted
attributes in insertion order, ``<tag/>`` for empty elements.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from xml.sax.saxutils import escape

from mvc2gen.errors import ParseError

XmiDocument = ET.Element

DECLARATION = '<?xml version="1.0" encoding="UTF-8"?>'


def element(tag: str, attrs: dict[str, str | None] | None = None, children=()) -> ET.Element:
    """Build an element, dropping attributes whose value is None."""
    el = ET.Element(tag, {k: v for k, v in (attrs or {}).items() if v is not None})
    el.extend(children)
    return el


def render(root: ET.Element, doctype: str | None = None) -> str:
    lines = [DECLARATION]
    if doctype:
        lines.append(doctype)
    _emit(root, 0, lines)
    return "\n".join(lines) + "\n"


def _quote(value: str) -> str:
    return '"' + escape(value, {'"': "&quot;", "\n": "&#10;", "\t": "&#9;"}) + '"'


def _emit(el: ET.Element, depth: int, lines: list[str]) -> None:
    pad = "  " * depth
    attrs = "".join(f" {k}={_quote(v)}" for k, v in el.attrib.items())
    if len(el) == 0:
        lines.append(f"{pad}<{el.tag}{attrs}/>")
        return
    lines.append(f"{pad}<{el.tag}{attrs}>")
    for child in el:
        _emit(child, depth + 1, lines)
    lines.append(f"{pad}</{el.tag}>")


def parse_xml(text: str | bytes) -> ET.Element:
    try:
        return ET.fromstring(text)
    except ET.ParseError as exc:
        line, column = exc.position
        raise ParseError("xml-malformed", str(exc), line=line, column=column) from exc


def local_name(tag: str) -> str:
    """``{uri}name`` or ``prefix:name`` to ``name``."""
    return tag.rsplit("}", 1)[-1].rsplit(":", 1)[-1]


def namespace(tag: str) -> str | None:
    return tag[1:].split("}", 1)[0] if tag.startswith("{") else None


def plain_attrs(el: ET.Element) -> dict[str, str]:
    """Attributes without a namespace; namespaced ones (xmi:version, ...) are ignored."""
    return {k: v for k, v in el.attrib.items() if not k.startswith("{") and ":" not in k}
