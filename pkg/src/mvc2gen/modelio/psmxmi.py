"""XMI reader and writer for target models.

The writer output is the golden format: it is byte-stable and a forward
refers to its page by fragment path (``/0/@view.3``).
"""

from __future__ import annotations

from mvc2gen import psm
from mvc2gen.errors import Mvc2GenError, ParseError, PathError
from mvc2gen.modelio.xmltree import (
    XmiDocument,
    element,
    local_name,
    parse_xml,
    plain_attrs,
    render,
)

XMI_NS = "http://www.omg.org/XMI"
CONTAINER_TAGS = ("ViewPackage", "actionmappings", "formbeans")


def write_psm_xmi(model: psm.StrutsModel) -> XmiDocument:
    problems = psm.validate_psm(model)
    if problems:
        raise Mvc2GenError("invalid-model", "; ".join(map(str, problems)))
    root = element("xmi:XMI", {"xmi:version": "2.0", "xmlns:xmi": XMI_NS})
    views = element("ViewPackage", {"name": model.view_package.name or None})
    views.extend(element("view", {"name": page.name}) for page in model.views)
    actions = element("actionmappings")
    for action in model.actions:
        el = element("action", {
            "path": action.path,
            "name": action.name,
            "type": action.type,
            "input": action.input,
        })
        for fwd in action.forwards:
            el.append(element("forward", {
                "name": fwd.name,
                "path": psm.fragment_path(model, fwd.target),
            }))
        actions.append(el)
    forms = element("formbeans")
    forms.extend(element("form", {"name": form.name}) for form in model.forms)
    root.extend([views, actions, forms])
    return root


def _schema(message: str, path: str) -> ParseError:
    return ParseError("schema-violation", message, path)


def _children(el: XmiDocument, tag: str, path: str) -> list[XmiDocument]:
    for i, child in enumerate(el):
        if local_name(child.tag) != tag:
            raise _schema(f"expected <{tag}>, found <{local_name(child.tag)}>", f"{path}[{i}]")
    return list(el)


def _attrs(el: XmiDocument, path: str, required=(), optional=()) -> dict[str, str]:
    attrs = plain_attrs(el)
    for key in required:
        if key not in attrs:
            raise _schema(f"<{local_name(el.tag)}> needs a {key!r} attribute", path)
    unknown = set(attrs) - set(required) - set(optional)
    if unknown:
        raise _schema(f"unexpected attribute(s) {sorted(unknown)}", path)
    return attrs


def parse_psm_xmi(doc: XmiDocument, strict: bool = True) -> psm.StrutsModel:
    """Rebuild a target model from its XMI form.

    With ``strict=False`` a forward whose fragment does not resolve to a page
    is kept, pointing at a detached placeholder page, so that
    :func:`mvc2gen.psm.validate_psm` can report it as dangling.
    """
    if local_name(doc.tag) != "XMI":
        raise _schema(f"root must be xmi:XMI, got {doc.tag!r}", "/")
    tags = [local_name(c.tag) for c in doc]
    if tags != list(CONTAINER_TAGS):
        raise _schema(f"expected containers {list(CONTAINER_TAGS)}, found {tags}", "/")
    views_el, actions_el, forms_el = doc

    model = psm.StrutsModel()
    model.view_package.name = _attrs(views_el, "/0", optional=("name",)).get("name")
    for i, el in enumerate(_children(views_el, "view", "/0/view")):
        model.views.append(psm.JspPage(_attrs(el, f"/0/@view.{i}", ("name",))["name"]))

    for i, el in enumerate(_children(actions_el, "action", "/1/action")):
        where = f"/1/@action.{i}"
        a = _attrs(el, where, ("path", "type"), ("name", "input"))
        action = psm.Action(a["path"], a.get("name"), a["type"], a.get("input"))
        for j, fel in enumerate(_children(el, "forward", f"{where}/forward")):
            f = _attrs(fel, f"{where}/@forward.{j}", ("name", "path"))
            action.forwards.append(psm.ActionForward(f["name"], _page(model, f["path"], strict)))
        model.actions.append(action)

    for i, el in enumerate(_children(forms_el, "form", "/2/form")):
        model.forms.append(psm.ActionForm(_attrs(el, f"/2/@form.{i}", ("name",))["name"]))
    return model


def _page(model: psm.StrutsModel, path: str, strict: bool) -> psm.JspPage:
    try:
        target = psm.resolve_fragment(model, path)
    except PathError as exc:
        target = exc
    if isinstance(target, psm.JspPage):
        return target
    if strict:
        raise ParseError("bad-path", f"forward path {path!r} does not address a page", path)
    return psm.JspPage(path)


def load_psm_xmi(text: str | bytes, strict: bool = True) -> psm.StrutsModel:
    return parse_psm_xmi(parse_xml(text), strict)


def dump_psm_xmi(model: psm.StrutsModel) -> str:
    return render(write_psm_xmi(model))
