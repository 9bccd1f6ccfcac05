"""XMI reader and writer for source models.

Layout::

    <uml:UMLPackage xmlns:uml="http://mvc2gen/uml" name="shop">
      <class name="Order" parent="Customer">
        <attr name="date" type="Date"/>
        <op name="Create" stereotype="Create"/>
      </class>
    </uml:UMLPackage>

Classes refer to their master class by name through ``parent``; a class
without ``parent`` is a root.
"""

from __future__ import annotations

from mvc2gen.errors import Mvc2GenError, ParseError
from mvc2gen.modelio.xmltree import (
    XmiDocument,
    element,
    local_name,
    namespace,
    parse_xml,
    plain_attrs,
    render,
)
from mvc2gen.pim import ClassDecl, UmlModel, build_model, is_root, opposite_type_name

UML_NS = "http://mvc2gen/uml"


def _schema(message: str, path: str) -> ParseError:
    return ParseError("schema-violation", message, path)


def _attrs(el: XmiDocument, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()):
    attrs = plain_attrs(el)
    for key in required:
        if key not in attrs:
            raise _schema(f"<{local_name(el.tag)}> needs a {key!r} attribute", path)
    unknown = set(attrs) - set(required) - set(optional)
    if unknown:
        raise _schema(f"unexpected attribute(s) {sorted(unknown)}", path)
    return attrs


def parse_pim_xmi(doc: XmiDocument) -> UmlModel:
    if local_name(doc.tag) != "UMLPackage" or namespace(doc.tag) not in (UML_NS, None):
        raise _schema(f"root must be uml:UMLPackage, got {doc.tag!r}", "/")
    pkg = _attrs(doc, "/UMLPackage", (), ("name",))
    decls = []
    for ci, cls_el in enumerate(doc):
        path = f"/UMLPackage/class[{ci}]"
        if local_name(cls_el.tag) != "class":
            raise _schema(f"unexpected <{local_name(cls_el.tag)}>", path)
        attrs = _attrs(cls_el, path, ("name",), ("parent",))
        decl = ClassDecl(attrs["name"], attrs.get("parent"))
        for mi, member in enumerate(cls_el):
            mpath = f"{path}/{local_name(member.tag)}[{mi}]"
            if local_name(member.tag) == "attr":
                a = _attrs(member, mpath, ("name", "type"))
                decl.attributes.append((a["name"], a["type"]))
            elif local_name(member.tag) == "op":
                a = _attrs(member, mpath, ("name",), ("stereotype",))
                decl.operations.append((a["name"], a.get("stereotype")))
            else:
                raise _schema(f"unexpected <{local_name(member.tag)}>", mpath)
        decls.append(decl)
    try:
        return build_model(pkg.get("name", ""), decls)
    except Mvc2GenError as exc:
        raise ParseError(exc.code, exc.message, exc.path) from None


def write_pim_xmi(model: UmlModel) -> XmiDocument:
    pkg = model.package
    root = element("uml:UMLPackage", {"xmlns:uml": UML_NS, "name": pkg.name})
    for cls in pkg.classifiers:
        parent = None if is_root(cls) else opposite_type_name(cls)
        cls_el = element("class", {"name": cls.name, "parent": parent})
        for prop in cls.properties:
            cls_el.append(element("attr", {"name": prop.name, "type": prop.type.name}))
        for op in cls.operations:
            cls_el.append(element("op", {"name": op.name, "stereotype": op.stereotype}))
        root.append(cls_el)
    return root


def load_pim_xmi(text: str | bytes) -> UmlModel:
    return parse_pim_xmi(parse_xml(text))


def dump_pim_xmi(model: UmlModel) -> str:
    return render(write_pim_xmi(model))
