"""Target meta-model: the controller tier of an MVC 2 web application.

The model is a resource with three roots, always in this order: the view
package (pages), the action mapping (actions with their forwards) and the
form bean (action forms). Cross references between elements are kept as
object references in memory and become fragment paths such as
``/0/@view.3`` only when addressed or serialized.
"""

from __future__ import annotations

import re
from collections.abc import Iterator
from dataclasses import dataclass, field

from mvc2gen.errors import PathError, Violation


@dataclass(eq=False)
class JspPage:
    name: str | None = None


@dataclass(eq=False)
class ViewPackage:
    name: str | None = None
    views: list[JspPage] = field(default_factory=list)


@dataclass(eq=False)
class ActionForward:
    name: str | None = None
    target: JspPage | None = None

    def __repr__(self) -> str:
        target = self.target.name if self.target is not None else None
        return f"ActionForward(name={self.name!r}, target={target!r})"


@dataclass(eq=False)
class Action:
    path: str | None = None
    name: str | None = None
    type: str | None = None
    input: str | None = None
    forwards: list[ActionForward] = field(default_factory=list)


@dataclass(eq=False)
class ActionMapping:
    actions: list[Action] = field(default_factory=list)


@dataclass(eq=False)
class ActionForm:
    name: str | None = None


@dataclass(eq=False)
class FormBean:
    forms: list[ActionForm] = field(default_factory=list)


@dataclass(eq=False)
class StrutsModel:
    view_package: ViewPackage = field(default_factory=ViewPackage)
    action_mapping: ActionMapping = field(default_factory=ActionMapping)
    form_bean: FormBean = field(default_factory=FormBean)

    @property
    def roots(self) -> tuple[ViewPackage, ActionMapping, FormBean]:
        return (self.view_package, self.action_mapping, self.form_bean)

    @property
    def views(self) -> list[JspPage]:
        return self.view_package.views

    @property
    def actions(self) -> list[Action]:
        return self.action_mapping.actions

    @property
    def forms(self) -> list[ActionForm]:
        return self.form_bean.forms


# containment feature per owner type: (fragment feature name, attribute)
CONTAINMENT = {
    ViewPackage: ("view", "views"),
    ActionMapping: ("action", "actions"),
    Action: ("forward", "forwards"),
    FormBean: ("form", "forms"),
}

_PATH_RE = re.compile(r"/(\d+)((?:/@[A-Za-z]+\.\d+)*)")
_SEGMENT_RE = re.compile(r"/@([A-Za-z]+)\.(\d+)")


def iter_contents(model: StrutsModel) -> Iterator[tuple[str, object]]:
    """Yield ``(fragment_path, element)`` for every element of *model*, roots included."""

    def walk(prefix: str, owner: object) -> Iterator[tuple[str, object]]:
        yield prefix, owner
        spec = CONTAINMENT.get(type(owner))
        if spec is None:
            return
        feature, attr = spec
        for i, child in enumerate(getattr(owner, attr)):
            yield from walk(f"{prefix}/@{feature}.{i}", child)

    for index, root in enumerate(model.roots):
        yield from walk(f"/{index}", root)


def fragment_path(model: StrutsModel, el: object) -> str:
    for path, candidate in iter_contents(model):
        if candidate is el:
            return path
    raise PathError("not-contained", f"{el!r} is not contained in the model")


def resolve_fragment(model: StrutsModel, path: str) -> object:
    """Return the element addressed by *path*; the inverse of :func:`fragment_path`."""
    m = _PATH_RE.fullmatch(path) if isinstance(path, str) else None
    if m is None:
        raise PathError("bad-path", f"malformed fragment {path!r}")
    index = int(m.group(1))
    if index >= len(model.roots):
        raise PathError("out-of-range", f"no root {index}", path)
    node: object = model.roots[index]
    for feature, pos in _SEGMENT_RE.findall(m.group(2)):
        spec = CONTAINMENT.get(type(node))
        if spec is None or spec[0] != feature:
            raise PathError("out-of-range", f"{type(node).__name__} has no feature {feature!r}", path)
        children = getattr(node, spec[1])
        if int(pos) >= len(children):
            raise PathError("out-of-range", f"{feature} index {pos} out of range", path)
        node = children[int(pos)]
    return node


def validate_psm(model: StrutsModel) -> list[Violation]:
    out: list[Violation] = []
    view_ids = set()
    names: set[str] = set()
    for i, page in enumerate(model.views):
        path = f"/0/@view.{i}"
        view_ids.add(id(page))
        if not page.name:
            out.append(Violation(path, "empty-name", "page without a name"))
            continue
        if not page.name.endswith(".jsp"):
            out.append(Violation(path, "bad-page-name", page.name))
        if page.name in names:
            out.append(Violation(path, "duplicate-view", page.name))
        names.add(page.name)

    paths: set[str] = set()
    for i, action in enumerate(model.actions):
        where = f"/1/@action.{i}"
        if not action.path or not action.path.startswith("/"):
            out.append(Violation(where, "bad-action-path", repr(action.path)))
        elif action.path in paths:
            out.append(Violation(where, "duplicate-action", action.path))
        paths.add(action.path)
        if not action.type:
            out.append(Violation(where, "missing-type"))
        if action.input is not None and not (
            action.input.startswith("/") and action.input.endswith(".jsp")
        ):
            out.append(Violation(where, "bad-input", action.input))
        if len(action.forwards) != 1:
            out.append(Violation(where, "forward-count", f"{len(action.forwards)} forwards"))
        for j, fwd in enumerate(action.forwards):
            fpath = f"{where}/@forward.{j}"
            if not fwd.name:
                out.append(Violation(fpath, "empty-name", "forward without a name"))
            if fwd.target is None or id(fwd.target) not in view_ids:
                out.append(Violation(fpath, "dangling-forward", "target is not a view of root 0"))

    forms: set[str] = set()
    for i, form in enumerate(model.forms):
        where = f"/2/@form.{i}"
        if not form.name:
            out.append(Violation(where, "empty-name", "form without a name"))
            continue
        if not form.name.endswith("Form"):
            out.append(Violation(where, "bad-form-name", form.name))
        if form.name in forms:
            out.append(Violation(where, "duplicate-form", form.name))
        forms.add(form.name)
    return out
