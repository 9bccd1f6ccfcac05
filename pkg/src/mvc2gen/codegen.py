"""Scaffolding from a target model: struts-config.xml plus stub sources.

Layout of the generated file set::

    struts-config.xml
    web/<Page>.jsp
    src/<package path>/<ActionType>.java
    src/<package path>/<FormName>Bean.java
"""

from __future__ import annotations

import posixpath
import re
from dataclasses import dataclass, field
from pathlib import Path

from mvc2gen import psm
from mvc2gen.errors import CodegenError
from mvc2gen.modelio.xmltree import XmiDocument, element, render

DEFAULT_PACKAGE = "app.web"
STRUTS_DOCTYPE = (
    '<!DOCTYPE struts-config PUBLIC "-//Apache Software Foundation//DTD Struts Configuration 1.3//EN" '
    '"http://struts.apache.org/dtds/struts-config_1_3.dtd">'
)
_PACKAGE_RE = re.compile(r"[A-Za-z_]\w*(\.[A-Za-z_]\w*)*")


def _check_model(model: psm.StrutsModel) -> None:
    problems = psm.validate_psm(model)
    if problems:
        raise CodegenError("invalid-model", "; ".join(map(str, problems)))


def _check_package(pkg: str) -> None:
    if not isinstance(pkg, str) or not _PACKAGE_RE.fullmatch(pkg):
        raise CodegenError("invalid-package", f"{pkg!r} is not a dotted identifier")


def form_bean_type(form: psm.ActionForm, pkg: str) -> str:
    return f"{pkg}.{form.name}Bean"


def emit_struts_config(model: psm.StrutsModel, pkg: str = DEFAULT_PACKAGE) -> XmiDocument:
    _check_model(model)
    _check_package(pkg)
    beans = element("form-beans")
    for form in model.forms:
        beans.append(element("form-bean", {"name": form.name, "type": form_bean_type(form, pkg)}))
    mappings = element("action-mappings")
    for action in model.actions:
        el = element("action", {
            "path": action.path,
            "name": action.name,
            "type": action.type,
            "input": action.input,
        })
        for fwd in action.forwards:
            el.append(element("forward", {"name": fwd.name, "path": "/" + fwd.target.name}))
        mappings.append(el)
    return element("struts-config", children=[beans, mappings])


def render_struts_config(model: psm.StrutsModel, pkg: str = DEFAULT_PACKAGE) -> str:
    return render(emit_struts_config(model, pkg), doctype=STRUTS_DOCTYPE)


@dataclass
class GeneratedFileSet:
    files: dict[str, str] = field(default_factory=dict)

    def add(self, path: str, content: str) -> None:
        norm = posixpath.normpath(path)
        if path.startswith("/") or norm != path or norm.split("/")[0] == "..":
            raise CodegenError("bad-output-path", path)
        if path in self.files:
            raise CodegenError("duplicate-output", path)
        self.files[path] = content

    def __len__(self) -> int:
        return len(self.files)

    def __contains__(self, path: str) -> bool:
        return path in self.files

    def paths(self) -> list[str]:
        return sorted(self.files)

    def write(self, outdir: str | Path) -> list[Path]:
        written = []
        for rel in self.paths():
            target = Path(outdir, rel)
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(self.files[rel], encoding="utf-8")
            written.append(target)
        return written


def _jsp_stub(page: psm.JspPage, model: psm.StrutsModel) -> str:
    sources = [a.path for a in model.actions if any(f.target is page for f in a.forwards)]
    return (
        f"<%-- {page.name}: generated view, forwarded to by {', '.join(sources) or 'no action'} --%>\n"
        f"<%@ page contentType=\"text/html; charset=UTF-8\" %>\n"
        f"<html>\n<body>\n<%-- TODO: render {page.name} --%>\n</body>\n</html>\n"
    )


def _action_stub(action: psm.Action, pkg: str) -> str:
    form = action.name or "none"
    forward = action.forwards[0].target.name if action.forwards else "none"
    return (
        f"// Generated controller for action {action.path} (form: {form}, success: {forward})\n"
        f"package {pkg};\n\n"
        f"public class {action.type} {{\n"
        f"    // TODO: implement {action.path}\n"
        f"}}\n"
    )


def _form_stub(form: psm.ActionForm, pkg: str) -> str:
    cls = form.name + "Bean"
    return (
        f"// Generated form bean for form {form.name}\n"
        f"package {pkg};\n\n"
        f"public class {cls} {{\n"
        f"    // TODO: declare the fields of {form.name}\n"
        f"}}\n"
    )


def emit_stub_files(model: psm.StrutsModel, pkg: str = DEFAULT_PACKAGE) -> GeneratedFileSet:
    _check_package(pkg)
    _check_model(model)
    src = "src/" + pkg.replace(".", "/")
    out = GeneratedFileSet()
    for page in model.views:
        out.add(f"web/{page.name}", _jsp_stub(page, model))
    for action in model.actions:
        out.add(f"{src}/{action.type}.java", _action_stub(action, pkg))
    for form in model.forms:
        out.add(f"{src}/{form.name}Bean.java", _form_stub(form, pkg))
    return out


def generate(model: psm.StrutsModel, pkg: str = DEFAULT_PACKAGE) -> GeneratedFileSet:
    """Stub files plus ``struts-config.xml``."""
    files = emit_stub_files(model, pkg)
    files.add("struts-config.xml", render_struts_config(model, pkg))
    return files
