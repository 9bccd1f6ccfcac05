"""The CRUD rule set: UML operations to pages, actions and forms.

Names are derived from the operation name and its owning class. Root
classes (opposite end typed by ``Void``) get no ``input`` on their actions,
and a root's Retrieve gets no form.
"""

from __future__ import annotations

from mvc2gen import pim, psm
from mvc2gen.engine import (
    MatchedRule,
    RuleModule,
    TargetTemplate,
    TraceStore,
    execute,
    make_module,
)
from mvc2gen.errors import TransformError
from mvc2gen.pim import Operation, all_method_defs, is_root, opposite_type_name

CREATE, RETRIEVE, UPDATE, DELETE = pim.CRUD_KEYWORDS


def crud_kind(op: Operation) -> str | None:
    """The CRUD keyword *op* is named after, or None for any other name."""
    return op.name if op.name in pim.CRUD_KEYWORDS else None


def jsp_name(op: Operation) -> str | None:
    if op.name == DELETE:
        return None
    return op.name + op.owner.name + ".jsp"


def action_path(op: Operation) -> str:
    return "/" + op.name + op.owner.name


def action_type(op: Operation) -> str:
    return op.name + op.owner.name + "Action"


def action_form_name(op: Operation) -> str | None:
    if is_root(op.owner) and op.name == RETRIEVE:
        return None
    return op.name + op.owner.name + "Form"


def action_input(op: Operation) -> str | None:
    if is_root(op.owner):
        return None
    parent = opposite_type_name(op.owner)
    if op.name == DELETE:
        return "/" + RETRIEVE + parent + ".jsp"
    return "/" + op.name + parent + ".jsp"


def end_form_name(op: Operation) -> str | None:
    if op.name in (CREATE, UPDATE):
        return op.name + op.owner.name + "EndForm"
    return None


def forward_target(op: Operation) -> Operation:
    """The operation whose page an action for *op* forwards to on success.

    A Delete has no page of its own and lands on its class's Retrieve page.
    """
    if op.name != DELETE:
        return op
    for sibling in op.owner.operations:
        if sibling.name == RETRIEVE:
            return sibling
    raise TransformError("missing-retrieve", f"{op.owner.name} has Delete but no Retrieve", op.owner.name)


def _page_views(pkg, ctx):
    return [ctx.resolve_temp(op, "jsp") for op in all_method_defs(ctx.model)]


def _mapping_actions(pkg, ctx):
    return [ctx.resolve_temp(op, "frm") for op in all_method_defs(ctx.model)]


def _bean_forms(pkg, ctx):
    ops = all_method_defs(ctx.model)
    return [ctx.resolve_temp(op, "actf1") for op in ops] + [ctx.resolve_temp(op, "actf") for op in ops]


def build_crud_module() -> RuleModule:
    """Assemble the six matched rules of the PIM to PSM transformation.

    Three rules match the package and three match every operation; O2Action
    owns the default target of an operation and P2View that of the package.
    """
    return make_module([
        MatchedRule("P2View", pim.UmlPackage, (
            TargetTemplate("vout", psm.ViewPackage, (
                ("name", lambda pkg, ctx: pkg.name or None),
                ("views", _page_views),
            )),
        )),
        MatchedRule("O2JspPage", pim.Operation, (
            TargetTemplate("jsp", psm.JspPage, (
                ("name", lambda op, ctx: jsp_name(op)),
            ), suppress_if_unnamed=True),
        ), provides_default=False),
        MatchedRule("UML2ActionMapping", pim.UmlPackage, (
            TargetTemplate("act", psm.ActionMapping, (
                ("actions", _mapping_actions),
            )),
        ), provides_default=False),
        MatchedRule("O2Action", pim.Operation, (
            TargetTemplate("frm", psm.Action, (
                ("path", lambda op, ctx: action_path(op)),
                ("name", lambda op, ctx: action_form_name(op)),
                ("type", lambda op, ctx: action_type(op)),
                ("input", lambda op, ctx: action_input(op)),
                ("forwards", lambda op, ctx: [ctx.resolve_temp(op, "fr")]),
            )),
            TargetTemplate("fr", psm.ActionForward, (
                ("name", lambda op, ctx: "Success"),
                ("target", lambda op, ctx: ctx.resolve_temp(forward_target(op), "jsp")),
            )),
        )),
        MatchedRule("P2FormBean", pim.UmlPackage, (
            TargetTemplate("fmb", psm.FormBean, (
                ("forms", _bean_forms),
            )),
        ), provides_default=False),
        MatchedRule("O2ActionForm", pim.Operation, (
            TargetTemplate("actf", psm.ActionForm, (
                ("name", lambda op, ctx: action_form_name(op)),
            ), suppress_if_unnamed=True),
            TargetTemplate("actf1", psm.ActionForm, (
                ("name", lambda op, ctx: end_form_name(op)),
            ), suppress_if_unnamed=True),
        ), provides_default=False),
    ])


def transform(model: pim.UmlModel) -> psm.StrutsModel:
    return transform_with_trace(model)[0]


def transform_with_trace(model: pim.UmlModel) -> tuple[psm.StrutsModel, TraceStore]:
    problems = pim.validate_pim(model)
    if problems:
        raise TransformError("invalid-input", "; ".join(map(str, problems)))
    return execute(build_crud_module(), model)
