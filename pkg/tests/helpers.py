"""Fixture generators and the brute-force name-table oracle.

The oracle deliberately shares no code with mvc2gen: it enumerates
(class, operation) pairs and applies the naming formulas directly on plain
tuples.
"""

import random
from pathlib import Path

from mvc2gen.pim import ClassDecl, build_model

DATA = Path(__file__).parent / "data"
CRUD = ["Create", "Delete", "Retrieve", "Update"]


def chain_decls():
    ops = [(k, k) for k in CRUD]
    return [
        ClassDecl("Ci", None, [], list(ops)),
        ClassDecl("Cj", "Ci", [], list(ops)),
        ClassDecl("Ck", "Cj", [], list(ops)),
    ]


def chain_model():
    return build_model("", chain_decls())


def random_forest(rng: random.Random, max_classes=10, extra_ops=False, min_classes=1):
    """Random forest of classes with full CRUD, in shuffled declaration order.

    Returns ``(decls, roots)``. With *extra_ops* some classes also get
    operations with non-CRUD names.
    """
    n = rng.randint(min_classes, max_classes)
    names = [f"C{i}" for i in range(n)]
    rng.shuffle(names)
    parents = [None] + [None] * (n - 1)
    for i in range(1, n):
        parents[i] = None if rng.random() < 0.3 else names[rng.randrange(i)]
    decls = []
    for name, parent in zip(names, parents):
        ops = list(CRUD)
        if extra_ops and rng.random() < 0.4:
            ops.append(rng.choice(["Archive", "List", "Export"]))
        rng.shuffle(ops)
        decls.append(ClassDecl(name, parent, [], [(op, op if op in CRUD else None) for op in ops]))
    rng.shuffle(decls)
    roots = sum(parent is None for parent in parents)
    return decls, roots


def random_model(rng, **kw):
    decls, roots = random_forest(rng, **kw)
    return build_model("", decls), decls, roots


def name_table(decls):
    """Expected pages, actions and forms computed straight from the formulas.

    *decls* are (name, parent, [op names]) triples or ClassDecl objects.
    Returns ``(views, actions, forms)`` where each action is the tuple
    ``(path, name, type, input, forward_page)``.
    """
    rows = []
    for ci, d in enumerate(decls):
        cname, parent, ops = (d.name, d.parent, [o for o, _ in d.operations]) if isinstance(d, ClassDecl) else d
        for oi, op in enumerate(ops):
            rows.append((op, ci, oi, cname, parent, ops))

    # operation name first, then class position, then operation position
    ordered = []
    for op_name in sorted({r[0] for r in rows}):
        for ci in range(len(decls)):
            ordered.extend(r for r in rows if r[0] == op_name and r[1] == ci)

    views, actions, end_forms, forms = [], [], [], []
    for op, _, _, cname, parent, ops in ordered:
        if op != "Delete":
            views.append(f"{op}{cname}.jsp")
        if parent is None:
            form = None if op == "Retrieve" else f"{op}{cname}Form"
            inp = None
        else:
            form = f"{op}{cname}Form"
            inp = f"/Retrieve{parent}.jsp" if op == "Delete" else f"/{op}{parent}.jsp"
        page = f"Retrieve{cname}.jsp" if op == "Delete" else f"{op}{cname}.jsp"
        actions.append((f"/{op}{cname}", form, f"{op}{cname}Action", inp, page))
        if op in ("Create", "Update"):
            end_forms.append(f"{op}{cname}EndForm")
        if form is not None:
            forms.append(form)
    return views, actions, end_forms + forms


def engine_table(model):
    """The same table read off a transformed target model."""
    views = [v.name for v in model.views]
    actions = [
        (a.path, a.name, a.type, a.input, a.forwards[0].target.name)
        for a in model.actions
    ]
    return views, actions, [f.name for f in model.forms]
