"""Structural comparison of two target models, for golden-file tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from mvc2gen import psm
from mvc2gen.errors import PathError


@dataclass(frozen=True)
class Difference:
    path: str
    kind: str  # missing, extra, attr-mismatch, order
    expected: object
    actual: object
    feature: str | None = None

    def __str__(self) -> str:
        where = f"{self.path} {self.feature}" if self.feature else self.path
        return f"{where} {self.kind} expected={self.expected!r} actual={self.actual!r}"


@dataclass
class ModelDiff:
    differences: list[Difference] = field(default_factory=list)

    @property
    def empty(self) -> bool:
        return not self.differences

    def __len__(self) -> int:
        return len(self.differences)

    def __iter__(self):
        return iter(self.differences)

    def kinds(self) -> list[str]:
        return [d.kind for d in self.differences]


def _target_path(model: psm.StrutsModel, fwd: psm.ActionForward) -> str | None:
    try:
        return psm.fragment_path(model, fwd.target)
    except PathError:
        return None


def diff_psm(expected: psm.StrutsModel, actual: psm.StrutsModel) -> ModelDiff:
    out: list[Difference] = []

    def attrs(path, a, b, names):
        for feature in names:
            x, y = getattr(a, feature), getattr(b, feature)
            if x != y:
                out.append(Difference(path, "attr-mismatch", x, y, feature))

    def forwards(path, a, b):
        attrs(path, a, b, ("name",))
        x, y = _target_path(expected, a), _target_path(actual, b)
        if x != y:
            out.append(Difference(path, "attr-mismatch", x, y, "path"))

    def action(path, a, b):
        attrs(path, a, b, ("path", "name", "type", "input"))
        seq(path, "forward", a.forwards, b.forwards, lambda f: f.name, forwards)

    def simple(path, a, b):
        attrs(path, a, b, ("name",))

    def seq(prefix, feature, xs, ys, key, compare):
        kx, ky = [key(x) for x in xs], [key(y) for y in ys]
        if kx != ky and Counter(kx) == Counter(ky) and len(set(kx)) == len(kx):
            out.append(Difference(prefix, "order", kx, ky, feature))
            ys = [ys[ky.index(k)] for k in kx]
        for i, (x, y) in enumerate(zip(xs, ys)):
            compare(f"{prefix}/@{feature}.{i}", x, y)
        for i in range(len(ys), len(xs)):
            out.append(Difference(f"{prefix}/@{feature}.{i}", "missing", key(xs[i]), None))
        for i in range(len(xs), len(ys)):
            out.append(Difference(f"{prefix}/@{feature}.{i}", "extra", None, key(ys[i])))

    attrs("/0", expected.view_package, actual.view_package, ("name",))
    seq("/0", "view", expected.views, actual.views, lambda v: v.name, simple)
    seq("/1", "action", expected.actions, actual.actions, lambda a: a.path, action)
    seq("/2", "form", expected.forms, actual.forms, lambda f: f.name, simple)
    return ModelDiff(out)
