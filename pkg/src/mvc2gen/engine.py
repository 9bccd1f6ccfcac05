"""Two-phase matched-rule transformation engine with trace links.

A :class:`RuleModule` holds matched rules. Each rule selects source elements
by type and guard and declares one or more named target templates. Running a
module over a source model happens in two phases:

1. every (element, rule) match instantiates all its targets and records one
   trace link per template;
2. every binding is evaluated with the complete trace available, then the
   values are assigned to target features.

Between the two steps of phase 2, targets flagged ``suppress_if_unnamed``
whose bindings all came out undefined are dropped together with their trace
links, and any reference to them elsewhere reads as undefined. ``None`` is
the undefined value throughout.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field
from typing import Any

from mvc2gen import pim, psm
from mvc2gen.errors import TransformError

log = logging.getLogger(__name__)

Binding = Callable[[Any, "Context"], Any]

SOURCE_KINDS = (pim.UmlPackage, pim.Classifier, pim.Operation)
ROOT_KINDS = (psm.ViewPackage, psm.ActionMapping, psm.FormBean)


@dataclass(frozen=True)
class TargetTemplate:
    local_name: str
    target_kind: type
    bindings: tuple[tuple[str, Binding], ...] = ()
    suppress_if_unnamed: bool = False


@dataclass(frozen=True)
class MatchedRule:
    name: str
    source_kind: type
    targets: tuple[TargetTemplate, ...]
    guard: Callable[[Any], bool] | None = None
    # whether this rule's first template is what resolve() returns for the element
    provides_default: bool = True

    def __post_init__(self):
        if not self.targets:
            raise TransformError("bad-rule", "a rule needs at least one target", self.name)
        names = [t.local_name for t in self.targets]
        if len(set(names)) != len(names):
            raise TransformError("bad-rule", "template names must be unique", self.name)

    @property
    def default_target(self) -> str:
        return self.targets[0].local_name

    def matches(self, element: object) -> bool:
        if not isinstance(element, self.source_kind):
            return False
        if self.guard is None:
            return True
        try:
            return bool(self.guard(element))
        except Exception as exc:
            raise TransformError("guard-failure", f"{type(exc).__name__}: {exc}", self.name) from exc


@dataclass(frozen=True)
class RuleModule:
    rules: tuple[MatchedRule, ...] = ()

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self) -> Iterator[MatchedRule]:
        return iter(self.rules)

    def names(self) -> list[str]:
        return [r.name for r in self.rules]


def register_rule(module: RuleModule, rule: MatchedRule) -> RuleModule:
    """Return a new module with *rule* appended."""
    if rule.name in module.names():
        raise TransformError("duplicate-rule", f"rule {rule.name!r} already registered")
    return RuleModule(module.rules + (rule,))


def make_module(rules: Iterable[MatchedRule]) -> RuleModule:
    module = RuleModule()
    for rule in rules:
        module = register_rule(module, rule)
    return module


@dataclass(frozen=True)
class TraceLink:
    source: object
    name: str
    target: object
    rule: str


class TraceStore:
    """Write-once map from (source element, template name) to target element."""

    def __init__(self):
        self._links: dict[tuple[int, str], TraceLink] = {}
        self._defaults: dict[int, str] = {}
        self._matched: dict[int, object] = {}

    def record(self, source: object, name: str, target: object, rule: str, default: bool = False):
        key = (id(source), name)
        if key in self._links:
            raise TransformError("trace-overwrite", f"{source!r} already has a {name!r} target", rule)
        self._links[key] = TraceLink(source, name, target, rule)
        self._matched[id(source)] = source
        if default:
            self._defaults[id(source)] = name

    def discard(self, source: object, name: str) -> None:
        self._links.pop((id(source), name), None)

    def matched(self, source: object) -> bool:
        return id(source) in self._matched

    def lookup(self, source: object, name: str) -> object | None:
        link = self._links.get((id(source), name))
        return link.target if link is not None else None

    def default_name(self, source: object) -> str | None:
        return self._defaults.get(id(source))

    def links(self) -> list[TraceLink]:
        return list(self._links.values())

    def __len__(self) -> int:
        return len(self._links)

    def __contains__(self, key: tuple[object, str]) -> bool:
        source, name = key
        return (id(source), name) in self._links


def resolve(trace: TraceStore, src: object) -> object | None:
    """Target created from the first template of the rule that matched *src*."""
    name = trace.default_name(src)
    return None if name is None else trace.lookup(src, name)


def resolve_temp(trace: TraceStore, src: object, name: str) -> object | None:
    return trace.lookup(src, name)


@dataclass
class Context:
    """What a binding expression may see: the source model and the trace."""

    model: pim.UmlModel
    trace: TraceStore

    def resolve(self, src: object) -> object | None:
        return resolve(self.trace, src)

    def resolve_temp(self, src: object, name: str) -> object | None:
        return resolve_temp(self.trace, src, name)


@dataclass
class _Pending:
    target: object
    template: TargetTemplate
    values: list[tuple[str, Any]] = field(default_factory=list)


def execute(
    module: RuleModule,
    source: pim.UmlModel,
    trace: TraceStore | None = None,
) -> tuple[psm.StrutsModel, TraceStore]:
    trace = TraceStore() if trace is None else trace
    ctx = Context(source, trace)

    # phase 1: match and instantiate
    matches: list[tuple[object, MatchedRule, list[_Pending]]] = []
    for element in source.elements():
        hits = [rule for rule in module if rule.matches(element)]
        _check_overlap(element, hits)
        for rule in hits:
            created = []
            for template in rule.targets:
                target = template.target_kind()
                is_default = rule.provides_default and template.local_name == rule.default_target
                trace.record(element, template.local_name, target, rule.name, default=is_default)
                created.append(_Pending(target, template))
            matches.append((element, rule, created))
    log.debug("phase 1: %d matches, %d trace links", len(matches), len(trace))

    # phase 2: evaluate every binding against the complete trace
    for element, rule, created in matches:
        for pending in created:
            for feature, expr in pending.template.bindings:
                pending.values.append((feature, expr(element, ctx)))

    suppressed: set[int] = set()
    for element, rule, created in matches:
        for pending in created:
            tpl = pending.template
            if tpl.suppress_if_unnamed and all(v is None for _, v in pending.values):
                suppressed.add(id(pending.target))
                trace.discard(element, tpl.local_name)

    for element, rule, created in matches:
        for pending in created:
            if id(pending.target) in suppressed:
                continue
            for feature, raw in pending.values:
                _assign(pending.target, feature, raw, trace, suppressed, rule.name)

    roots = {}
    for _, rule, created in matches:
        for pending in created:
            target = pending.target
            if isinstance(target, ROOT_KINDS) and id(target) not in suppressed:
                if type(target) in roots:
                    raise TransformError("multiple-roots", f"second {type(target).__name__}", rule.name)
                roots[type(target)] = target
    model = psm.StrutsModel(
        roots.get(psm.ViewPackage, psm.ViewPackage()),
        roots.get(psm.ActionMapping, psm.ActionMapping()),
        roots.get(psm.FormBean, psm.FormBean()),
    )
    return model, trace


def _check_overlap(element: object, hits: list[MatchedRule]) -> None:
    """Several rules may match one element as long as their targets stay apart."""
    if len(hits) < 2:
        return
    defaults = [r.name for r in hits if r.provides_default]
    names = [t.local_name for r in hits for t in r.targets]
    if len(defaults) > 1 or len(set(names)) != len(names):
        raise TransformError(
            "ambiguous-match",
            f"{element!r} matched by {', '.join(r.name for r in hits)}",
        )


def _flatten(value: Any) -> Iterator[Any]:
    if isinstance(value, (list, tuple)):
        for item in value:
            yield from _flatten(item)
    else:
        yield value


def _value(item: Any, trace: TraceStore, suppressed: set[int], rule: str) -> Any:
    if isinstance(item, SOURCE_KINDS):
        if not trace.matched(item):
            raise TransformError("unresolved-reference", f"{item!r} was never matched", rule)
        item = resolve(trace, item)
    if item is not None and id(item) in suppressed:
        return None
    return item


def _assign(target, feature, raw, trace, suppressed, rule) -> None:
    if not hasattr(target, feature):
        raise TransformError("unknown-feature", f"{type(target).__name__} has no {feature!r}", rule)
    values = [v for v in (_value(i, trace, suppressed, rule) for i in _flatten(raw)) if v is not None]
    if isinstance(getattr(target, feature), list):
        setattr(target, feature, values)
    elif len(values) == 1:
        setattr(target, feature, values[0])
    elif values:
        raise TransformError("type-mismatch", f"{len(values)} values for single-valued {feature!r}", rule)
