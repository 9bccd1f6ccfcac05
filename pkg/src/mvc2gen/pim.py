"""Source meta-model: UML class diagrams carrying CRUD operations.

A model is one package of classifiers. Each classifier points at its
master class through a mandatory ``opposite`` association end; root classes
point at the reserved ``Void`` data type instead.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from mvc2gen.errors import Mvc2GenError, Violation

VOID = "Void"
CRUD_KEYWORDS = ("Create", "Retrieve", "Update", "Delete")


@dataclass(eq=False)
class DataType:
    name: str


@dataclass(eq=False)
class Property:
    name: str
    type: "Classifier | DataType"

    def __repr__(self) -> str:
        return f"Property({self.name!r}: {self.type.name})"


@dataclass(eq=False)
class Operation:
    name: str
    owner: "Classifier"
    stereotype: str | None = None

    def __repr__(self) -> str:
        return f"Operation({self.name}{self.owner.name})"


@dataclass(eq=False)
class Classifier:
    name: str
    properties: list[Property] = field(default_factory=list)
    operations: list[Operation] = field(default_factory=list)
    opposite: Property | None = None

    def __repr__(self) -> str:
        return f"Classifier({self.name!r})"


@dataclass(eq=False)
class UmlPackage:
    name: str = ""
    classifiers: list[Classifier] = field(default_factory=list)
    datatypes: list[DataType] = field(default_factory=lambda: [DataType(VOID)])

    @property
    def void(self) -> DataType | None:
        return next((d for d in self.datatypes if d.name == VOID), None)

    def classifier(self, name: str) -> Classifier | None:
        return next((c for c in self.classifiers if c.name == name), None)


@dataclass(eq=False)
class UmlModel:
    package: UmlPackage

    def elements(self) -> Iterator[object]:
        """Yield every source element in model order.

        The package comes first, then each classifier followed by its
        operations.
        """
        yield self.package
        for cls in self.package.classifiers:
            yield cls
            yield from cls.operations


@dataclass
class ClassDecl:
    """Name-based description of a classifier, resolved by :func:`build_model`."""

    name: str
    parent: str | None = None
    attributes: list[tuple[str, str]] = field(default_factory=list)
    operations: list[tuple[str, str | None]] = field(default_factory=list)


def build_model(
    package_name: str,
    decls: Iterable[ClassDecl],
    unknown_parent: str = "unresolved-ref",
) -> UmlModel:
    """Build a linked model from declarations that reference each other by name.

    Parents may be declared after their children. Cycles are representable
    on purpose; :func:`validate_pim` rejects them. An unknown parent name
    raises :class:`Mvc2GenError` with code *unknown_parent*.
    """
    decls = list(decls)
    package = UmlPackage(package_name)
    for decl in decls:
        package.classifiers.append(Classifier(decl.name))

    def lookup_type(name: str) -> Classifier | DataType:
        cls = package.classifier(name)
        if cls is not None:
            return cls
        for dt in package.datatypes:
            if dt.name == name:
                return dt
        dt = DataType(name)
        package.datatypes.append(dt)
        return dt

    for decl, cls in zip(decls, package.classifiers):
        if decl.parent is None:
            cls.opposite = Property("parent", package.void)
        else:
            parent = package.classifier(decl.parent)
            if parent is None:
                raise Mvc2GenError(
                    unknown_parent,
                    f"class {decl.name!r} names unknown parent {decl.parent!r}",
                    path=decl.name,
                )
            cls.opposite = Property("parent", parent)
        for attr_name, type_name in decl.attributes:
            cls.properties.append(Property(attr_name, lookup_type(type_name)))
        for op_name, stereotype in decl.operations:
            cls.operations.append(Operation(op_name, cls, stereotype))
    return UmlModel(package)


def validate_pim(model: UmlModel) -> list[Violation]:
    """Check the well-formedness rules of the source meta-model."""
    out: list[Violation] = []
    pkg = model.package
    if not isinstance(pkg, UmlPackage):
        return [Violation("/", "missing-package", "model has no root package")]
    void = pkg.void
    if void is None:
        out.append(Violation("/", "missing-void", "package lacks the Void datatype"))

    seen: set[str] = set()
    for cls in pkg.classifiers:
        if not cls.name:
            out.append(Violation("/", "empty-name", "classifier without a name"))
        elif cls.name == VOID:
            out.append(Violation(cls.name, "reserved-name", "Void names the root marker"))
        elif cls.name in seen:
            out.append(Violation(cls.name, "duplicate-name", "classifier declared twice"))
        seen.add(cls.name)

    members = set(map(id, pkg.classifiers)) | set(map(id, pkg.datatypes))
    for cls in pkg.classifiers:
        out.extend(_check_classifier(cls, pkg, members))
    out.extend(_check_forest(pkg))
    return out


def _check_classifier(cls: Classifier, pkg: UmlPackage, members: set[int]) -> Iterator[Violation]:
    if cls.opposite is None:
        yield Violation(f"{cls.name}/opposite", "missing-opposite")
    else:
        target = cls.opposite.type
        is_root = isinstance(target, DataType) and target is pkg.void
        if not is_root and not (isinstance(target, Classifier) and id(target) in members):
            yield Violation(
                f"{cls.name}/opposite",
                "bad-opposite",
                "opposite must type a classifier of this package or Void",
            )
    for prop in cls.properties:
        if id(prop.type) not in members:
            yield Violation(f"{cls.name}::{prop.name}", "unresolved-type")
    names: set[str] = set()
    for op in cls.operations:
        path = f"{cls.name}::{op.name}"
        if not op.name:
            yield Violation(path, "empty-name", "operation without a name")
        if op.owner is not cls:
            yield Violation(path, "bad-owner", "operation owner is not its container")
        if op.stereotype is not None:
            if op.stereotype not in CRUD_KEYWORDS:
                yield Violation(path, "unknown-stereotype", op.stereotype)
            elif op.name != op.stereotype:
                yield Violation(path, "stereotype-mismatch", f"<<{op.stereotype}>> on {op.name}")
        if op.name in names:
            yield Violation(path, "duplicate-operation")
        names.add(op.name)


def _check_forest(pkg: UmlPackage) -> Iterator[Violation]:
    for cls in pkg.classifiers:
        visited = {id(cls)}
        node = cls
        while node.opposite is not None and isinstance(node.opposite.type, Classifier):
            node = node.opposite.type
            if id(node) in visited:
                yield Violation(cls.name, "cycle", "parent chain revisits " + node.name)
                break
            visited.add(id(node))


def all_method_defs(model: UmlModel) -> list[Operation]:
    """Every operation of the model in rule order.

    Sorted by operation name, then classifier declaration index, then
    operation declaration index.
    """
    keyed = [
        ((op.name, ci, oi), op)
        for ci, cls in enumerate(model.package.classifiers)
        for oi, op in enumerate(cls.operations)
    ]
    keyed.sort(key=lambda item: item[0])
    return [op for _, op in keyed]


def opposite_type_name(cls: Classifier) -> str:
    return cls.opposite.type.name


def is_root(cls: Classifier) -> bool:
    return opposite_type_name(cls) == VOID
