import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import chain_decls, chain_model, random_model
from mvc2gen.errors import Mvc2GenError
from mvc2gen.pim import (
    ClassDecl,
    Classifier,
    DataType,
    Operation,
    Property,
    UmlModel,
    UmlPackage,
    all_method_defs,
    build_model,
    opposite_type_name,
    validate_pim,
)


def label(op):
    return op.name + op.owner.name


def codes(violations):
    return [v.code for v in violations]


class TestValidate:
    def test_three_class_chain_is_valid(self):
        assert validate_pim(chain_model()) == []

    def test_empty_package_is_valid(self):
        model = UmlModel(UmlPackage())
        assert [d.name for d in model.package.datatypes] == ["Void"]
        assert validate_pim(model) == []

    def test_class_named_void(self):
        model = build_model("", [ClassDecl("Void")])
        assert codes(validate_pim(model)) == ["reserved-name"]

    def test_cycle_rejected(self):
        model = build_model("", [ClassDecl("A", "A")])
        assert codes(validate_pim(model)) == ["cycle"]

    def test_two_class_cycle_reports_both(self):
        model = build_model("", [ClassDecl("A", "B"), ClassDecl("B", "A")])
        assert codes(validate_pim(model)) == ["cycle", "cycle"]

    def test_duplicate_class(self):
        model = build_model("", [ClassDecl("A"), ClassDecl("A")])
        assert "duplicate-name" in codes(validate_pim(model))

    def test_missing_opposite(self):
        pkg = UmlPackage("p", [Classifier("A")])
        assert codes(validate_pim(UmlModel(pkg))) == ["missing-opposite"]

    def test_opposite_to_foreign_datatype(self):
        cls = Classifier("A")
        cls.opposite = Property("parent", DataType("Void"))  # not the package's Void
        assert codes(validate_pim(UmlModel(UmlPackage("p", [cls])))) == ["bad-opposite"]

    def test_missing_void(self):
        model = chain_model()
        model.package.datatypes.clear()
        assert "missing-void" in codes(validate_pim(model))

    def test_stereotype_must_match_name(self):
        model = build_model("", [ClassDecl("A", operations=[("Create", "Delete")])])
        assert codes(validate_pim(model)) == ["stereotype-mismatch"]

    def test_unknown_stereotype(self):
        model = build_model("", [ClassDecl("A", operations=[("Create", "Make")])])
        assert codes(validate_pim(model)) == ["unknown-stereotype"]

    def test_duplicate_operation(self):
        model = build_model("", [ClassDecl("A", operations=[("Create", None), ("Create", None)])])
        assert codes(validate_pim(model)) == ["duplicate-operation"]

    def test_unresolved_property_type(self):
        model = build_model("", [ClassDecl("A")])
        model.package.classifiers[0].properties.append(Property("x", DataType("Elsewhere")))
        assert codes(validate_pim(model)) == ["unresolved-type"]

    def test_wrong_owner(self):
        model = build_model("", [ClassDecl("A"), ClassDecl("B")])
        a, b = model.package.classifiers
        a.operations.append(Operation("Create", b))
        assert codes(validate_pim(model)) == ["bad-owner"]

    def test_non_crud_operations_allowed(self):
        model = build_model("", [ClassDecl("A", operations=[("Archive", None)])])
        assert validate_pim(model) == []

    def test_attribute_types_resolve_to_classes_and_datatypes(self):
        model = build_model("", [
            ClassDecl("A", attributes=[("b", "B"), ("n", "String")]),
            ClassDecl("B"),
        ])
        a, b = model.package.classifiers
        assert a.properties[0].type is b
        assert isinstance(a.properties[1].type, DataType)
        assert validate_pim(model) == []


class TestBuild:
    def test_unknown_parent(self):
        with pytest.raises(Mvc2GenError) as exc:
            build_model("", [ClassDecl("A", "Cx")])
        assert exc.value.code == "unresolved-ref"

    def test_parent_declared_later(self):
        model = build_model("", [ClassDecl("B", "A"), ClassDecl("A")])
        assert opposite_type_name(model.package.classifiers[0]) == "A"

    def test_elements_in_model_order(self):
        model = chain_model()
        elements = list(model.elements())
        assert elements[0] is model.package
        assert elements[1] is model.package.classifiers[0]
        assert elements[2:6] == model.package.classifiers[0].operations


class TestAllMethodDefs:
    def test_chain_order(self):
        assert [label(op) for op in all_method_defs(chain_model())] == [
            "CreateCi", "CreateCj", "CreateCk",
            "DeleteCi", "DeleteCj", "DeleteCk",
            "RetrieveCi", "RetrieveCj", "RetrieveCk",
            "UpdateCi", "UpdateCj", "UpdateCk",
        ]

    def test_single_op(self):
        model = build_model("", [ClassDecl("A", operations=[("Create", "Create")])])
        assert [label(op) for op in all_method_defs(model)] == ["CreateA"]

    def test_class_declaration_order_breaks_ties(self):
        model = build_model("", [
            ClassDecl("B", operations=[("Create", "Create")]),
            ClassDecl("A", operations=[("Create", "Create")]),
        ])
        # hand-sorted: equal op names, so B (declared first) precedes A
        assert [label(op) for op in all_method_defs(model)] == ["CreateB", "CreateA"]

    @settings(max_examples=60, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_permutation_of_all_operations(self, rng):
        model, _, _ = random_model(rng, extra_ops=True)
        defs = all_method_defs(model)
        every = [op for c in model.package.classifiers for op in c.operations]
        assert Counter(map(id, defs)) == Counter(map(id, every))
        assert [id(o) for o in all_method_defs(model)] == [id(o) for o in defs]

    @settings(max_examples=60, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_matches_bubble_sorted_oracle(self, rng):
        model, _, _ = random_model(rng, extra_ops=True)
        classes = model.package.classifiers
        ops = [op for c in classes for op in c.operations]
        # insertion sort on explicit pairwise comparison
        out = []
        for op in ops:
            i = len(out)
            while i > 0 and op.name < out[i - 1].name:
                i -= 1
            out.insert(i, op)
        assert all_method_defs(model) == out


class TestOppositeTypeName:
    def test_chain(self):
        ci, cj, ck = chain_model().package.classifiers
        assert opposite_type_name(ci) == "Void"
        assert opposite_type_name(cj) == "Ci"
        assert opposite_type_name(ck) == "Cj"

    @settings(max_examples=40, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_void_iff_root(self, rng):
        model, decls, _ = random_model(rng)
        parent_of = {d.name: d.parent for d in decls}
        for cls in model.package.classifiers:
            assert (opposite_type_name(cls) == "Void") == (parent_of[cls.name] is None)

    @settings(max_examples=40, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_random_forests_validate(self, rng):
        model, _, _ = random_model(rng, extra_ops=True)
        assert validate_pim(model) == []


def test_chain_decls_shape():
    assert [d.parent for d in chain_decls()] == [None, "Ci", "Cj"]


def test_random_model_is_reproducible():
    a = random_model(random.Random(7))[1]
    b = random_model(random.Random(7))[1]
    assert a == b
