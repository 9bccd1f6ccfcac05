import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import DATA
from mvc2gen.errors import PathError
from mvc2gen.modelio import load_psm_xmi
from mvc2gen.psm import (
    Action,
    ActionForm,
    ActionForward,
    JspPage,
    StrutsModel,
    fragment_path,
    iter_contents,
    resolve_fragment,
    validate_psm,
)


@pytest.fixture
def golden():
    return load_psm_xmi((DATA / "golden_psm.xmi").read_text())


@st.composite
def struts_models(draw):
    n_views = draw(st.integers(0, 8))
    model = StrutsModel()
    model.views.extend(JspPage(f"P{i}.jsp") for i in range(n_views))
    if n_views:
        for i in range(draw(st.integers(0, 8))):
            n_fwd = draw(st.integers(0, 3))
            action = Action(f"/A{i}", draw(st.sampled_from([None, f"A{i}Form"])), f"A{i}Action")
            for j in range(n_fwd):
                target = model.views[draw(st.integers(0, n_views - 1))]
                action.forwards.append(ActionForward(f"f{j}", target))
            model.actions.append(action)
    model.forms.extend(ActionForm(f"F{i}Form") for i in range(draw(st.integers(0, 5))))
    return model


class TestValidate:
    def test_golden_is_valid(self, golden):
        assert validate_psm(golden) == []

    def test_empty_is_valid(self):
        assert validate_psm(StrutsModel()) == []

    def test_dangling_forward(self, golden):
        golden.actions[0].forwards[0].target = JspPage("Elsewhere.jsp")
        assert [v.code for v in validate_psm(golden)] == ["dangling-forward"]

    @pytest.mark.parametrize("mutate, code", [
        (lambda m: m.views.append(JspPage("CreateCi.jsp")), "duplicate-view"),
        (lambda m: m.views.append(JspPage("page.html")), "bad-page-name"),
        (lambda m: m.views.append(JspPage(None)), "empty-name"),
        (lambda m: m.forms.append(ActionForm("CreateCiForm")), "duplicate-form"),
        (lambda m: m.forms.append(ActionForm("Thing")), "bad-form-name"),
        (lambda m: setattr(m.actions[1], "path", "/CreateCi"), "duplicate-action"),
        (lambda m: setattr(m.actions[1], "path", "CreateCj"), "bad-action-path"),
        (lambda m: m.actions[2].forwards.clear(), "forward-count"),
        (lambda m: setattr(m.actions[2], "input", "CreateCj"), "bad-input"),
        (lambda m: setattr(m.actions[2], "type", None), "missing-type"),
    ])
    def test_broken_models(self, golden, mutate, code):
        mutate(golden)
        assert [v.code for v in validate_psm(golden)] == [code]


class TestFragments:
    @pytest.mark.parametrize("index, path", [(3, "/0/@view.3"), (0, "/0/@view.0"), (8, "/0/@view.8")])
    def test_view_paths(self, golden, index, path):
        assert fragment_path(golden, golden.views[index]) == path

    def test_nested_forward(self, golden):
        fwd = golden.actions[2].forwards[0]
        assert fragment_path(golden, fwd) == "/1/@action.2/@forward.0"

    def test_roots_and_forms(self, golden):
        assert fragment_path(golden, golden.form_bean) == "/2"
        assert fragment_path(golden, golden.forms[16]) == "/2/@form.16"

    def test_not_contained(self, golden):
        with pytest.raises(PathError) as exc:
            fragment_path(golden, JspPage("CreateCi.jsp"))
        assert exc.value.code == "not-contained"

    def test_resolve_retrieve_page(self, golden):
        page = resolve_fragment(golden, "/0/@view.3")
        assert page is golden.views[3]
        assert page.name == "RetrieveCi.jsp"

    def test_out_of_range(self):
        with pytest.raises(PathError) as exc:
            resolve_fragment(StrutsModel(), "/0/@view.0")
        assert exc.value.code == "out-of-range"

    @pytest.mark.parametrize("path", ["/3", "/0/@action.0", "/1/@action.0/@view.0"])
    def test_out_of_range_variants(self, golden, path):
        with pytest.raises(PathError) as exc:
            resolve_fragment(golden, path)
        assert exc.value.code == "out-of-range"

    @pytest.mark.parametrize("path", ["", "0/@view.1", "/0/@view", "/0/view.1", "/0/@view.-1", "/a", None])
    def test_bad_path(self, golden, path):
        with pytest.raises(PathError) as exc:
            resolve_fragment(golden, path)
        assert exc.value.code == "bad-path"

    @settings(max_examples=100, deadline=None)
    @given(struts_models())
    def test_round_trip_every_element(self, model):
        for path, el in iter_contents(model):
            assert fragment_path(model, el) == path
            assert resolve_fragment(model, path) is el
