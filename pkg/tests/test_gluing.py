import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bzsv.gluing import (
    S10_S10,
    TABLE_S,
    GlueError,
    chain_glue,
    dual_model,
    expected_rho_dim,
    glue,
    glue_dual,
    glue_models,
    is_anomaly_free,
    model,
    parse_model,
)
from bzsv.quadruple import delta_red, match_reductive, rep_matches
from bzsv.repcalc import is_symplectic
from bzsv.rootdata import canonical_type

REGRESSIONS = [
    ("S.3:n=4", "S.3:n=4", 22),
    ("S.11:m=2", "S.3:n=4", 23),
    ("S.3:n=4", "S.10", 24),
    ("S.11:m=2", "S.11:m=2", 25),
    ("S.10", "S.10", 26),
]
GLUABLE = ["S.1:m=1", "S.1:m=2", "S.1:m=3", "S.3:n=4", "S.3:n=6", "S.10", "S.11:m=2", "S.11:m=3", "S.12"]


def _model(text):
    mid, params = parse_model(text)
    return model(mid, **params)


@pytest.mark.parametrize("left,right,row", REGRESSIONS)
def test_glue_regressions(by_id, left, right, row):
    out = glue_models(left, right)
    target = by_id[f"red1:{row}"]
    assert out.kind == "glued"
    assert match_reductive(out.quadruple(), target.quadruple).ok
    assert rep_matches(out.dual.rep(), target.dual.rho_hat)


def test_s9_rewrites_to_s10():
    out = glue_models("S.9", "S.9")
    assert out.kind == "rewrite"
    assert out.primal == model("S.10")
    assert out.dual.rho_hat_spec == "T(std(Sp2))"


@pytest.mark.parametrize("left,right,row", REGRESSIONS)
def test_glue_symmetric(left, right, row):
    a, b = _model(left), _model(right)
    ab, ba = glue(a, b).to_quadruple(), glue(b, a).to_quadruple()
    assert match_reductive(ab, ba).ok


@pytest.mark.parametrize("left", GLUABLE)
@pytest.mark.parametrize("right", GLUABLE)
def test_glue_dimension_formula(left, right):
    a, b = _model(left), _model(right)
    g = glue(a, b)
    assert g.rho_H_dim() == expected_rho_dim(a, b)
    q = g.to_quadruple()
    assert is_symplectic(q.rho_H)


def test_degenerate_case_dimension():
    a = _model("S.3:n=4")
    g = glue(a, model("S.10"))
    assert g.rho_H_dim() == a.rho_H_dim() + 2 * 4


def test_glued_reductions_commute():
    for left, right, _ in REGRESSIONS:
        q = glue(_model(left), _model(right)).to_quadruple()
        assert q.is_reductive and delta_red(q) is q


def test_reduction_of_nonreductive_glue():
    # S.3 with n=6 carries a non-trivial iota; its reduction glues like the n=4 model
    q = glue(_model("S.3:n=6"), _model("S.3:n=6")).to_quadruple()
    assert not q.is_reductive
    red = delta_red(q)
    ref = glue(_model("S.3:n=4"), _model("S.3:n=4")).to_quadruple()
    assert red.H.type_label == ref.H.type_label


def test_glue_dual_examples(by_id):
    s3 = dual_model("S.3", n=4)
    two = glue_dual(s3, s3)
    assert rep_matches(two.rep(), by_id["red1:22"].dual.rho_hat)
    with_t = glue_dual(s3, dual_model("S.10"))
    assert with_t.rep().dim == s3.rep().dim + 4
    assert "T(std(Sp2" in with_t.rho_hat_spec


@pytest.mark.parametrize("left", list(TABLE_S))
@pytest.mark.parametrize("right", list(TABLE_S))
def test_glue_dual_additive_and_symplectic(left, right):
    a, b = dual_model(left), dual_model(right)
    if not a.marks or not b.marks:
        return
    d = glue_dual(a, b)
    assert d.rep().dim == a.rep().dim + b.rep().dim
    if is_anomaly_free(left) and is_anomaly_free(right):
        assert is_symplectic(d.rep())


def test_glue_dual_type_mismatch():
    from bzsv.gluing import DualModel

    bad = DualModel("x", ("Sp4",), ((False, (("std", 0),)),), (0,))
    with pytest.raises(GlueError):
        glue_dual(dual_model("S.3", n=4), bad)


def test_chain_two_triples():
    out = chain_glue([_model("S.3:n=4"), _model("S.1:m=1"), _model("S.3:n=4")])
    triples = [s for s in out.rho_H if not s[0] and len(s[1]) == 3]
    assert len(triples) == 2
    assert not out.marks


def test_chain_associativity_on_two_marked_model():
    left = chain_glue([_model("S.3:n=4"), _model("S.1:m=2"), _model("S.3:n=4")])
    inner = glue(_model("S.1:m=2"), _model("S.3:n=4"), mark_a=1)
    right = glue(_model("S.3:n=4"), inner)
    assert match_reductive(left.to_quadruple(), right.to_quadruple()).ok


def test_chain_singleton_and_errors():
    a = _model("S.3:n=4")
    assert chain_glue([a]) is a
    with pytest.raises(GlueError):
        chain_glue([])
    with pytest.raises(GlueError):
        chain_glue([a, a, a])


@pytest.mark.parametrize("bad", ["S.8", "S.13", "S.15"])
def test_non_anomaly_free_rejected(bad):
    with pytest.raises(GlueError, match="not anomaly-free"):
        glue_models(bad, "S.3:n=4")


def test_rejections_and_corpus_rewrites():
    with pytest.raises(GlueError, match="not anomaly-free"):
        glue_models("S.16", "S.3:n=4")
    with pytest.raises(GlueError, match="not connected"):
        glue_models("S.9", "S.16")
    out = glue_models("S.3:n=3", "S.9")
    assert out.kind == "corpus" and out.corpus_ref == ("red1", 12, {"m": 1})
    out = glue_models("S.9", "S.3:n=5")
    assert out.corpus_ref == ("nonred2", 3, {"m": 1, "k": 2})


def test_no_free_mark():
    with pytest.raises(GlueError):
        glue(S10_S10, _model("S.3:n=4"))


def test_parse_model():
    assert parse_model("S.3:n=4") == ("S.3", {"n": 4})
    assert parse_model("(S.11),m=3") == ("S.11", {"m": 3})
    with pytest.raises(GlueError):
        parse_model("S.17")
    with pytest.raises(GlueError):
        parse_model("S.10:n=2")


@settings(max_examples=25, deadline=None)
@given(a=st.sampled_from(GLUABLE), b=st.sampled_from(GLUABLE))
def test_symmetry_property(a, b):
    ab = glue(_model(a), _model(b)).to_quadruple()
    ba = glue(_model(b), _model(a)).to_quadruple()
    assert canonical_type(ab.G.type_label) == canonical_type(ba.G.type_label)
    assert canonical_type(ab.H.type_label) == canonical_type(ba.H.type_label)
    assert ab.rho_H.dim == ba.rho_H.dim
    assert ab.H.dim == ba.H.dim and ab.G.dim == ba.G.dim
