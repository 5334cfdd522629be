import pytest

from bzsv.grading import (
    adjoint_grading,
    conservation_holds,
    odd_levels,
    period_type,
    rho_H_iota,
    rho_k_decomposition,
    sl2_cocharacter,
)
from bzsv.repcalc import RepSum, TorusMap
from bzsv.rootdata import LeviLabel, build_root_datum, zero_level_subdatum


def test_cocharacter_single_root():
    g = build_root_datum("GL2")
    assert sl2_cocharacter(g, LeviLabel.of([0])) == (1, -1)


def test_cocharacter_trivial():
    g = build_root_datum("GSp6")
    assert sl2_cocharacter(g, LeviLabel.of([])) == (0, 0, 0, 0)


def test_principal_gl3_levels():
    g = build_root_datum("GL3")
    h = sl2_cocharacter(g, LeviLabel.of([0, 1]))
    gr = adjoint_grading(g, h)
    sizes = {k: gr.size(k) for k in gr.support}
    # gl3 under a principal sl2: eigenvalues 4, 2, 2, 0, 0, 0, -2, -2, -4
    assert sizes == {-4: 1, -2: 2, 0: 3, 2: 2, 4: 1}
    counts = gr.string_counts()
    assert counts[4] == 1 and counts[2] == 1 and counts[0] == 1  # Sym4 + Sym2 + trivial


def test_a1_adjoint():
    g = build_root_datum("A1, simply-connected")
    gr = adjoint_grading(g, g.simple_coroots[0])
    assert {k: gr.size(k) for k in gr.support} == {-2: 1, 0: 1, 2: 1}


@pytest.mark.parametrize("spec", ["GL4", "E6", "Sp6"])
def test_zero_cocharacter(spec):
    g = build_root_datum(spec)
    gr = adjoint_grading(g, tuple([0] * g.rank))
    assert gr.support == [0] and gr.size(0) == g.dim


def test_gsp6_gl3_levi():
    g = build_root_datum("GSp6")
    gr = adjoint_grading(g, sl2_cocharacter(g, LeviLabel.of([0, 1])))
    assert gr.total == 22
    assert gr.is_symmetric


def test_principal_sl2_with_trivial_h():
    g = build_root_datum("A1, simply-connected")
    h_grp = build_root_datum("GL1")
    phi = TorusMap(h_grp, g, ((0,),))
    pieces = rho_k_decomposition(g, g.simple_coroots[0], phi)
    assert sorted(k for k, v in pieces.items() if v.dim) == [2]
    assert pieces[2].dim == 1
    assert conservation_holds(g, pieces)


def test_trivial_iota_gives_adjoint():
    g = build_root_datum("GL3")
    phi = TorusMap.identity(g)
    pieces = rho_k_decomposition(g, (0, 0, 0), phi)
    assert [k for k, v in pieces.items() if v.dim] == [0]
    assert pieces[0].dim == 9
    rho = RepSum(g, ())
    assert rho_H_iota(rho, pieces) == rho
    assert period_type(pieces) == "Bessel" and odd_levels(pieces) == []


def test_ginzburg_rallis(by_id):
    q = by_id["nonred1x:5"].quadruple
    assert sum((k + 1) * v.dim for k, v in q.pieces.items()) == 36
    assert not odd_levels(q.pieces)


def test_fourier_jacobi_has_odd_levels(by_id):
    q = by_id["nonred2:1"].quadruple
    assert odd_levels(q.pieces)
    assert q.period_type == "Fourier-Jacobi"


def test_gsp10_bessel_has_empty_rho_h_iota(by_id):
    # no odd levels, so rho_{H,iota} = rho_H = 0, as in ((GL2)^3, GL2, 0, 1)
    q = by_id["nonred1x:3"].quadruple
    assert q.period_type == "Bessel"
    assert q.rho_H_iota.dim == 0


def test_m_recovery(corpus):
    """The zero-level roots of h generate a Levi of the same type as the one delta_red uses."""
    from bzsv.quadruple import standardize

    for e in corpus:
        q = e.quadruple
        if q.is_reductive:
            continue
        h_dom, J, _ = standardize(q)
        assert zero_level_subdatum(q.G, h_dom).type_label == q.G.subdatum(J).type_label, e.id


def test_grading_invariants_on_corpus(corpus):
    for e in corpus:
        q = e.quadruple
        gr = adjoint_grading(q.G, q.h)
        assert gr.is_symmetric, e.id
        counts = gr.string_counts()
        assert all(v >= 0 for v in counts.values()), e.id
        assert conservation_holds(q.G, q.pieces), e.id
