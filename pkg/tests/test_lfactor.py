import cmath
import math
import random
from types import SimpleNamespace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bzsv.lfactor import (
    HPrimeData,
    LFactorError,
    PoleError,
    SatakeParameter,
    adjoint_lfactor,
    cauchy_oracle,
    cauchy_tail_bound,
    conjecture_rhs,
    lfactor,
    lseries_partial,
    partitions,
    weyl_words,
)
from bzsv.quadruple import DualData
from bzsv.repcalc import parse_rep
from bzsv.rootdata import build_root_datum


def rep(group, spec):
    return parse_rep(build_root_datum(group), spec)


def test_trivial_rep():
    r = rep("GL2", "triv")
    c = SatakeParameter(r.datum, (0.3 + 0.1j, 2.0), 5.0)
    s = 0.7 + 0.2j
    assert lfactor(r, c, s).value == pytest.approx(1 / (1 - 5.0 ** (-s)), rel=1e-14)


def test_rankin_selberg_product():
    r = rep("GL2 x GL3", "std(GL2)(x)std(GL3)")
    alpha, beta = (0.5, 1j), (2.0, -1.0, 0.25j)
    c = SatakeParameter(r.datum, alpha + beta, 7.0)
    s = 1.5
    expect = 1
    for a in alpha:
        for b in beta:
            expect /= 1 - a * b * 7.0 ** (-s)
    got = lfactor(r, c, s)
    assert got.value == pytest.approx(expect, rel=1e-13)
    assert got.recompute() == pytest.approx(got.value, rel=1e-13)
    assert sum(k for _, k in got.factors) == 6


def test_direct_sum_multiplicative():
    d = build_root_datum("Sp4")
    a, b = parse_rep(d, "std(Sp4)"), parse_rep(d, "Ad(Sp4)")
    c = SatakeParameter.random(d, 3.0, random.Random(1))
    prod = lfactor(a, c, 0.5).value * lfactor(b, c, 0.5).value
    assert lfactor(a + b, c, 0.5).value == pytest.approx(prod, rel=1e-12)


def test_pole_reported():
    r = rep("GL1", "std(GL1)")
    c = SatakeParameter(r.datum, (1.0,), 2.0)
    with pytest.raises(PoleError) as exc:
        lfactor(r, c, 0)
    assert exc.value.weight == (1,)


def test_parameter_validation():
    d = build_root_datum("GL2")
    with pytest.raises(LFactorError):
        SatakeParameter(d, (1.0,), 2.0)
    with pytest.raises(LFactorError):
        SatakeParameter(d, (1.0, 0.0), 2.0)
    with pytest.raises(LFactorError):
        SatakeParameter(d, (1.0, 1.0), 1.0)
    with pytest.raises(LFactorError):
        SatakeParameter(d, (2.0, 1.0), 2.0, tempered=True)


def test_datum_mismatch():
    r = rep("GL2", "std(GL2)")
    c = SatakeParameter(build_root_datum("GL3"), (1, 1, 1), 2.0)
    with pytest.raises(LFactorError):
        lfactor(r, c, 2)


def test_gross_prasad_rhs_positive(by_id):
    e = by_id["red1:1"]
    rng = random.Random(7)
    for _ in range(20):
        c = SatakeParameter.random(e.dual.G_hat, 5.0, rng)
        v = conjecture_rhs(e, c)
        assert abs(v.imag) < 1e-12 * abs(v.real)
        assert v.real > 0 and math.isfinite(v.real)


def test_adjoint_rhs():
    d = build_root_datum("SL3")
    ent = SimpleNamespace(table="red1", id="probe", dual=DualData(d, parse_rep(d, "Ad(SL3)")))
    c = SatakeParameter(d, (cmath.exp(0.4j), cmath.exp(1.1j), cmath.exp(-1.5j)), 3.0)
    v = conjecture_rhs(ent, c)
    expect = lfactor(parse_rep(d, "Ad(SL3)"), c, 0.5).value / adjoint_lfactor(c, 1).value
    assert v == pytest.approx(expect, rel=1e-13)


def test_shift_factor(by_id):
    e = by_id["red1:1"]
    c = SatakeParameter.random(e.dual.G_hat, 3.0, random.Random(3))
    extra = (e.dual.rho_hat, 2.0)
    base = conjecture_rhs(e, c)
    shifted = conjecture_rhs(e, c, shifts=[extra])
    assert shifted == pytest.approx(base * lfactor(e.dual.rho_hat, c, 2.0).value, rel=1e-13)


def test_rhs_defined_on_every_entry(corpus):
    rng = random.Random(5)
    for e in corpus:
        c = SatakeParameter.random(e.dual.G_hat, 3.0, rng)
        assert cmath.isfinite(conjecture_rhs(e, c)), e.id


def test_general_form_with_hprime(by_id):
    e = by_id["red2:1"]
    c = SatakeParameter.random(e.dual.G_hat, 3.0, random.Random(0))
    h = HPrimeData(e.dual.rho_hat, {1: e.dual.rho_hat})
    v = conjecture_rhs(e, c, hprime=h)
    expect = lfactor(e.dual.rho_hat, c, 0.5).value * lfactor(e.dual.rho_hat, c, 1.5).value
    expect /= adjoint_lfactor(c, 1).value ** 2
    assert v == pytest.approx(expect, rel=1e-12)


def test_lseries_partial():
    r = rep("GL2", "std(GL2)")
    c = SatakeParameter(r.datum, (0.5, 1j), 2.0)
    assert lseries_partial(r, c, 1.0, []) == 1
    assert lseries_partial(r, c, 1.0, [2.0]) == pytest.approx(lfactor(r, c, 1.0).value)
    two = lfactor(r, c, 1.0).value * lfactor(r, SatakeParameter(r.datum, c.coords, 3.0), 1.0).value
    assert lseries_partial(r, c, 1.0, [2.0, 3.0]) == pytest.approx(two, rel=1e-13)
    assert lseries_partial(r, c, 1.0, [3.0, 2.0]) == pytest.approx(two, rel=1e-13)


@pytest.mark.parametrize("group,spec", [("Sp4", "std(Sp4)"), ("GL3", "T(std(GL3))"), ("G2", "std(G2)")])
def test_tempered_bound(group, spec):
    r = rep(group, spec)
    rng = random.Random(11)
    for _ in range(10):
        c = SatakeParameter.random(r.datum, 2.0, rng)
        s = 1.5
        assert abs(lfactor(r, c, s).value) <= (1 - 2.0 ** -s) ** (-r.dim) * (1 + 1e-12)


def _schur2(lam, a, b):
    """Bialternant formula in two variables (independent of the Jacobi-Trudi code)."""
    l1, l2 = (tuple(lam) + (0, 0))[:2]
    if a == b:
        raise ValueError
    return (a ** (l1 + 1) * b ** l2 - b ** (l1 + 1) * a ** l2) / (a - b)


def test_cauchy_against_bialternant():
    x, y = (0.3, 0.2), (0.25, 0.1)
    total = 0.0
    for d in range(16):
        for lam in partitions(d, 2):
            total += _schur2(lam, *x) * _schur2(lam, *y)
    lhs, rhs, err = cauchy_oracle(x, y, 15)
    assert lhs == pytest.approx(total, rel=1e-13)
    assert rhs == pytest.approx(1 / ((1 - 0.075) * (1 - 0.03) * (1 - 0.05) * (1 - 0.02)), rel=1e-15)


def test_cauchy_one_variable():
    lhs, rhs, err = cauchy_oracle([0.5], [0.4], 30)
    assert lhs == pytest.approx(sum(0.2 ** k for k in range(31)), rel=1e-15)
    assert rhs == pytest.approx(1 / 0.8)


def test_cauchy_empty():
    assert cauchy_oracle([0.3, 0.2], [], 5) == (1.0, 1.0, 0.0)


def test_cauchy_divergence():
    with pytest.raises(LFactorError):
        cauchy_oracle([1.0], [1.0], 3)


def test_cauchy_tail_bound_dominates():
    x = y = (0.3, 0.2)
    for n in (2, 5, 10):
        _, _, err = cauchy_oracle(x, y, n)
        assert err <= cauchy_tail_bound(x, y, n)


def test_partitions_count():
    # p(10) = 42; at most two parts: floor(10/2) + 1 = 6
    assert len(list(partitions(10, 10))) == 42
    assert len(list(partitions(10, 2))) == 6


SMALL = [("Sp4", "std(Sp4) (+) Ad(Sp4)"), ("GL3", "Sym2(GL3) (+) std(GL3)"), ("G2", "std(G2) (+) Ad(G2)"),
         ("Spin7", "Spin(Spin7) (+) std(Spin7)")]


@settings(max_examples=40, deadline=None)
@given(case=st.sampled_from(SMALL), seed=st.integers(0, 10**6), s=st.floats(0.3, 3.0))
def test_multiplicativity_property(case, seed, s):
    r = rep(*case)
    c = SatakeParameter.random(r.datum, 3.0, random.Random(seed))
    whole = lfactor(r, c, s).value
    parts = 1
    for irr in r.irreps():
        parts *= lfactor(parse_rep(r.datum, "0") + type(r).irrep(r.datum, irr.hw), c, s).value
    assert abs(whole - parts) <= 1e-12 * abs(whole)


@settings(max_examples=40, deadline=None)
@given(case=st.sampled_from(SMALL), seed=st.integers(0, 10**6))
def test_weyl_invariance_property(case, seed):
    r = rep(*case)
    rng = random.Random(seed)
    c = SatakeParameter.random(r.datum, 5.0, rng)
    base = lfactor(r, c, 0.5).value
    for w in weyl_words(r.datum, 3, rng):
        assert abs(lfactor(r, c.act(w), 0.5).value - base) <= 1e-12 * abs(base)
