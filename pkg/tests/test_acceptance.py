"""Acceptance criteria 1-10, one PASS/FAIL line each.

Lines are printed as each criterion finishes and repeated in the pytest
terminal summary. Tolerances are pinned here and never relaxed.
"""

import json
import random
import time

import pytest

from bzsv.cli import EXIT_FAIL, main
from bzsv.gluing import glue_models, model
from bzsv.grading import adjoint_grading
from bzsv.lfactor import SatakeParameter, cauchy_oracle, cauchy_tail_bound, lfactor, weyl_words
from bzsv.quadruple import match_reductive, rep_matches
from bzsv.repcalc import RepSum, fs_indicator, fs_indicator_oracle, parse_rep
from bzsv.rootdata import build_root_datum
from bzsv.tables import CORE_CHECKS, load_corpus, verify_corpus

REL_TOL = 1e-12          # L-factor identities
CAUCHY_TOL = 1e-9        # truncated Cauchy sum at cutoff 20
VERIFY_BUDGET_S = 10.0
CAUCHY_BUDGET_S = 1.0
FS_DIM_LIMIT = 100
LF_DIM_LIMIT = 100
LF_SAMPLES = 100
WEYL_WORDS = 20

RESULTS: dict[int, str] = {}


def report(n: int, ok: bool, title: str, detail: str) -> None:
    line = f"criterion {n:>2} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def entries():
    return load_corpus()


def test_criterion_01_corpus_verification(entries):
    t0 = time.perf_counter()
    rep = verify_corpus(load_corpus(), CORE_CHECKS)
    dt = time.perf_counter() - t0
    ok = rep.passed == rep.total == 75 and dt < VERIFY_BUDGET_S
    report(1, ok, "corpus verification", f"{rep.summary()} on {', '.join(CORE_CHECKS)} "
                                         f"in {dt:.2f} s (budget {VERIFY_BUDGET_S:.0f} s, exact)")


def test_criterion_02_delta_red(entries):
    nonred = [e for e in entries if not e.is_reductive]
    rep = verify_corpus(nonred, ["delta_red-match"], reference=entries)
    bad = [i for i, _, _ in rep.failures]
    report(2, len(nonred) == 40 and not bad, "delta_red recomputes reduces_to",
           f"{rep.passed}/{len(nonred)} exact" + (f"; failing {bad}" if bad else ""))


def test_criterion_03_whittaker(entries):
    nonred = [e for e in entries if not e.is_reductive]
    rep = verify_corpus(nonred, ["whittaker-compat"], reference=entries)
    bad = [i for i, _, _ in rep.failures]
    report(3, len(nonred) == 40 and not bad, "Whittaker induction compatibility",
           f"{rep.passed}/{len(nonred)} exact" + (f"; failing {bad}" if bad else ""))


DIMS = {
    ("E7", "std(E7)"): 56,
    ("E6", "std(E6)"): 27,
    ("G2", "std(G2)"): 7,
    ("Spin7", "Spin(Spin7)"): 8,
    ("Spin12", "HSpin+(Spin12)"): 32,
    ("Spin11", "Spin(Spin11)"): 32,
    ("Sp6", "wedge0_3(Sp6)"): 14,
}


def test_criterion_04_dimensions():
    got = {k: parse_rep(build_root_datum(k[0]), k[1]).dim for k in DIMS}
    bad = {k[1]: (got[k], v) for k, v in DIMS.items() if got[k] != v}
    report(4, not bad, "dimension regression",
           ", ".join(f"{k[1]}={got[k]}" for k in DIMS) + (f"; mismatches {bad}" if bad else " (exact)"))


def _corpus_irreps(entries):
    seen = {}
    for e in entries:
        q, d = e.quadruple, e.dual
        for rho in (q.rho_H, d.rho_hat, q.rho_H_iota):
            for irr in rho.irreps():
                seen.setdefault((rho.datum.label, irr.hw), irr)
    return list(seen.values())


def test_criterion_05_fs_indicator(entries):
    small = [i for i in _corpus_irreps(entries) if i.dim <= FS_DIM_LIMIT]
    bad = [(i.datum.label, i.labels) for i in small if fs_indicator(i) != fs_indicator_oracle(i)]
    report(5, bool(small) and not bad, "FS parity vs tensor-square oracle",
           f"{len(small) - len(bad)}/{len(small)} irreps with dim <= {FS_DIM_LIMIT} agree (exact)")


def test_criterion_06_grading(entries):
    bad = []
    for e in entries:
        q = e.quadruple
        gr = adjoint_grading(q.G, q.h)
        total = sum((k + 1) * v.dim for k, v in q.pieces.items())
        if total != q.G.dim or not all(gr.size(k) == gr.size(-k) for k in gr.support):
            bad.append(e.id)
    report(6, not bad, "grading conservation", f"{len(entries) - len(bad)}/{len(entries)} entries satisfy "
                                                f"sum (k+1) dim rho_k = dim g and |g(k)| = |g(-k)| (exact)")


GLUE_CASES = [("S.3:n=4", "S.3:n=4", 22), ("S.11:m=2", "S.3:n=4", 23), ("S.3:n=4", "S.10", 24),
              ("S.11:m=2", "S.11:m=2", 25), ("S.10", "S.10", 26)]


def test_criterion_07_gluing(entries):
    by_id = {e.id: e for e in entries}
    hits = []
    for left, right, row in GLUE_CASES:
        out = glue_models(left, right)
        t = by_id[f"red1:{row}"]
        if match_reductive(out.quadruple(), t.quadruple).ok and rep_matches(out.dual.rep(), t.dual.rho_hat):
            hits.append(row)
    s9 = glue_models("S.9", "S.9")
    rewrite = s9.kind == "rewrite" and s9.primal == model("S.10") and s9.dual.rho_hat_spec == "T(std(Sp2))"
    report(7, len(hits) == 5 and rewrite, "gluing regression",
           f"{len(hits)}/5 cases reproduce red1:22-26 primal and dual; (S.9)+(S.9) -> (S.10) "
           f"{'rewritten' if rewrite else 'NOT rewritten'} (exact)")


def _corpus_reps(entries):
    reps = {}
    for e in entries:
        for rho in (e.quadruple.rho_H, e.dual.rho_hat):
            if rho.terms and rho.dim <= LF_DIM_LIMIT:
                reps[(rho.datum.label, rho.terms)] = rho
    return list(reps.values())


def test_criterion_08_lfactor(entries):
    rng = random.Random(20240611)
    worst_mult = worst_weyl = 0.0
    reps = _corpus_reps(entries)
    for rho in reps:
        d = rho.datum
        pieces = [RepSum.irrep(d, hw) for hw, m in rho.terms for _ in range(m)]
        dual = rho.dual()
        both = rho + dual
        for _ in range(LF_SAMPLES):
            c = SatakeParameter.random(d, rng.choice([2.0, 3.0, 5.0, 7.0]), rng, tempered=True)
            whole = lfactor(rho, c, 0.5).value
            prod = 1
            for p in pieces:
                prod *= lfactor(p, c, 0.5).value
            worst_mult = max(worst_mult, abs(whole - prod) / abs(whole))
            pair = lfactor(both, c, 0.5).value
            worst_mult = max(worst_mult, abs(pair - whole * lfactor(dual, c, 0.5).value) / abs(pair))
        c = SatakeParameter.random(d, 3.0, rng, tempered=True)
        base = lfactor(rho, c, 0.5).value
        for w in weyl_words(d, WEYL_WORDS, rng):
            worst_weyl = max(worst_weyl, abs(lfactor(rho, c.act(w), 0.5).value - base) / abs(base))
    ok = worst_mult < REL_TOL and worst_weyl < REL_TOL
    report(8, ok, "L-factor algebra",
           f"{len(reps)} reps x {LF_SAMPLES} tempered params: max rel multiplicativity error {worst_mult:.1e}, "
           f"max rel Weyl error {worst_weyl:.1e} over {WEYL_WORDS} words (tol {REL_TOL:.0e})")


def test_criterion_09_cauchy():
    x = y = (0.3, 0.2)
    t0 = time.perf_counter()
    errs = [cauchy_oracle(x, y, n)[2] for n in (5, 10, 15, 20)]
    dt = time.perf_counter() - t0
    bound = cauchy_tail_bound(x, y, 20)
    monotone = all(a > b for a, b in zip(errs, errs[1:]))
    ok = errs[-1] < CAUCHY_TOL and errs[-1] <= bound and monotone and dt < CAUCHY_BUDGET_S
    report(9, ok, "Cauchy oracle",
           f"|lhs-rhs| at cutoff 20 = {errs[-1]:.1e} (tol {CAUCHY_TOL:.0e}, tail bound {bound:.1e}); "
           f"errors {', '.join(f'{e:.1e}' for e in errs)} {'decreasing' if monotone else 'NOT monotone'}; "
           f"{dt:.3f} s (budget {CAUCHY_BUDGET_S:.0f} s)")


MUTATIONS = {
    ("nonred1", 4): ("iota", [0]),                       # wrong iota
    ("red1", 8): ("rho_H", "std(Sp4)(x)std(GL3)"),      # non-symplectic rho_H
    ("red1", 6): ("W_V", "A2"),                          # wrong W_V type
}
EXPECTED = {("nonred1:4", "delta_red-match"), ("red1:8", "validate"), ("red1:6", "property-2.3")}


def test_criterion_10_negative_controls(corpus_copy, capsys):
    for (table, row), (key, value) in MUTATIONS.items():
        path = corpus_copy / f"{table}.json"
        doc = json.loads(path.read_text())
        e = next(x for x in doc["entries"] if x["row"] == row)
        (e["knop"] if key == "W_V" else e)[key] = value
        path.write_text(json.dumps(doc, indent=1))
    capsys.readouterr()
    code = main(["verify", "--all", "--corpus", str(corpus_copy), "--json",
                 "--check", "validate,property-2.3,delta_red-match"])
    doc = json.loads(capsys.readouterr().out)
    got = {(e["id"], k) for e in doc["entries"] for k, v in e["checks"].items() if v is False}
    report(10, got == EXPECTED and code == EXIT_FAIL, "negative controls",
           f"{len(got)} failures {sorted(got)}, exit {code} (expected exactly {sorted(EXPECTED)}, exit 1)")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
