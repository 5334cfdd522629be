import json
import re

import pytest

from bzsv.families import TABLE_SIZES
from bzsv.repcalc import parse_rep
from bzsv.rootdata import build_root_datum
from bzsv.tables import (
    CHECKS,
    CORE_CHECKS,
    CORPUS_ENV,
    CorpusError,
    default_corpus_path,
    dual_lookup,
    find_entry,
    load_corpus,
    load_excluded,
    load_table,
    resolve_target,
    serialize,
    verify_corpus,
)


def test_counts(corpus):
    assert len(corpus) == 75
    assert TABLE_SIZES == {"red1": 26, "red2": 9, "nonred1": 9, "nonred1x": 13, "nonred2": 5, "nonred2x": 13}
    for t, n in TABLE_SIZES.items():
        assert sum(e.table == t for e in corpus) == n
    assert sum(not e.is_reductive for e in corpus) == 40


def test_rows_unique_and_contiguous(corpus):
    for t, n in TABLE_SIZES.items():
        assert sorted(e.row for e in corpus if e.table == t) == list(range(1, n + 1))


def test_round_trip(corpus, tmp_path):
    serialize(corpus, tmp_path)
    again = load_corpus(tmp_path)
    assert again == corpus
    # byte-identical to the shipped files
    for t in TABLE_SIZES:
        assert (tmp_path / f"{t}.json").read_text() == (default_corpus_path() / f"{t}.json").read_text()


def test_single_file_load():
    entries = load_table(default_corpus_path() / "red2.json")
    assert len(entries) == 9 and entries[0].line is not None


def _edit(path, fn):
    doc = json.loads(path.read_text())
    fn(doc)
    path.write_text(json.dumps(doc, indent=2))


def test_duplicate_row_reports_line(corpus_copy):
    f = corpus_copy / "red2.json"
    _edit(f, lambda d: d["entries"].append(dict(d["entries"][0])))
    with pytest.raises(CorpusError) as exc:
        load_table(f)
    assert "duplicate row 1" in str(exc.value)
    assert exc.value.line is not None and exc.value.line > 1
    assert re.match(r".*red2\.json:\d+: ", str(exc.value))


def test_missing_torus_map_reports_line(corpus_copy):
    f = corpus_copy / "red2.json"
    _edit(f, lambda d: d["entries"][3].pop("torus_map"))
    with pytest.raises(CorpusError) as exc:
        load_table(f)
    assert "torus_map" in str(exc.value)
    text = f.read_text().splitlines()
    assert exc.value.line is not None
    assert '"red2:4"' in "".join(text[exc.value.line - 1: exc.value.line + 1])


def test_bad_schema_version(corpus_copy):
    f = corpus_copy / "red1.json"
    _edit(f, lambda d: d.update(schema="bzsv-corpus/0"))
    with pytest.raises(CorpusError):
        load_table(f)


def test_missing_table_file(corpus_copy):
    (corpus_copy / "nonred2.json").unlink()
    with pytest.raises(CorpusError, match="missing table file"):
        load_corpus(corpus_copy)


def test_env_override(corpus_copy, monkeypatch):
    monkeypatch.setenv(CORPUS_ENV, str(corpus_copy))
    assert default_corpus_path() == corpus_copy
    assert len(load_corpus()) == 75


def test_excluded():
    ex = load_excluded()
    labels = " ".join(x["knop"] for x in ex)
    for n in ("(1.6)", "(2.3)", "(2.7)", "(2.9)"):
        assert n in labels
    assert all(x["reason"] for x in ex)


def test_reduces_to_targets(corpus):
    for e in corpus:
        if e.is_reductive:
            assert e.reduces_to is None, e.id
        else:
            assert e.reduces_to["table"] in ("red1", "red2"), e.id
            assert resolve_target(corpus, e.reduces_to).is_reductive


def test_resolve_target_rejects_nonreductive(corpus):
    with pytest.raises(CorpusError):
        resolve_target(corpus, {"table": "nonred1", "row": 1})


def test_find_entry(corpus):
    assert find_entry(corpus, "nonred1x:3").G == "GSp10"
    e = find_entry(corpus, "red1:2?m=1")
    assert e.params == {"m": 1} and e.G == "SO4 x SO3"
    with pytest.raises(CorpusError):
        find_entry(corpus, "red1:99")
    with pytest.raises(CorpusError):
        find_entry(corpus, "red1")


def test_dual_lookup_spin11(corpus):
    q = parse_rep(build_root_datum("Spin11"), "Spin(Spin11)")
    hits = [e.id for e in dual_lookup(corpus, q, families=False)]
    assert hits == ["nonred1x:3"]


def test_dual_lookup_trilinear(corpus):
    tri = find_entry(corpus, "red1:24").quadruple  # any reductive row works as a probe of the machinery
    assert "red1:24" in [e.id for e in dual_lookup(corpus, tri, families=False)]
    g = build_root_datum("GL2^3")
    from bzsv.quadruple import Quadruple
    from bzsv.repcalc import RepSum, TorusMap

    h = build_root_datum("GL2")
    phi = TorusMap(h, g, ((1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)))
    trilinear = Quadruple(g, h, phi, RepSum(h, ()))
    hits = dual_lookup(corpus, trilinear, max_param=2)
    assert any((e.table, e.row, e.params.get("m")) == ("red1", 2, 1) for e in hits)


def test_dual_lookup_unknown(corpus):
    q = parse_rep(build_root_datum("G2"), "Ad(G2)")
    assert dual_lookup(corpus, q, families=False) == []


def test_verify_core_default(corpus):
    rep = verify_corpus(corpus)
    assert rep.checks == CORE_CHECKS
    assert rep.summary() == "75/75 passed"
    assert [e.id for e in rep.entries] == [e.id for e in corpus]


def test_verify_unknown_check(corpus):
    with pytest.raises(CorpusError):
        verify_corpus(corpus[:1], ["bogus"])


def test_verify_reports_are_stable(corpus):
    a = verify_corpus(corpus[:20], CHECKS).to_json()
    b = verify_corpus(corpus[:20], CHECKS).to_json()
    assert a == b


def test_wrong_iota_fails_only_delta_red(corpus_copy):
    _edit(corpus_copy / "nonred1.json",
          lambda d: next(e for e in d["entries"] if e["row"] == 4).update(iota=[0]))
    entries = load_corpus(corpus_copy)
    rep = verify_corpus(entries, ["validate", "property-2.3", "delta_red-match"])
    assert rep.failures and {(i, c) for i, c, _ in rep.failures} == {("nonred1:4", "delta_red-match")}


def test_dims_recorded(corpus):
    for e in corpus:
        assert set(e.dims) == {"G", "H", "rho_H", "rho_hat"}
