"""The shipped corpus of quadruples: JSON loading, serialization and the verification driver.

Each table lives in its own UTF-8 JSON file under ``bzsv/data`` with a top-level
``schema`` field.  Representations are written in the :mod:`bzsv.repcalc`
mini-grammar.  ``torus_map`` is the integer matrix of T_H -> T_G on cocharacters: row ``i``
is the image of the ``i``-th coordinate cocharacter of H, written in the
coordinates of G (GL factors use e1..en; classical factors x1..xn; similitude
factors append the similitude coordinate last).  Its transpose pulls G's
characters back to H.
"""

from __future__ import annotations

import json
import os
import re
import time
from collections import Counter
from dataclasses import dataclass, field, replace
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Sequence

import jsonschema

from .families import FAMILIES, TABLE_SIZES, TABLES, FamilyError, RowSpec, instantiate, pull_to_rows
from .grading import GradingError
from .quadruple import (
    DualData,
    Quadruple,
    QuadrupleError,
    check_whittaker_compatibility,
    delta_red,
    grading_conserved,
    match_reductive,
    property_23,
    quadruple_matches,
    rep_matches,
    validate,
    validate_dual,
)
from .repcalc import RepError, RepSum, TorusMap, fs_indicator, fs_indicator_oracle, parse_rep
from .rootdata import LeviLabel, RootDatum, build_root_datum

SCHEMA_VERSION = "bzsv-corpus/1"
CORPUS_ENV = "BZSV_CORPUS"
REDUCTIVE_TABLES = ("red1", "red2")
EXPECTED_TOTAL = sum(TABLE_SIZES.values())
RHS_NOTICE = "Only right-hand-side expressions are evaluated; period integrals are never computed."

CHECKS = (
    "validate",
    "symplectic",
    "anomaly",
    "containment",
    "property-2.3",
    "grading",
    "delta_red-match",
    "whittaker-compat",
    "dimension",
    "fs",
)
CORE_CHECKS = ("symplectic", "anomaly", "property-2.3", "containment")
FULL_CHECKS = ("validate", "property-2.3", "grading", "delta_red-match", "whittaker-compat", "dimension", "fs")
FS_DIM_LIMIT = 100


class CorpusError(ValueError):
    """Schema or consistency problem in a corpus file; carries file/line diagnostics."""

    def __init__(self, message: str, path: str | Path | None = None, line: int | None = None):
        self.path, self.line = (str(path) if path else None), line
        where = f"{self.path}:{line}: " if path and line else (f"{self.path}: " if path else "")
        super().__init__(where + message)


# ---------------------------------------------------------------------------
# Entries


@dataclass(frozen=True)
class CorpusEntry:
    table: str
    row: int
    G: str
    H: str
    torus_map: tuple[tuple[int, ...], ...]
    rho_H: str
    rho_hat: str
    params: dict = field(default_factory=dict)
    iota: tuple[int, ...] = ()
    G_hat: str | None = None
    knop: str | None = None
    W_V: str | None = None
    l_hat: str | None = None
    reduces_to: dict | None = None
    period: str | None = None
    embedding: str = "stated"
    pairing: str | None = None
    notes: str = ""
    pull: dict | None = None
    dims: dict = field(default_factory=dict)
    source: str | None = field(default=None, compare=False, repr=False)
    line: int | None = field(default=None, compare=False, repr=False)

    @property
    def id(self) -> str:
        return f"{self.table}:{self.row}"

    @property
    def is_reductive(self) -> bool:
        return not self.iota

    @cached_property
    def G_datum(self) -> RootDatum:
        return build_root_datum(self.G)

    @cached_property
    def H_datum(self) -> RootDatum:
        return build_root_datum(self.H)

    @cached_property
    def quadruple(self) -> Quadruple:
        G, H = self.G_datum, self.H_datum
        phi = TorusMap(H, G, self.torus_map)
        return Quadruple(G, H, phi, parse_rep(H, self.rho_H), LeviLabel.of(self.iota), meta={"id": self.id})

    @cached_property
    def dual(self) -> DualData:
        Gh = build_root_datum(self.G_hat) if self.G_hat else self.G_datum.dual()
        return DualData(Gh, parse_rep(Gh, self.rho_hat), self.W_V, self.l_hat, self.knop)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "id": self.id,
            "row": self.row,
            "params": dict(self.params),
            "G": self.G,
            "H": self.H,
            "torus_map": [list(r) for r in self.torus_map],
        }
        if self.pull is not None:
            out["pull"] = dict(self.pull)
        out |= {
            "rho_H": self.rho_H,
            "iota": list(self.iota),
            "G_hat": self.G_hat,
            "rho_hat": self.rho_hat,
            "knop": {"number": self.knop, "W_V": self.W_V, "l_hat": self.l_hat},
            "reduces_to": self.reduces_to,
            "period": self.period,
            "embedding": self.embedding,
            "pairing": self.pairing,
            "notes": self.notes,
            "dims": dict(self.dims),
        }
        return out

    @classmethod
    def from_json(cls, table: str, d: dict, source: str | None = None, line: int | None = None) -> "CorpusEntry":
        knop = d.get("knop") or {}
        return cls(
            table=table,
            row=d["row"],
            params=dict(d.get("params", {})),
            G=d["G"],
            H=d["H"],
            torus_map=tuple(tuple(r) for r in d["torus_map"]),
            pull=d.get("pull"),
            rho_H=d["rho_H"],
            iota=tuple(d.get("iota", ())),
            G_hat=d.get("G_hat"),
            rho_hat=d["rho_hat"],
            knop=knop.get("number"),
            W_V=knop.get("W_V"),
            l_hat=knop.get("l_hat"),
            reduces_to=d.get("reduces_to"),
            period=d.get("period"),
            embedding=d.get("embedding", "stated"),
            pairing=d.get("pairing"),
            notes=d.get("notes", ""),
            dims=dict(d.get("dims", {})),
            source=source,
            line=line,
        )


def computed_dims(e: CorpusEntry) -> dict[str, int]:
    q, d = e.quadruple, e.dual
    return {"G": q.G.dim, "H": q.H.dim, "rho_H": q.rho_H.dim, "rho_hat": d.rho_hat.dim}


def entry_from_spec(spec: RowSpec) -> CorpusEntry:
    """Freeze a row builder's output into a corpus entry (torus map, dims and period filled in)."""
    e = CorpusEntry(
        table=spec.table,
        row=spec.row,
        params=dict(spec.params),
        G=spec.G,
        H=spec.H,
        torus_map=tuple(tuple(r) for r in spec.torus_rows()),
        pull=dict(spec.pull) if spec.pull is not None and spec.matrix is None else None,
        rho_H=spec.rho_H,
        iota=tuple(spec.iota),
        G_hat=spec.G_hat,
        rho_hat=spec.rho_hat,
        knop=spec.knop,
        W_V=spec.W_V,
        l_hat=spec.l_hat,
        reduces_to=spec.reduces_to,
        embedding=spec.embedding,
        pairing=spec.pairing,
        notes=spec.notes,
    )
    try:
        period = e.quadruple.period_type
    except GradingError:
        period = None
    return replace(e, period=period, dims=computed_dims(e))


# ---------------------------------------------------------------------------
# Loading


def default_corpus_path() -> Path:
    env = os.environ.get(CORPUS_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("bzsv") / "data"))


def corpus_schema() -> dict:
    return json.loads((resources.files("bzsv") / "data" / "corpus.schema.json").read_text(encoding="utf-8"))


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _entry_positions(text: str) -> list[int]:
    """Character offsets of the objects in the top-level "entries" array (best effort)."""
    dec = json.JSONDecoder()
    key = text.find('"entries"')
    if key < 0:
        return []
    pos = text.find("[", key)
    if pos < 0:
        return []
    pos += 1
    out = []
    n = len(text)
    while pos < n:
        while pos < n and text[pos] in " \t\r\n,":
            pos += 1
        if pos >= n or text[pos] == "]":
            break
        out.append(pos)
        try:
            _, pos = dec.raw_decode(text, pos)
        except json.JSONDecodeError:
            break
    return out


def _error_line(text: str, positions: list[int], err: jsonschema.ValidationError) -> int | None:
    path = list(err.absolute_path)
    if len(path) >= 2 and path[0] == "entries" and isinstance(path[1], int) and path[1] < len(positions):
        return _line_of(text, positions[path[1]])
    return 1


def load_table(path: str | Path, *, build: bool = True) -> list[CorpusEntry]:
    """Load and validate a single table file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CorpusError(f"invalid JSON: {exc.msg}", path, exc.lineno) from None
    positions = _entry_positions(text)
    validator = jsonschema.Draft202012Validator(corpus_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        err = errors[0]
        where = "/".join(map(str, err.absolute_path)) or "<root>"
        raise CorpusError(f"schema violation at {where}: {err.message}", path, _error_line(text, positions, err))
    table = doc["table"]
    seen: dict[int, int] = {}
    entries = []
    for k, raw in enumerate(doc["entries"]):
        line = _line_of(text, positions[k]) if k < len(positions) else None
        if raw["row"] in seen:
            raise CorpusError(f"duplicate row {raw['row']} in table {table} (first at line {seen[raw['row']]})",
                              path, line)
        seen[raw["row"]] = line or 0
        if raw["id"] != f"{table}:{raw['row']}":
            raise CorpusError(f"id {raw['id']!r} does not match table/row", path, line)
        e = CorpusEntry.from_json(table, raw, str(path), line)
        if build:
            _check_buildable(e)
        entries.append(e)
    return entries


def _check_buildable(e: CorpusEntry) -> None:
    try:
        G, H = e.G_datum, e.H_datum
        if e.pull is not None:
            if pull_to_rows(G, H, e.pull) != e.torus_map:
                raise CorpusError("torus map disagrees with the pull expressions", e.source, e.line)
        e.quadruple
        e.dual
    except CorpusError:
        raise
    except (RepError, QuadrupleError, FamilyError, ValueError) as exc:
        raise CorpusError(f"{e.id}: {exc}", e.source, e.line) from None


def load_corpus(path: str | Path | None = None, *, build: bool = True) -> list[CorpusEntry]:
    """Load the six tables from a directory (or one table from a file), validated against the schema."""
    path = Path(path) if path is not None else default_corpus_path()
    if path.is_file():
        return load_table(path, build=build)
    if not path.is_dir():
        raise CorpusError("corpus path does not exist", path)
    entries: list[CorpusEntry] = []
    for table in TABLES:
        f = path / f"{table}.json"
        if not f.exists():
            raise CorpusError(f"missing table file {f.name}", path)
        part = load_table(f, build=build)
        if any(e.table != table for e in part):
            raise CorpusError(f"file declares a table other than {table}", f, 1)
        if len(part) != TABLE_SIZES[table]:
            raise CorpusError(f"table {table} has {len(part)} rows, expected {TABLE_SIZES[table]}", f, 1)
        entries.extend(part)
    return entries


def load_excluded(path: str | Path | None = None) -> list[dict]:
    base = Path(path) if path is not None else default_corpus_path()
    return json.loads((base / "excluded.json").read_text(encoding="utf-8"))["excluded"]


# ---------------------------------------------------------------------------
# Serialization


def table_document(table: str, caption: str, entries: Sequence[CorpusEntry]) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "table": table,
        "caption": caption,
        "entries": [e.to_json() for e in sorted(entries, key=lambda e: e.row)],
    }


_INT_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def dumps_table(table: str, caption: str, entries: Sequence[CorpusEntry]) -> str:
    text = json.dumps(table_document(table, caption, entries), indent=2, ensure_ascii=False)
    # keep integer vectors on one line so matrix diffs stay readable
    text = _INT_LIST.sub(lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    return text + "\n"


def write_table(path: str | Path, table: str, caption: str, entries: Sequence[CorpusEntry]) -> None:
    Path(path).write_text(dumps_table(table, caption, entries), encoding="utf-8")


def serialize(entries: Iterable[CorpusEntry], directory: str | Path, captions: dict[str, str] | None = None) -> None:
    """Write entries back out, one file per table."""
    from .families import CAPTIONS

    captions = captions or CAPTIONS
    by_table: dict[str, list[CorpusEntry]] = {}
    for e in entries:
        by_table.setdefault(e.table, []).append(e)
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for table, part in by_table.items():
        write_table(directory / f"{table}.json", table, captions.get(table, table), part)


# ---------------------------------------------------------------------------
# Lookup


def find_entry(entries: Iterable[CorpusEntry], ident: str) -> CorpusEntry:
    """Resolve "table:row" (and "table:row?param=value,...")."""
    base, _, query = ident.partition("?")
    table, _, row = base.partition(":")
    try:
        key = (table, int(row))
    except ValueError:
        raise CorpusError(f"bad entry id {ident!r} (expected table:row)") from None
    params = {}
    for item in filter(None, query.split(",")):
        k, _, v = item.partition("=")
        params[k.strip()] = int(v)
    for e in entries:
        if (e.table, e.row) == key and all(e.params.get(k) == v for k, v in params.items()):
            return e
    if key in FAMILIES:
        try:
            return entry_from_spec(instantiate(key[0], key[1], **params))
        except FamilyError as exc:
            raise CorpusError(str(exc)) from None
    raise CorpusError(f"no corpus entry {ident}")


def resolve_target(entries: Iterable[CorpusEntry], ref: dict) -> CorpusEntry:
    """The reductive entry named by a reduces_to pointer (family-instantiated when parameters differ)."""
    table, row, params = ref["table"], ref["row"], ref.get("params", {})
    if table not in REDUCTIVE_TABLES:
        raise CorpusError(f"reduces_to points outside the reductive tables: {table}:{row}")
    for e in entries:
        if (e.table, e.row) == (table, row) and e.params == params:
            return e
    try:
        return entry_from_spec(instantiate(table, row, **params))
    except FamilyError as exc:
        raise CorpusError(f"missing reductive row {table}:{row} {params}: {exc}") from None


def dual_lookup(
    entries: Sequence[CorpusEntry],
    query: Quadruple | RepSum | DualData,
    *,
    families: bool = True,
    max_param: int = 4,
) -> list[CorpusEntry]:
    """Entries whose quadruple (or dual representation) matches ``query`` up to isogeny.

    With ``families`` set, parametrised rows are also tried at small parameter values.
    """
    if isinstance(query, DualData):
        query = query.rho_hat
    candidates = list(entries)
    if families:
        candidates += list(_family_instances(entries, max_param))
    out, seen = [], set()
    for e in candidates:
        sig = (e.table, e.row, tuple(sorted(e.params.items())))
        if sig in seen:
            continue
        try:
            hit = rep_matches(e.dual.rho_hat, query) if isinstance(query, RepSum) else quadruple_matches(
                e.quadruple, query)
        except (RepError, QuadrupleError, GradingError, ValueError):
            hit = False
        if hit:
            seen.add(sig)
            out.append(e)
    return out


def _family_instances(entries: Sequence[CorpusEntry], max_param: int) -> Iterable[CorpusEntry]:
    import itertools

    for e in entries:
        names = sorted(e.params)
        if not names:
            continue
        for values in itertools.product(range(1, max_param + 1), repeat=len(names)):
            params = dict(zip(names, values))
            if params == e.params:
                continue
            try:
                yield entry_from_spec(instantiate(e.table, e.row, **params))
            except (FamilyError, RepError, QuadrupleError, GradingError, ValueError):
                continue


# ---------------------------------------------------------------------------
# Verification


@dataclass(frozen=True)
class CheckResult:
    ok: bool | None  # None: not applicable
    detail: str = ""


@dataclass
class EntryReport:
    id: str
    results: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok is not False for r in self.results.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, r in self.results.items() if r.ok is False]


@dataclass
class VerifyReport:
    checks: tuple[str, ...]
    entries: list[EntryReport]
    seconds: float = 0.0

    @property
    def total(self) -> int:
        return len(self.entries)

    @property
    def passed(self) -> int:
        return sum(e.ok for e in self.entries)

    @property
    def failures(self) -> list[tuple[str, str, str]]:
        return [(e.id, k, e.results[k].detail) for e in self.entries for k in e.failures]

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def summary(self) -> str:
        return f"{self.passed}/{self.total} passed"

    def to_text(self, verbose: bool = False) -> str:
        lines = [f"# {RHS_NOTICE}", f"# checks: {', '.join(self.checks)}"]
        for e in self.entries:
            if e.ok and not verbose:
                continue
            marks = " ".join(f"{k}={_mark(r.ok)}" for k, r in e.results.items())
            lines.append(f"{e.id:<12} {'PASS' if e.ok else 'FAIL'}  {marks}")
            for k in e.failures:
                lines.append(f"    {k}: {e.results[k].detail}")
        lines.append(self.summary())
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "notice": RHS_NOTICE,
            "checks": list(self.checks),
            "passed": self.passed,
            "total": self.total,
            "entries": [
                {"id": e.id, "ok": e.ok, "checks": {k: r.ok for k, r in e.results.items()},
                 "details": {k: r.detail for k, r in e.results.items() if r.detail}}
                for e in self.entries
            ],
        }


def _mark(ok: bool | None) -> str:
    return {True: "ok", False: "FAIL", None: "n/a"}[ok]


def _fs_check(reps: Iterable[RepSum]) -> CheckResult:
    bad = []
    n = 0
    for rho in reps:
        for irr in rho.irreps():
            if irr.dim > FS_DIM_LIMIT:
                continue
            n += 1
            a, b = fs_indicator(irr), fs_indicator_oracle(irr)
            if a != b:
                bad.append(f"{irr.labels}: {a} vs oracle {b}")
    if bad:
        return CheckResult(False, "; ".join(bad))
    return CheckResult(True, f"{n} irreps") if n else CheckResult(None, "no irreps of small dimension")


def verify_entry(e: CorpusEntry, entries: Sequence[CorpusEntry], checks: Sequence[str]) -> EntryReport:
    rep = EntryReport(e.id)
    try:
        q, d = e.quadruple, e.dual
    except (RepError, QuadrupleError, ValueError) as exc:
        for c in checks:
            rep.results[c] = CheckResult(False, f"cannot build entry: {exc}")
        return rep

    v = vd = None
    if any(c in checks for c in ("validate", "symplectic", "anomaly", "containment")):
        v, vd = validate(q), validate_dual(d)

    red_match = None  # cached (MatchResult, target entry)

    def reduction():
        nonlocal red_match
        if red_match is None:
            target = resolve_target(entries, e.reduces_to)
            red_match = (match_reductive(delta_red(q), target.quadruple), target)
        return red_match

    for c in checks:
        try:
            if c == "validate":
                bad = [k for k, ok in v.checks.items() if not ok] + [f"dual {k}" for k, ok in vd.checks.items() if not ok]
                notes = "; ".join(v.notes.get(k, k) for k in v.checks if not v.checks[k])
                res = CheckResult(not bad, ", ".join(bad) + (f" ({notes})" if notes else ""))
            elif c in ("symplectic", "anomaly"):
                ok = v.checks[c] and vd.checks[c]
                res = CheckResult(ok, "" if ok else f"{c} fails on {'rho_H' if not v.checks[c] else 'rho_hat'}")
            elif c == "containment":
                res = CheckResult(v.checks["containment"], v.notes.get("containment", ""))
            elif c == "property-2.3":
                ok, msg = property_23(q, d)
                res = CheckResult(ok, msg)
            elif c == "grading":
                res = CheckResult(grading_conserved(q))
            elif c == "delta_red-match":
                if e.is_reductive:
                    res = CheckResult(None)
                elif not e.reduces_to:
                    res = CheckResult(False, "non-reductive entry without reduces_to")
                else:
                    m, target = reduction()
                    res = CheckResult(m.ok, m.reason if not m.ok else f"-> {target.id}")
            elif c == "whittaker-compat":
                if e.is_reductive:
                    res = CheckResult(None)
                elif not e.reduces_to:
                    res = CheckResult(False, "missing reductive row")
                else:
                    m, target = reduction()
                    if not m.ok:
                        res = CheckResult(False, f"no reduction match: {m.reason}")
                    else:
                        ok, msg = check_whittaker_compatibility(q, d, target.dual, m.pairs)
                        res = CheckResult(ok, msg if not ok else "")
            elif c == "dimension":
                got = computed_dims(e)
                diff = {k: (v_, got.get(k)) for k, v_ in e.dims.items() if got.get(k) != v_}
                res = CheckResult(not diff, "" if not diff else f"stored vs computed {diff}")
            elif c == "fs":
                res = _fs_check([q.rho_H, d.rho_hat])
            else:
                raise CorpusError(f"unknown check {c!r}")
        except CorpusError as exc:
            if "unknown check" in str(exc):
                raise
            res = CheckResult(False, str(exc))
        except (RepError, QuadrupleError, GradingError, ValueError) as exc:
            res = CheckResult(False, f"{type(exc).__name__}: {exc}")
        rep.results[c] = res
    return rep


def verify_corpus(entries: Sequence[CorpusEntry], checks: Sequence[str] | None = None,
                  reference: Sequence[CorpusEntry] | None = None) -> VerifyReport:
    """Run the requested checks on every entry; rows come back in table/row order.

    ``checks`` defaults to the core structural set; ``reference`` is the corpus used to
    resolve reduction targets (defaults to ``entries``).
    """
    checks = tuple(checks) if checks else CORE_CHECKS
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise CorpusError(f"unknown check(s): {', '.join(unknown)}")
    order = {t: i for i, t in enumerate(TABLES)}
    ordered = sorted(entries, key=lambda e: (order.get(e.table, len(order)), e.table, e.row))
    t0 = time.perf_counter()
    ref = list(reference) if reference is not None else list(entries)
    reports = [verify_entry(e, ref, checks) for e in ordered]
    return VerifyReport(checks, reports, time.perf_counter() - t0)


def table_counts(entries: Iterable[CorpusEntry]) -> Counter:
    return Counter(e.table for e in entries)


__all__ = [
    "CHECKS",
    "CORPUS_ENV",
    "CORE_CHECKS",
    "FULL_CHECKS",
    "RHS_NOTICE",
    "SCHEMA_VERSION",
    "CheckResult",
    "CorpusEntry",
    "CorpusError",
    "EntryReport",
    "VerifyReport",
    "default_corpus_path",
    "dual_lookup",
    "entry_from_spec",
    "find_entry",
    "load_corpus",
    "load_excluded",
    "load_table",
    "resolve_target",
    "serialize",
    "verify_corpus",
    "verify_entry",
]
