"""Command-line interface: ``bzsv <verb> ...``.

Only right-hand-side expressions are evaluated; period integrals are never computed.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from typing import Sequence

from . import gluing, lfactor as lf
from .families import TABLES
from .grading import GradingError
from .quadruple import (
    QuadrupleError,
    check_whittaker_compatibility,
    delta_red,
    match_reductive,
    quadruple_matches,
    validate,
)
from .repcalc import RepError, RepSum, fs_indicator, parse_rep
from .rootdata import RootDatum, RootDatumError, build_root_datum, canonical_type
from .tables import (
    CHECKS,
    CORE_CHECKS,
    FULL_CHECKS,
    RHS_NOTICE,
    CorpusError,
    find_entry,
    load_corpus,
    resolve_target,
    verify_corpus,
)

JSON_SCHEMA = "bzsv-cli/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Formatting helpers

_CLASSICAL = {"A": lambda n: f"GL{n + 1}", "B": lambda n: f"SO{2 * n + 1}", "C": lambda n: f"Sp{2 * n}",
              "D": lambda n: f"SO{2 * n}"}


def normal_form_group(d: RootDatum) -> str:
    """Semisimple type written with classical group names, central tori dropped: A1xA1xA1 -> (GL2)^3."""
    t = canonical_type(d.type_label)
    if not t:
        return "1"
    names = []
    for part in t.split("x"):
        letter, n = part[0], int(part[1:])
        names.append(_CLASSICAL[letter](n) if letter in _CLASSICAL else part)
    counts = Counter(names)
    out = []
    for name in dict.fromkeys(names):
        k = counts[name]
        out.append(f"({name})^{k}" if k > 1 else name)
    return " x ".join(out)


def describe_rep(rho: RepSum) -> str:
    if not rho.terms:
        return "0"
    parts = []
    for hw, m in rho.terms:
        labels = ",".join(map(str, rho.datum.labels(hw)))
        dim = RepSum.irrep(rho.datum, hw).dim
        parts.append(f"{m}*V[{labels}]<{dim}>" if m > 1 else f"V[{labels}]<{dim}>")
    return " (+) ".join(parts)


def infer_group(spec: str) -> str:
    """Product of the group tokens referenced in a rep spec (``#k`` selects repeated factors)."""
    need: dict[str, int] = {}
    for tok in re.findall(r"\(\s*([A-Z][A-Za-z0-9]*)(?:#(\d+))?\s*\)", spec):
        name, k = tok[0], int(tok[1] or 1)
        need[name] = max(need.get(name, 0), k)
    if not need:
        raise UsageError(f"cannot infer a group from {spec!r}; pass --group")
    return " x ".join(n for name, k in need.items() for n in [name] * k)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, **payload}, indent=2, sort_keys=False, default=str))
    else:
        print(text)


def _corpus(args):
    return load_corpus(args.corpus) if args.corpus else load_corpus()


# ---------------------------------------------------------------------------
# Verbs


def cmd_verify(args) -> int:
    entries = _corpus(args)
    if args.check in (None, ""):
        checks = CORE_CHECKS
    elif args.check == "all":
        checks = FULL_CHECKS
    else:
        checks = tuple(c.strip() for c in args.check.split(",") if c.strip())
        bad = [c for c in checks if c not in CHECKS]
        if bad:
            raise UsageError(f"unknown check(s) {', '.join(bad)}; choose from {', '.join(CHECKS)} or 'all'")
    if args.table:
        if args.table not in TABLES:
            raise UsageError(f"unknown table {args.table!r}")
        chosen = [e for e in entries if e.table == args.table]
    elif args.ids:
        chosen = [find_entry(entries, i) for i in args.ids]
    else:
        chosen = entries  # --all is the default
    report = verify_corpus(chosen, checks, reference=entries)
    if args.json:
        print(json.dumps({"schema": JSON_SCHEMA, **report.to_json()}, indent=2))
    else:
        print(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_entry(args) -> int:
    entries = _corpus(args)
    ident = args.id if args.row is None else f"{args.id}:{args.row}"
    e = find_entry(entries, ident)
    q, d = e.quadruple, e.dual
    levi = canonical_type(q.G.subdatum(q.iota.indices).type_label) if q.iota.indices else "0"
    derived = {
        "period": e.period,
        "levi_type": levi,
        "dims": e.dims,
        "rho_H": describe_rep(q.rho_H),
        "rho_hat": describe_rep(d.rho_hat),
        "G_hat": e.G_hat or d.G_hat.label,
    }
    payload = {"entry": e.to_json(), "derived": derived}
    lines = [
        f"# {RHS_NOTICE}",
        f"{e.id}  params={e.params or '{}'}",
        f"  G        {e.G}",
        f"  H        {e.H}",
        f"  rho_H    {e.rho_H}",
        f"  iota     {list(e.iota)} (Levi type {levi})",
        f"  G_hat    {derived['G_hat']}",
        f"  rho_hat  {e.rho_hat}",
        f"  Knop     {e.knop}  W_V={e.W_V}  l_hat={e.l_hat}",
        f"  period   {e.period}",
        f"  dims     {e.dims}",
    ]
    if e.reduces_to:
        rt = e.reduces_to
        lines.append(f"  reduces  {rt['table']}:{rt['row']} {rt.get('params') or ''}".rstrip())
    if e.notes:
        lines.append(f"  notes    {e.notes}")
    flags = [f for f in (f"embedding: {e.embedding}", f"pairing: {e.pairing}" if e.pairing else "") if f]
    lines.append("  markers  " + ", ".join(flags))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_reduce(args) -> int:
    entries = _corpus(args)
    e = find_entry(entries, args.id)
    q = e.quadruple
    red = delta_red(q)
    nf = (normal_form_group(red.G), normal_form_group(red.H), describe_rep(red.rho_H), "1")
    central = red.G.rank - red.G.ss_rank
    payload = {"id": e.id, "normal_form": list(nf), "M": red.G.label, "discarded_central_rank": central}
    lines = [f"# {RHS_NOTICE}", f"Delta_red({e.id}) = ({', '.join(nf)})",
             f"  M = {red.G.label} (type {canonical_type(red.G.type_label) or '0'}); central torus rank {central} discarded"]
    ok = True
    if e.reduces_to:
        target = resolve_target(entries, e.reduces_to)
        m = match_reductive(red, target.quadruple)
        ok = m.ok
        payload["reduces_to"] = {"id": target.id, "params": target.params, "match": m.ok, "reason": m.reason}
        lines.append(f"  reduces_to {target.id} {target.params or ''}: {'match' if m.ok else 'MISMATCH ' + m.reason}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_induce(args) -> int:
    entries = _corpus(args)
    e = find_entry(entries, args.id)
    if e.is_reductive or not e.reduces_to:
        raise UsageError(f"{e.id} is reductive; Whittaker induction needs a non-reductive entry")
    target = resolve_target(entries, e.reduces_to)
    m = match_reductive(delta_red(e.quadruple), target.quadruple)
    if not m.ok:
        ok, msg = False, f"no reduction match: {m.reason}"
    else:
        ok, msg = check_whittaker_compatibility(e.quadruple, e.dual, target.dual, m.pairs)
    payload = {"id": e.id, "reduces_to": target.id, "listed_rho_hat": e.rho_hat, "reductive_rho_hat": target.rho_hat,
               "compatible": ok, "detail": msg}
    text = "\n".join([
        f"# {RHS_NOTICE}",
        f"{e.id}: induce rho_hat of {target.id} [{target.rho_hat}] from M_hat to {e.dual.G_hat.label}",
        f"  listed rho_hat: {e.rho_hat}",
        f"  {'compatible' if ok else 'INCOMPATIBLE'}{': ' + msg if msg else ''}",
    ])
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def _glue_operand(token: str, entries):
    if re.match(r"^\(?S\.?\d+", token.strip()):
        return gluing.parse_model(token)
    e = find_entry(entries, token)
    return gluing.model_for_entry(e.table, e.row, e.params)


def cmd_glue(args) -> int:
    needs_corpus = any(not re.match(r"^\(?S\.?\d+", t.strip()) for t in args.models)
    entries = _corpus(args) if needs_corpus or args.lookup else []
    operands = [_glue_operand(t, entries) for t in args.models]
    fmt = lambda mp: mp[0] + "".join(f",{k}={v}" for k, v in sorted(mp[1].items()))  # noqa: E731
    if len(operands) == 1:
        mid, params = operands[0]
        primal = gluing.model(mid, **params) if gluing.is_anomaly_free(mid, params) else None
        dual = gluing.dual_model(mid, **params)
        outcome = gluing.GlueOutcome("glued", primal, dual, "singleton chain")
    elif len(operands) == 2:
        outcome = gluing.glue_models(fmt(operands[0]), fmt(operands[1]))
    else:
        primal = gluing.chain_glue([gluing.model(m, **p) for m, p in operands])
        dual = gluing.dual_model(*operands[0][:1], **operands[0][1])
        for m, p in operands[1:]:
            dual = gluing.glue_dual(dual, gluing.dual_model(m, **p), mark_a=len(dual.marks) - 1)
        outcome = gluing.GlueOutcome("glued", primal, dual, "chain")
    payload: dict = {"operands": [fmt(o) for o in operands], "kind": outcome.kind, "note": outcome.note}
    lines = [f"# {RHS_NOTICE}", f"glue {' + '.join(payload['operands'])}: {outcome.kind}"]
    if outcome.note:
        lines.append(f"  note: {outcome.note}")
    if outcome.primal is not None:
        q = outcome.primal.to_quadruple()
        v = validate(q)
        payload["primal"] = {"G": outcome.primal.G_spec, "H": outcome.primal.H_spec,
                             "rho_H": outcome.primal.rho_H_spec, "iota": list(outcome.primal.iota_indices),
                             "valid": v.checks}
        lines.append(f"  Delta      = {outcome.primal.describe()}")
        lines.append(f"  validation = {', '.join(f'{k}={ok}' for k, ok in v.checks.items())}")
        if args.lookup:
            hits = [e.id for e in entries if e.is_reductive == q.is_reductive and _safe_match(e.quadruple, q)]
            payload["corpus_matches"] = hits
            lines.append(f"  corpus     = {', '.join(hits) or 'no match'}")
    elif outcome.corpus_ref is not None:
        t, r, p = outcome.corpus_ref
        payload["corpus_ref"] = {"table": t, "row": r, "params": p}
        lines.append(f"  Delta      = corpus row {t}:{r} {p}")
    if outcome.dual is not None:
        payload["dual"] = {"G_hat": outcome.dual.G_hat_spec, "rho_hat": outcome.dual.rho_hat_spec}
        lines.append(f"  Delta_hat  = {outcome.dual.describe()}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _safe_match(a, b) -> bool:
    try:
        return quadruple_matches(a, b)
    except (QuadrupleError, GradingError, RepError):
        return False


def _parse_coords(text: str) -> tuple[complex, ...]:
    try:
        return tuple(complex(t.strip().replace("i", "j")) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad coordinates {text!r}; use comma-separated complex numbers like 0.6+0.8j") from None


def cmd_lfactor(args) -> int:
    group = args.group or infer_group(args.rep)
    d = build_root_datum(group)
    rho = parse_rep(d, args.rep)
    coords = _parse_coords(args.coords) if args.coords else tuple([1.0] * d.rank)
    c = lf.SatakeParameter(d, coords, args.q, tempered=all(abs(abs(x) - 1) < 1e-12 for x in coords))
    try:
        val = lf.lfactor(rho, c, args.s)
    except lf.PoleError as exc:
        _emit(args, {"error": "pole", "weight": list(exc.weight)}, f"error: {exc}")
        return EXIT_FAIL
    payload = {"group": d.label, "rep": args.rep, "q": args.q, "s": args.s,
               "value": [val.value.real, val.value.imag],
               "factors": [{"eigenvalue": [ev.real, ev.imag], "exponent": k} for ev, k in val.factors]}
    lines = [f"# {RHS_NOTICE}", f"L(s={args.s}, {args.rep}) at q={args.q}: {_fmt_c(val.value)}",
             f"  = prod over {len(val.factors)} weights of (1 - eigenvalue * q^-s)^-exponent"]
    if args.verbose:
        lines += [f"    {_fmt_c(ev)}  ^{k}" for ev, k in val.factors]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _fmt_c(z: complex) -> str:
    z = complex(z)
    if abs(z.imag) < 1e-15 * max(1.0, abs(z.real)):
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}j"


def cmd_dim(args) -> int:
    group = args.group or infer_group(args.rep)
    rho = parse_rep(build_root_datum(group), args.rep)
    _emit(args, {"group": group, "rep": args.rep, "dim": rho.dim}, str(rho.dim))
    return EXIT_OK


def cmd_decompose(args) -> int:
    group = args.group or infer_group(args.rep)
    d = build_root_datum(group)
    rho = parse_rep(d, args.rep)
    items = []
    for irr in rho.irreps():
        mult = dict(rho.terms)[irr.hw]
        items.append({"highest_weight": list(irr.hw), "labels": list(d.labels(irr.hw)), "dim": irr.dim,
                      "multiplicity": mult, "fs": fs_indicator(irr)})
    lines = [f"{args.rep} on {d.label}: dim {rho.dim}, {rho.count} irreducible summand(s)"]
    for it in items:
        lines.append(f"  {it['multiplicity']} x labels {tuple(it['labels'])}  dim {it['dim']}  FS {it['fs']:+d}")
    _emit(args, {"group": d.label, "rep": args.rep, "dim": rho.dim, "summands": items}, "\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--corpus", metavar="PATH", help="corpus directory or table file (overrides $BZSV_CORPUS)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="bzsv",
        description="Structural checks for BZSV quadruples and their duals. " + RHS_NOTICE,
        epilog="Exit status: 0 pass, 1 failures, 2 usage or schema error.",
    )
    sub = p.add_subparsers(dest="verb", metavar="verb")
    sub.required = True

    v = sub.add_parser("verify", parents=[common], help="run corpus checks",
                       description="Run corpus checks. " + RHS_NOTICE)
    v.add_argument("ids", nargs="*", help="entry ids table:row (default: all)")
    v.add_argument("--all", action="store_true", help="every entry (the default)")
    v.add_argument("--table", choices=TABLES)
    v.add_argument("--check", help=f"comma list from {', '.join(CHECKS)}, or 'all' "
                                   f"(default: {', '.join(CORE_CHECKS)})")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("entry", parents=[common], help="print a corpus row with derived fields")
    e.add_argument("id", help="table:row, or a table name followed by the row")
    e.add_argument("row", nargs="?", type=int)
    e.set_defaults(func=cmd_entry)

    r = sub.add_parser("reduce", parents=[common], help="Delta_red normal form of an entry")
    r.add_argument("id")
    r.set_defaults(func=cmd_reduce)

    i = sub.add_parser("induce", parents=[common], help="Whittaker induction check for a non-reductive entry")
    i.add_argument("id")
    i.set_defaults(func=cmd_induce)

    g = sub.add_parser("glue", parents=[common], help="glue Table S models (S.3:n=4) or entry ids; 3+ operands chain")
    g.add_argument("models", nargs="+")
    g.add_argument("--lookup", action="store_true", help="also search the corpus for the glued quadruple")
    g.set_defaults(func=cmd_glue)

    lfp = sub.add_parser("lfactor", parents=[common], help="local L-factor of a representation",
                         description="Local unramified L-factor. " + RHS_NOTICE)
    lfp.add_argument("rep", help='rep spec, e.g. "std(GL2)(x)std(GL3)"')
    lfp.add_argument("--group", help="group (inferred from the rep spec when omitted)")
    lfp.add_argument("--coords", help="comma-separated Satake coordinates (default: all 1)")
    lfp.add_argument("--q", type=float, default=2.0)
    lfp.add_argument("--s", type=complex, default=0.5)
    lfp.set_defaults(func=cmd_lfactor)

    dm = sub.add_parser("dim", parents=[common], help="dimension of a representation")
    dm.add_argument("rep")
    dm.add_argument("--group")
    dm.set_defaults(func=cmd_dim)

    dc = sub.add_parser("decompose", parents=[common], help="irreducible decomposition of a representation")
    dc.add_argument("rep")
    dc.add_argument("--group")
    dc.set_defaults(func=cmd_decompose)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CorpusError, RepError, RootDatumError, gluing.GlueError, lf.LFactorError) as exc:
        print(f"bzsv {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
