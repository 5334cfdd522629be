"""Quadruples (G, H, rho_H, iota), their reductions and the Whittaker-induction check.

Matching "up to central isogeny" is done on semisimple invariants only:

* root types of the ambient groups and of H;
* for every simple factor of the ambient group, the restriction of its
  adjoint representation to H, recorded as a multiset of H-Dynkin labels;
* the Dynkin labels of the H-representation.

An isomorphism of H (a diagram isomorphism, components may be permuted) and
a bijection of ambient simple factors must make all three agree. None of
these depend on the choice of Borel subgroups or on the central tori.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .grading import (
    GradingError,
    adjoint_grading,
    conservation_holds,
    odd_levels,
    rho_H_iota,
    rho_k_decomposition,
    sl2_cocharacter,
)
from .repcalc import (
    RepError,
    RepSum,
    TorusMap,
    anomaly_proxy,
    decompose_weight_multiset,
    is_symplectic,
    restrict_along,
)
from .rootdata import (
    LeviLabel,
    RootDatum,
    Vec,
    canonical_type,
    dominantize,
    dominantize_coweight,
    dual_type,
    weyl_orbit,
)


class QuadrupleError(ValueError):
    pass


@dataclass(frozen=True)
class Quadruple:
    G: RootDatum
    H: RootDatum
    phi: TorusMap
    rho_H: RepSum
    iota: LeviLabel = LeviLabel()
    meta: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.phi.source is not self.H and self.phi.source != self.H:
            raise QuadrupleError("torus map source must be H")
        if self.phi.target != self.G:
            raise QuadrupleError("torus map target must be G")
        if self.rho_H.datum != self.H:
            raise QuadrupleError("rho_H must be a representation of H")
        for i in self.iota.indices:
            if not 0 <= i < self.G.ss_rank:
                raise QuadrupleError(f"iota index {i} out of range")

    @property
    def is_reductive(self) -> bool:
        return not self.iota.indices

    @cached_property
    def h(self) -> Vec:
        return sl2_cocharacter(self.G, self.iota)

    @cached_property
    def pieces(self) -> dict[int, RepSum]:
        """k -> rho_k (raises GradingError when H does not centralize h)."""
        return rho_k_decomposition(self.G, self.h, self.phi)

    @cached_property
    def rho_H_iota(self) -> RepSum:
        return rho_H_iota(self.rho_H, self.pieces)

    @property
    def period_type(self) -> str:
        if self.is_reductive:
            return "reductive"
        return "Fourier-Jacobi" if odd_levels(self.pieces) else "Bessel"


@dataclass(frozen=True)
class DualData:
    G_hat: RootDatum
    rho_hat: RepSum
    W_V: str | None = None
    l_hat: str | None = None
    knop: str | None = None


# ---------------------------------------------------------------------------
# Validation


@dataclass
class ValidationReport:
    checks: dict[str, bool] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, ok: bool, note: str = "") -> None:
        self.checks[name] = ok
        if note:
            self.notes[name] = note


def contains_in_levi(q: Quadruple) -> tuple[bool, str]:
    """H inside M = Z_G(h): every level restricts to an H-character and Lie(H) sits in level 0."""
    gr = adjoint_grading(q.G, q.h)
    for k, c in gr.levels.items():
        try:
            decompose_weight_multiset(q.H, restrict_along(q.phi, c))
        except RepError as exc:
            return False, f"level {k}: {exc}"
    zero = restrict_along(q.phi, gr.levels[0])
    need = Counter(q.H.roots)
    for r, m in need.items():
        if zero.get(r, 0) < m:
            return False, f"root {r} of H is not in level 0"
    return True, ""


def validate(q: Quadruple) -> ValidationReport:
    rep = ValidationReport()
    rep.record("integral", all(isinstance(x, int) for row in q.phi.rows for x in row))
    ok, why = contains_in_levi(q)
    rep.record("containment", ok, why)
    if not ok:
        rep.record("symplectic", False, "rho_{H,iota} undefined")
        rep.record("anomaly", False, "rho_{H,iota} undefined")
        return rep
    try:
        rho = q.rho_H_iota
    except GradingError as exc:
        rep.record("symplectic", False, str(exc))
        rep.record("anomaly", False, str(exc))
        return rep
    rep.record("symplectic", is_symplectic(rho))
    rep.record("anomaly", anomaly_proxy(rho))
    return rep


def validate_dual(d: DualData) -> ValidationReport:
    rep = ValidationReport()
    rep.record("symplectic", is_symplectic(d.rho_hat))
    rep.record("anomaly", anomaly_proxy(d.rho_hat))
    return rep


def grading_conserved(q: Quadruple) -> bool:
    gr = adjoint_grading(q.G, q.h)
    return gr.is_symmetric() and conservation_holds(q.G, q.pieces)


# ---------------------------------------------------------------------------
# Reduction


def standardize(q: Quadruple) -> tuple[Vec, tuple[int, ...], TorusMap]:
    """Conjugate h to be dominant; return (h_dom, zero-level simple indices, conjugated map)."""
    h_dom, w = dominantize_coweight(q.G, q.h)
    rows = tuple(q.G.act_coweight(w, r) for r in q.phi.rows)
    J = tuple(i for i, a in enumerate(q.G.simple_roots) if sum(x * y for x, y in zip(a, h_dom)) == 0)
    return h_dom, J, TorusMap(q.H, q.G, rows)


def delta_red(q: Quadruple) -> Quadruple:
    """(M, H, rho_{H,iota}, trivial) with M the standard Levi centralizing the dominant h."""
    if q.is_reductive:
        return q
    ok, why = contains_in_levi(q)
    if not ok:
        raise QuadrupleError(f"H is not contained in M: {why}")
    _, J, phi = standardize(q)
    M = q.G.subdatum(J)
    M = RootDatum(M.rank, M.simple_roots, M.simple_coroots, label=f"M({q.G.label})")
    phi_m = TorusMap(q.H, M, phi.rows)
    meta = dict(q.meta)
    meta["levi_indices"] = J
    return Quadruple(M, q.H, phi_m, q.rho_H_iota, LeviLabel(), meta)


# ---------------------------------------------------------------------------
# Diagram isomorphisms


def _component_isos(X: RootDatum, cx: Sequence[int], Y: RootDatum, cy: Sequence[int]) -> list[dict[int, int]]:
    """All Cartan-preserving bijections between two connected components."""
    if len(cx) != len(cy):
        return []
    out = []
    if len(cx) <= 4:
        cands = (dict(zip(cx, p)) for p in itertools.permutations(cy))
    else:
        perms = [tuple(cy), tuple(reversed(cy)), _swap_tail(cy)]
        if len(cy) == 6:
            perms.append(_e6_flip(cy))
        cands = (dict(zip(cx, p)) for p in perms)
    for m in cands:
        if all(X.cartan[i][j] == Y.cartan[m[i]][m[j]] for i in cx for j in cx) and m not in out:
            out.append(m)
    return out


def _swap_tail(cy: Sequence[int]) -> tuple[int, ...]:
    c = list(cy)
    c[-1], c[-2] = c[-2], c[-1]
    return tuple(c)


def _e6_flip(cy: Sequence[int]) -> tuple[int, ...]:
    c = list(cy)
    return (c[5], c[1], c[4], c[3], c[2], c[0])


def diagram_isos(X: RootDatum, Y: RootDatum) -> Iterator[dict[int, int]]:
    """Every isomorphism of Dynkin diagrams X -> Y (components may be permuted)."""
    cx = [tuple(c) for _, c in X.components]
    cy = [tuple(c) for _, c in Y.components]
    if canonical_type(X.type_label) != canonical_type(Y.type_label):
        return
    yield from _assign(X, cx, Y, cy, 0, set(), {})


def _assign(X, cx, Y, cy, k, used, acc) -> Iterator[dict[int, int]]:
    if k == len(cx):
        yield dict(acc)
        return
    for j, comp in enumerate(cy):
        if j in used or len(comp) != len(cx[k]):
            continue
        for m in _component_isos(X, cx[k], Y, comp):
            acc.update(m)
            used.add(j)
            yield from _assign(X, cx, Y, cy, k + 1, used, acc)
            used.discard(j)
            for i in m:
                acc.pop(i, None)


def _relabel(labs: Sequence[int], iso: dict[int, int], size: int) -> Vec:
    out = [0] * size
    for i, a in enumerate(labs):
        out[iso[i]] = a
    return tuple(out)


def _relabel_counter(c: Counter, iso: dict[int, int], size: int) -> Counter:
    return Counter({_relabel(k, iso, size): v for k, v in c.items()})


# ---------------------------------------------------------------------------
# Matching against a reductive quadruple


def component_adjoint_labels(q: Quadruple) -> list[tuple[str, tuple[int, ...], Counter]]:
    """For each simple factor of G: (type, simple indices, restricted adjoint as H-label multiset)."""
    out = []
    zero = tuple(0 for _ in range(q.G.rank))
    for typ, comp in q.G.components:
        sub = q.G.subdatum(comp)
        wts: Counter = Counter({zero: len(comp)})
        for r in sub.roots:
            wts[r] += 1
        rep = decompose_weight_multiset(q.H, restrict_along(q.phi, wts))
        out.append((canonical_type(typ), tuple(comp), rep.label_multiset()))
    return out


@dataclass
class MatchResult:
    ok: bool
    reason: str = ""
    pairs: list[tuple[dict[int, int], dict[int, int]]] = field(default_factory=list)


def match_reductive(red: Quadruple, target: Quadruple, limit: int = 64) -> MatchResult:
    """Compare a reduced quadruple with a reductive one up to central isogeny.

    Returns the compatible (sigma, tau) pairs: sigma maps simple indices of
    red.G to those of target.G, tau maps simple indices of red.H to target.H.
    """
    if not target.is_reductive or not red.is_reductive:
        raise QuadrupleError("both quadruples must be reductive")
    if canonical_type(red.G.type_label) != canonical_type(target.G.type_label):
        return MatchResult(False, f"ambient types differ: {red.G.type_label or '0'} vs {target.G.type_label or '0'}")
    if canonical_type(red.H.type_label) != canonical_type(target.H.type_label):
        return MatchResult(False, f"H types differ: {red.H.type_label or '0'} vs {target.H.type_label or '0'}")
    a_red = component_adjoint_labels(red)
    a_tgt = component_adjoint_labels(target)
    rho_red = red.rho_H.label_multiset()
    rho_tgt = target.rho_H.label_multiset()
    n_h = target.H.ss_rank
    pairs = []
    saw_tau = False
    for tau in diagram_isos(red.H, target.H):
        if _relabel_counter(rho_red, tau, n_h) != rho_tgt:
            continue
        saw_tau = True
        moved = [(t, c, _relabel_counter(lab, tau, n_h)) for t, c, lab in a_red]
        for sigma in diagram_isos(red.G, target.G):
            good = True
            for t, comp, lab in moved:
                image = sigma[comp[0]]
                hit = next(x for x in a_tgt if image in x[1])
                if hit[2] != lab:
                    good = False
                    break
            if good:
                pairs.append((sigma, tau))
                if len(pairs) >= limit:
                    return MatchResult(True, "", pairs)
    if pairs:
        return MatchResult(True, "", pairs)
    if not saw_tau:
        return MatchResult(False, "rho labels differ under every isomorphism of H")
    return MatchResult(False, "restricted adjoint of the ambient factors differs")


# ---------------------------------------------------------------------------
# Whittaker induction


def whittaker_induce(rho: RepSum, G_hat: RootDatum) -> RepSum:
    """Dominantize each highest weight of an M-hat representation inside G-hat."""
    if rho.datum.rank != G_hat.rank:
        raise QuadrupleError("M-hat must share the torus of G-hat")
    items = []
    for hw, m in rho.terms:
        dom, _ = dominantize(G_hat, hw)
        items.append((dom, m))
    return RepSum.build(G_hat, items)


def _orbit_label_sets(G_hat: RootDatum, hw: Vec, J: Sequence[int]) -> set[Vec]:
    """J-labels of the M-hat-dominant weights in the Weyl orbit of hw."""
    out = set()
    for mu in weyl_orbit(G_hat, hw):
        labs = G_hat.labels(mu)
        sub = tuple(labs[j] for j in J)
        if all(x >= 0 for x in sub):
            out.add(sub)
    return out


def _perfect_matching(need: list, have: list, ok) -> bool:
    if len(need) != len(have):
        return False
    match: dict[int, int] = {}

    def augment(i: int, seen: set[int]) -> bool:
        for j in range(len(have)):
            if j in seen or not ok(need[i], have[j]):
                continue
            seen.add(j)
            if j not in match or augment(match[j], seen):
                match[j] = i
                return True
        return False

    return all(augment(i, set()) for i in range(len(need)))


def check_whittaker_compatibility(
    q: Quadruple,
    dual: DualData,
    red_dual: DualData,
    pairs: Sequence[tuple[dict[int, int], dict[int, int]]],
) -> tuple[bool, str]:
    """Does inducing the reductive row's rho-hat from M-hat give the listed rho-hat?

    ``pairs`` come from :func:`match_reductive` applied to ``delta_red(q)``; sigma
    maps the standard Levi indices J of G to the reductive row's simple indices,
    which also index the simple roots of both dual groups.
    """
    _, J, _ = standardize(q)
    G_hat = dual.G_hat
    listed: list[Vec] = []
    for hw, m in dual.rho_hat.terms:
        listed.extend([hw] * m)
    orbit_sets = {hw: _orbit_label_sets(G_hat, hw, J) for hw in set(listed)}
    red_labels: list[Vec] = []
    for labs, m in red_dual.rho_hat.label_multiset().items():
        red_labels.extend([labs] * m)
    if len(red_labels) != len(listed):
        return False, f"{len(red_labels)} summands induce to {len(listed)} listed summands"
    for sigma, _tau in pairs:
        wanted = [tuple(lab[sigma[k]] for k in range(len(J))) for lab in red_labels]
        if _perfect_matching(wanted, listed, lambda w, hw: w in orbit_sets[hw]):
            return True, ""
    return False, "no listed summand arrangement matches the induced highest weights"


# ---------------------------------------------------------------------------
# Property 2.3


def _norm_type(t: str | None) -> str:
    if t is None or t.strip() in ("", "0", "1", "trivial"):
        return ""
    return canonical_type(t)


def property_23(q: Quadruple, dual: DualData) -> tuple[bool | None, str]:
    """type(H) is dual to W_V and type(L_iota) is dual to l-hat; None when no Knop data."""
    if dual.W_V is None:
        return None, "no Knop data"
    h_type = canonical_type(q.H.type_label)
    want_h = dual_type(_norm_type(dual.W_V)) if _norm_type(dual.W_V) else ""
    l_type = canonical_type(q.G.subdatum(q.iota.indices).type_label) if q.iota.indices else ""
    lh = _norm_type(dual.l_hat)
    want_l = dual_type(lh) if lh else ""
    msgs = []
    if h_type != want_h:
        msgs.append(f"H type {h_type or '0'} vs dual(W_V) {want_h or '0'}")
    if l_type != want_l:
        msgs.append(f"L type {l_type or '0'} vs dual(l-hat) {want_l or '0'}")
    return (not msgs), "; ".join(msgs)


# ---------------------------------------------------------------------------
# Normal forms and lookup


def rep_matches(a: RepSum, b: RepSum) -> bool:
    """Same root type and same label multiset under some diagram isomorphism."""
    if canonical_type(a.datum.type_label) != canonical_type(b.datum.type_label):
        return False
    la, lb = a.label_multiset(), b.label_multiset()
    n = b.datum.ss_rank
    return any(_relabel_counter(la, iso, n) == lb for iso in diagram_isos(a.datum, b.datum))


def quadruple_matches(a: Quadruple, b: Quadruple) -> bool:
    if a.is_reductive != b.is_reductive:
        return False
    if a.is_reductive:
        return match_reductive(a, b, limit=1).ok
    ta = canonical_type(a.G.subdatum(a.iota.indices).type_label)
    tb = canonical_type(b.G.subdatum(b.iota.indices).type_label)
    if ta != tb:
        return False
    try:
        return match_reductive(delta_red(a), delta_red(b), limit=1).ok and canonical_type(
            a.G.type_label
        ) == canonical_type(b.G.type_label)
    except (QuadrupleError, GradingError):
        return False


__all__ = [
    "DualData",
    "MatchResult",
    "Quadruple",
    "QuadrupleError",
    "ValidationReport",
    "check_whittaker_compatibility",
    "contains_in_levi",
    "delta_red",
    "diagram_isos",
    "grading_conserved",
    "match_reductive",
    "property_23",
    "quadruple_matches",
    "rep_matches",
    "standardize",
    "validate",
    "validate_dual",
    "whittaker_induce",
]
