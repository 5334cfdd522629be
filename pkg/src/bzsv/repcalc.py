"""Highest-weight representation calculus on :class:`RootDatum` objects.

Weights are integer vectors in the character lattice. Multisets of weights are
``collections.Counter`` objects keyed by tuples. Irreducibles are addressed by
their (dominant) highest weight; products of factors are handled component by
component so that cross-factor tensor products never go through Klimyk.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .rootdata import (
    Factor,
    RootDatum,
    RootDatumError,
    Vec,
    dominantize,
    dot,
    longest_element,
    parse_factor,
    vadd,
)

Multiset = Counter  # Counter[Vec]

KLIMYK_DIM_LIMIT = 200


class RepError(ValueError):
    """Raised for bad rep specs, non-characters and size violations."""


# ---------------------------------------------------------------------------
# Value types


@dataclass(frozen=True)
class Irrep:
    datum: RootDatum
    hw: Vec

    def __post_init__(self) -> None:
        if len(self.hw) != self.datum.rank:
            raise RepError("highest weight has wrong length")
        if not self.datum.is_dominant(self.hw):
            raise RepError(f"highest weight {self.hw} is not dominant")

    @property
    def labels(self) -> Vec:
        return self.datum.labels(self.hw)

    @property
    def dim(self) -> int:
        return weyl_dim(self)


@dataclass(frozen=True)
class RepSum:
    """Formal sum of irreducibles with positive multiplicities, sorted by weight."""

    datum: RootDatum
    terms: tuple[tuple[Vec, int], ...] = ()

    @classmethod
    def build(cls, datum: RootDatum, items: Iterable[tuple[Vec, int]]) -> "RepSum":
        acc: Counter = Counter()
        for hw, m in items:
            if m < 0:
                raise RepError("negative multiplicity")
            if m:
                Irrep(datum, tuple(hw))  # validates dominance
                acc[tuple(hw)] += m
        return cls(datum, tuple(sorted(acc.items())))

    @classmethod
    def irrep(cls, datum: RootDatum, hw: Sequence[int]) -> "RepSum":
        return cls.build(datum, [(tuple(hw), 1)])

    def irreps(self) -> list[Irrep]:
        return [Irrep(self.datum, hw) for hw, _ in self.terms]

    def __add__(self, other: "RepSum") -> "RepSum":
        if other.datum != self.datum:
            raise RepError("datum mismatch in direct sum")
        return RepSum.build(self.datum, list(self.terms) + list(other.terms))

    @property
    def dim(self) -> int:
        return sum(m * weyl_dim(Irrep(self.datum, hw)) for hw, m in self.terms)

    @property
    def count(self) -> int:
        return sum(m for _, m in self.terms)

    def weights(self) -> Counter:
        out: Counter = Counter()
        for hw, m in self.terms:
            for w, k in irrep_weights(self.datum, hw).items():
                out[w] += m * k
        return out

    def label_multiset(self) -> Counter:
        """Semisimple Dynkin labels of the summands, with multiplicity."""
        out: Counter = Counter()
        for hw, m in self.terms:
            out[self.datum.labels(hw)] += m
        return out

    def dual(self) -> "RepSum":
        return RepSum.build(self.datum, [(dual_weight(self.datum, hw), m) for hw, m in self.terms])


# ---------------------------------------------------------------------------
# Dimensions, duals, indicators


def weyl_dim(r: Irrep) -> int:
    d = r.datum
    labs = d.labels(r.hw)
    num = 1
    den = 1
    for coeffs in d.positive_coroot_coords:
        num *= sum(c * (a + 1) for c, a in zip(coeffs, labs))
        den *= sum(coeffs)
    assert num % den == 0
    return num // den


def dual_weight(d: RootDatum, hw: Sequence[int]) -> Vec:
    if d.ss_rank == 0:
        return tuple(-x for x in hw)
    return tuple(-x for x in d.act(_w0(d), hw))


@lru_cache(maxsize=None)
def _w0(d: RootDatum):
    return longest_element(d)


def dual_irrep(r: Irrep) -> Irrep:
    return Irrep(r.datum, dual_weight(r.datum, r.hw))


def dual_labels(d: RootDatum, labs: Sequence[int]) -> Vec:
    """Labels of the dual irrep, computed on the semisimple part only."""
    if d.ss_rank == 0:
        return ()
    w0 = _w0(d)
    cur = tuple(-x for x in labs)
    for i in reversed(w0.word):
        a = cur[i]
        cur = tuple(cur[j] - a * d.cartan[i][j] for j in range(len(cur)))
    return cur


def is_self_dual_labels(d: RootDatum, labs: Sequence[int]) -> bool:
    return dual_labels(d, labs) == tuple(labs)


def fs_indicator(r: Irrep) -> int:
    """+1 orthogonal, -1 symplectic, 0 not self-dual (semisimple labels)."""
    d = r.datum
    labs = d.labels(r.hw)
    if not is_self_dual_labels(d, labs):
        return 0
    parity = sum(a * c for a, c in zip(labs, d.two_rho_check_coords))
    return -1 if parity % 2 else 1


def fs_indicator_oracle(r: Irrep) -> int:
    """Locate the trivial summand of r (x) r in Sym^2 or Wedge^2.

    The multiplicity of the trivial rep in Sym^2 minus that in Wedge^2 equals
    the multiplicity of the trivial rep in the virtual character psi^2(chi),
    whose weights are the doubled weights of r.  Decomposing that virtual
    character by the same straightening used in Klimyk gives the indicator.
    Central characters are ignored by projecting to semisimple labels.
    """
    d = r.datum
    ss = _semisimple_model(d)
    labs = d.labels(r.hw)
    wts = _label_weights(ss, labs)
    doubled: Counter = Counter()
    for w, m in wts.items():
        doubled[tuple(2 * x for x in w)] += m
    triv = 0
    for w, m in doubled.items():
        sign, dom = _straighten_labels(ss, w)
        if sign and all(x == 0 for x in dom):
            triv += sign * m
    if triv not in (-1, 0, 1):
        raise RepError("tensor-square oracle produced an impossible value")
    return triv


# ---------------------------------------------------------------------------
# Weight multiplicities (Freudenthal per connected component)


@lru_cache(maxsize=None)
def _component_freudenthal(cartan: tuple, sym: tuple, labs: Vec) -> tuple[tuple[Vec, int], ...]:
    """Multiplicities by depth vector n (weight = lambda - sum n_i a_i)."""
    s = len(labs)
    sym_f = [Fraction(x) for x in sym]

    def form(u: Sequence[int], v: Sequence[int]) -> Fraction:
        # (sum u_i a_i, sum v_j a_j) with (a_i, a_j) = A_ij d_j
        return sum(
            (u[i] * v[j] * cartan[i][j] * sym_f[j] for i in range(s) if u[i] for j in range(s) if v[j]),
            Fraction(0),
        )

    # positive roots in simple-root coordinates
    pos = _positive_coords(cartan)
    lam_dot = [labs[i] * sym_f[i] for i in range(s)]  # (lambda, a_i)
    rho_dot = [sym_f[i] for i in range(s)]

    def lam_rho(delta: Sequence[int]) -> Fraction:
        return sum((delta[i] * (lam_dot[i] + rho_dot[i]) for i in range(s)), Fraction(0))

    def lam_with(u: Sequence[int]) -> Fraction:
        return sum((u[i] * lam_dot[i] for i in range(s)), Fraction(0))

    mult: dict[Vec, int] = {tuple([0] * s): 1}
    # labels of weight at depth n: labs - A^T n ; dominance-based pruning is not needed,
    # we walk downward level by level and stop at empty levels.
    frontier = [tuple([0] * s)]
    seen = {frontier[0]}
    level = 0
    by_level: dict[int, list[Vec]] = {0: [frontier[0]]}
    while True:
        level += 1
        cands = set()
        for n in by_level[level - 1]:
            for i in range(s):
                m = list(n)
                m[i] += 1
                cands.add(tuple(m))
        current = []
        for n in sorted(cands):
            if n in seen:
                continue
            seen.add(n)
            den = 2 * lam_rho(n) - form(n, n)
            if den == 0:
                continue
            total = Fraction(0)
            for alpha in pos:
                k = 1
                while True:
                    up = tuple(n[i] - k * alpha[i] for i in range(s))
                    if any(x < 0 for x in up):
                        break
                    mu = mult.get(up, 0)
                    if mu:
                        # (lambda - up, alpha)
                        total += mu * (lam_with(alpha) - form(up, alpha))
                    k += 1
            val = 2 * total / den
            if val.denominator != 1:
                raise RepError("non-integral multiplicity in Freudenthal recursion")
            if val > 0:
                mult[n] = int(val)
                current.append(n)
        if not current:
            break
        by_level[level] = current
    return tuple(sorted(mult.items()))


@lru_cache(maxsize=None)
def _positive_coords(cartan: tuple) -> tuple[Vec, ...]:
    from .rootdata import RootDatum as _RD, unit

    s = len(cartan)
    d = _RD(s, tuple(tuple(cartan[i]) for i in range(s)), tuple(unit(s, i) for i in range(s)))
    return d.positive_root_coords


def _sub_cartan(d: RootDatum, nodes: Sequence[int]) -> tuple:
    return tuple(tuple(d.cartan[i][j] for j in nodes) for i in nodes)


@lru_cache(maxsize=None)
def irrep_weights(d: RootDatum, hw: Vec) -> Counter:
    """Full weight multiset of the irreducible with highest weight hw."""
    labs = d.labels(hw)
    result: Counter = Counter({tuple(hw): 1})
    sym = d.symmetrizer
    for _, nodes in d.components:
        nodes = tuple(sorted(nodes))
        sub = _sub_cartan(d, nodes)
        comp = _component_freudenthal(sub, tuple(sym[i] for i in nodes), tuple(labs[i] for i in nodes))
        nxt: Counter = Counter()
        for w, m in result.items():
            for depth, k in comp:
                v = list(w)
                for t, node in enumerate(nodes):
                    if depth[t]:
                        root = d.simple_roots[node]
                        for c in range(d.rank):
                            v[c] -= depth[t] * root[c]
                nxt[tuple(v)] += m * k
        result = nxt
    return result


def weight_multiplicities(r: Irrep) -> Counter:
    return Counter(irrep_weights(r.datum, tuple(r.hw)))


# ---------------------------------------------------------------------------
# Semisimple label model (used by the oracles)


@lru_cache(maxsize=None)
def _semisimple_model(d: RootDatum) -> RootDatum:
    """Simply-connected datum with the same Cartan matrix (weights = labels)."""
    from .rootdata import unit

    s = d.ss_rank
    return RootDatum(s, tuple(tuple(d.cartan[i]) for i in range(s)), tuple(unit(s, i) for i in range(s)), label="sc")


def _label_weights(ss: RootDatum, labs: Sequence[int]) -> Counter:
    return irrep_weights(ss, tuple(labs))


def _straighten_labels(ss: RootDatum, gamma: Sequence[int]) -> tuple[int, Vec]:
    """Dot-action straightening of labels: returns (sign, dominant labels) or (0, ())."""
    g = list(gamma)
    sign = 1
    while True:
        neg = [i for i, x in enumerate(g) if x < 0]
        if not neg:
            return sign, tuple(g)
        i = neg[0]
        if g[i] == -1:
            return 0, ()
        # gamma -> s_i(gamma + rho) - rho, i.e. subtract (g_i + 1) a_i
        c = g[i] + 1
        g = [g[j] - c * ss.cartan[i][j] for j in range(len(g))]
        sign = -sign


def _straighten(d: RootDatum, gamma: Vec) -> tuple[int, Vec]:
    g = tuple(gamma)
    sign = 1
    while True:
        labs = d.labels(g)
        neg = [i for i, x in enumerate(labs) if x < 0]
        if not neg:
            return sign, g
        i = neg[0]
        if labs[i] == -1:
            return 0, ()
        g = vadd(g, d.simple_roots[i], -(labs[i] + 1))
        sign = -sign


def tensor_decompose(r1: Irrep, r2: Irrep) -> RepSum:
    """Klimyk: add the weights of the smaller factor to the other highest weight."""
    if r1.datum != r2.datum:
        raise RepError("datum mismatch in tensor product")
    d = r1.datum
    if weyl_dim(r1) * weyl_dim(r2) > KLIMYK_DIM_LIMIT * KLIMYK_DIM_LIMIT:
        raise RepError("tensor product too large")
    if weyl_dim(r1) > weyl_dim(r2):
        r1, r2 = r2, r1
    acc: Counter = Counter()
    for w, m in irrep_weights(d, r1.hw).items():
        sign, dom = _straighten(d, vadd(r2.hw, w))
        if sign:
            acc[dom] += sign * m
    if any(v < 0 for v in acc.values()):
        raise RepError("Klimyk produced a negative multiplicity")
    return RepSum.build(d, [(k, v) for k, v in acc.items() if v])


def tensor_weights(a: Counter, b: Counter) -> Counter:
    out: Counter = Counter()
    for u, m in a.items():
        for v, k in b.items():
            out[vadd(u, v)] += m * k
    return out


# ---------------------------------------------------------------------------
# Restriction and peeling


@dataclass(frozen=True)
class TorusMap:
    """T_H -> T_G: row i is the image of the i-th cocharacter basis vector of H."""

    source: RootDatum
    target: RootDatum
    rows: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.source.rank:
            raise RepError("torus map needs one row per source coordinate")
        for r in self.rows:
            if len(r) != self.target.rank:
                raise RepError("torus map row has wrong length")
            if any(not isinstance(x, int) for x in r):
                raise RepError("torus map must be integral")

    def pull(self, weight: Sequence[int]) -> Vec:
        return tuple(dot(row, weight) for row in self.rows)

    def push_cocharacter(self, x: Sequence[int]) -> Vec:
        out = [0] * self.target.rank
        for k, row in zip(x, self.rows):
            if k:
                for j in range(self.target.rank):
                    out[j] += k * row[j]
        return tuple(out)

    def compose(self, inner: "TorusMap") -> "TorusMap":
        """self o inner, where inner: T_K -> T_H and self: T_H -> T_G."""
        return TorusMap(inner.source, self.target, tuple(self.push_cocharacter(r) for r in inner.rows))

    @classmethod
    def identity(cls, d: RootDatum) -> "TorusMap":
        from .rootdata import unit

        return cls(d, d, tuple(unit(d.rank, i) for i in range(d.rank)))


def restrict_along(m: TorusMap, rho: RepSum | Counter) -> Counter:
    wts = rho.weights() if isinstance(rho, RepSum) else rho
    out: Counter = Counter()
    for w, k in wts.items():
        out[m.pull(w)] += k
    return out


def is_weyl_invariant(d: RootDatum, wts: Mapping[Vec, int]) -> bool:
    for w, k in wts.items():
        for i in range(d.ss_rank):
            if wts.get(d.reflect(w, i), 0) != k:
                return False
    return True


def decompose_weight_multiset(d: RootDatum, wts: Mapping[Vec, int]) -> RepSum:
    """Peel off highest weights until nothing is left."""
    rest = Counter({w: k for w, k in wts.items() if k})
    if any(k < 0 for k in rest.values()):
        raise RepError("negative multiplicity in input")
    if not is_weyl_invariant(d, rest):
        raise RepError("weight multiset is not Weyl-invariant")
    tr = d.two_rho_check
    found: list[tuple[Vec, int]] = []
    while rest:
        top = max(dot(w, tr) for w in rest)
        cands = sorted(w for w in rest if dot(w, tr) == top)
        dom = [w for w in cands if d.is_dominant(w)]
        if not dom:
            raise RepError("weight multiset is not a character (no dominant top weight)")
        hw = dom[0]
        k = rest[hw]
        for w, m in irrep_weights(d, hw).items():
            left = rest.get(w, 0) - k * m
            if left < 0:
                raise RepError(f"negative residual multiplicity at {w}: not a character")
            if left:
                rest[w] = left
            else:
                rest.pop(w, None)
        found.append((hw, k))
    return RepSum.build(d, found)


# ---------------------------------------------------------------------------
# Symplectic predicate and the anomaly proxy


def is_symplectic(rho: RepSum) -> bool:
    """Non-self-dual summands pair with their duals; orthogonal ones come in pairs."""
    d = rho.datum
    labs = rho.label_multiset()
    for lab, m in labs.items():
        dl = dual_labels(d, lab) if d.ss_rank else ()
        if dl != lab:
            if labs.get(dl, 0) != m:
                return False
        else:
            parity = sum(a * c for a, c in zip(lab, d.two_rho_check_coords))
            if parity % 2 == 0 and m % 2:
                return False
    return True


def anomaly_proxy(rho: RepSum) -> bool:
    """Proxy: sum over weights of <lambda, a_i^v>^2 is divisible by 4 for each simple coroot."""
    d = rho.datum
    wts = rho.weights()
    for c in d.simple_coroots:
        total = sum(k * dot(w, c) ** 2 for w, k in wts.items())
        if total % 4:
            return False
    return True


# ---------------------------------------------------------------------------
# Named representations and the rep-spec grammar
#
#   sum    := term ( "(+)" term )*
#   term   := factor ( "(x)" factor )*
#   factor := "T(" sum ")" | "(" sum ")" | name "(" ref ")" | "triv" [ "(" ref ")" ] | "1"
#   name   := std | Spin | HSpin | HSpin+ | HSpin- | Ad | triv
#           | wedge<k> | wedge0_<k> | Sym<k>      (also wedge_<k>, Sym_<k>)
#   ref    := group token such as GL4, Sp6, Spin7, E7, optionally "#k"


def _factor_for_ref(d: RootDatum, ref: str) -> Factor:
    ref = ref.strip()
    nth = 1
    if "#" in ref:
        ref, k = ref.split("#", 1)
        nth = int(k)
    _, _, size, letter = parse_factor(ref)
    hits = [f for f in d.factors if f.iso_key == (letter, size)]
    if len(hits) < nth:
        raise RepError(f"no factor matching {ref!r} (#{nth}) in {d.label}")
    return hits[nth - 1]


def _local_to_global(d: RootDatum, f: Factor, local: Sequence[int]) -> Vec:
    v = [0] * d.rank
    for c, x in zip(f.coords, local):
        v[c] = x
    return tuple(v)


def named_weight(d: RootDatum, name: str, ref: str) -> Vec:
    """Highest weight of a named irreducible on the referenced factor."""
    f = _factor_for_ref(d, ref)
    r = len(f.coords)
    fam = f.family
    loc = [0] * r
    n = f.size // 2 if fam not in ("GL",) and not fam.startswith(("E", "G2")) else f.size
    nm = name.strip()
    m_wedge = re.fullmatch(r"wedge_?(\d+)", nm)
    m_wedge0 = re.fullmatch(r"wedge0_?(\d+)", nm)
    m_sym = re.fullmatch(r"Sym_?(\d+)", nm)
    if nm in ("triv", "1"):
        pass
    elif nm == "Ad":
        sub = RootDatum(d.rank, tuple(d.simple_roots[i] for i in f.simple), tuple(d.simple_coroots[i] for i in f.simple))
        if sub.ss_rank == 0:
            raise RepError("Ad of a torus is trivial; use triv")
        return max(sub.positive_roots, key=lambda v: (dot(v, sub.two_rho_check), v))
    elif fam.startswith("E") or fam == "G2":
        if nm != "std":
            raise RepError(f"{nm} not defined for {f.name}")
        sub = RootDatum(d.rank, tuple(d.simple_roots[i] for i in f.simple), tuple(d.simple_coroots[i] for i in f.simple))
        target = {"G2": 0, "E6": 0, "E6ad": 0, "E7": 6, "E7ad": 6}[fam]
        # find the lattice vector with labels equal to the fundamental weight
        return _weight_with_labels(d, f, sub, target)
    elif nm == "std" or (m_sym is not None):
        k = int(m_sym.group(1)) if m_sym else 1
        if fam in ("SO_odd", "SO_even", "GSpin_odd", "GSpin_even") and k != 1:
            raise RepError("Sym^k only supported for GL and symplectic factors")
        loc[0] = k
        if fam == "GSO":
            loc = [k] + [0] * (r - 1)
    elif m_wedge or m_wedge0:
        k = int((m_wedge or m_wedge0).group(1))
        if fam == "GL":
            if not 0 <= k <= n:
                raise RepError("wedge degree out of range")
        elif fam in ("Sp", "GSp"):
            if not 0 <= k <= n:
                raise RepError("wedge degree out of range")
        elif m_wedge0:
            raise RepError("wedge0 is only defined for symplectic factors")
        elif fam in ("SO_odd", "GSpin_odd", "SO_even", "GSpin_even", "GSO"):
            if not 0 <= k <= n - (0 if fam in ("SO_odd", "GSpin_odd") else 2) and k not in (n,):
                raise RepError("wedge degree out of range for an orthogonal factor")
        for i in range(k):
            loc[i] = 1
        if fam == "GL" and m_wedge0:
            raise RepError("wedge0 is only defined for symplectic factors")
    elif nm in ("Spin", "HSpin", "HSpin+", "HSpin-"):
        if fam == "GSpin_odd":
            if nm != "Spin":
                raise RepError("HSpin is defined for even spin groups")
            loc[-1] = -1
        elif fam == "GSpin_even":
            if nm == "Spin":
                raise RepError("use HSpin+/HSpin- for even spin groups")
            loc[-1] = -1
            if nm == "HSpin-":
                loc[n - 1] = -1
        else:
            raise RepError(f"{nm} is not a weight of the {f.name} lattice")
    else:
        raise RepError(f"unknown representation name {nm!r}")
    w = _local_to_global(d, f, loc)
    if not d.is_dominant(w):
        w, _ = dominantize(d, w)
    return w


def _weight_with_labels(d: RootDatum, f: Factor, sub: RootDatum, node: int) -> Vec:
    from sympy import Matrix

    coroots = Matrix([[sub.simple_coroots[i][c] for c in f.coords] for i in range(sub.ss_rank)])
    target = Matrix([1 if i == node else 0 for i in range(sub.ss_rank)])
    sol = coroots.solve(target) if coroots.shape[0] == coroots.shape[1] else None
    if sol is None or any(x.q != 1 for x in sol):
        raise RepError(f"fundamental weight {node + 1} is not in the lattice of {f.name}")
    return _local_to_global(d, f, [int(x) for x in sol])


class _Parser:
    def __init__(self, d: RootDatum, text: str) -> None:
        self.d = d
        self.text = text
        self.toks = self._tokenize(text)
        self.i = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        pat = re.compile(r"\s*(\(\+\)|\(x\)|T\(|\(|\)|[A-Za-z][A-Za-z0-9_+\-#]*|1(?![0-9]))")
        out = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = pat.match(text, pos)
            if not m or m.end() == pos:
                raise RepError(f"cannot parse rep spec at {text[pos:]!r}")
            out.append(m.group(1))
            pos = m.end()
            while pos < len(text) and text[pos].isspace():
                pos += 1
        return out

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise RepError(f"expected {expect!r} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> list[Counter]:
        out = self.sum_()
        if self.peek() is not None:
            raise RepError(f"trailing input in {self.text!r}")
        return out

    # a value is a list of weight multisets, one per irreducible-or-product term
    def sum_(self) -> list[Counter]:
        parts = self.term()
        while self.peek() == "(+)":
            self.take()
            parts = parts + self.term()
        return parts

    def term(self) -> list[Counter]:
        acc = self.factor()
        while self.peek() == "(x)":
            self.take()
            rhs = self.factor()
            acc = [tensor_weights(a, b) for a in acc for b in rhs]
        return acc

    def factor(self) -> list[Counter]:
        tok = self.peek()
        if tok == "T(":
            self.take()
            inner = self.sum_()
            self.take(")")
            duals = [Counter({tuple(-x for x in w): k for w, k in c.items()}) for c in inner]
            return inner + duals
        if tok == "(":
            self.take()
            inner = self.sum_()
            self.take(")")
            return inner
        if tok in ("triv", "1"):
            self.take()
            if tok == "triv" and self.peek() == "(":
                self.take()
                _factor_for_ref(self.d, self.take())
                self.take(")")
            return [Counter({tuple([0] * self.d.rank): 1})]
        if tok is None:
            raise RepError(f"unexpected end of {self.text!r}")
        name = self.take()
        self.take("(")
        ref = self.take()
        self.take(")")
        f = _factor_for_ref(self.d, ref)
        if name == "std" and f.family == "SO_even" and f.size == 2:
            # SO2 is a torus: its standard representation is two characters
            w = _local_to_global(self.d, f, [1])
            return [Counter({w: 1, tuple(-x for x in w): 1})]
        hw = named_weight(self.d, name, ref)
        return [Counter(irrep_weights(self.d, hw))]


def parse_rep(d: RootDatum, spec: str) -> RepSum:
    """Parse a rep spec into a RepSum on d (products across factors are exact)."""
    if spec.strip() in ("0", ""):
        return RepSum(d, ())
    parts = _Parser(d, spec).parse()
    total: Counter = Counter()
    for c in parts:
        total.update(c)
    return decompose_weight_multiset(d, total)


def named_rep(d: RootDatum, spec: str) -> RepSum:
    return parse_rep(d, spec)


__all__ = [
    "Irrep",
    "RepError",
    "RepSum",
    "TorusMap",
    "anomaly_proxy",
    "decompose_weight_multiset",
    "dual_irrep",
    "fs_indicator",
    "fs_indicator_oracle",
    "irrep_weights",
    "is_symplectic",
    "named_rep",
    "parse_rep",
    "restrict_along",
    "tensor_decompose",
    "weight_multiplicities",
    "weyl_dim",
]
