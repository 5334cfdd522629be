"""Exact root data on coordinate lattices.

Every group is realised on a character lattice ``Z^r``. Simple roots live in
``Z^r`` and simple coroots live in the dual lattice, also written as ``Z^r``;
the perfect pairing between them is the dot product. Weyl groups are handled
through reduced words and orbit walks only.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

Vec = tuple[int, ...]


class RootDatumError(ValueError):
    """Raised for unsupported type labels or inconsistent lattice data."""


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence[int], v: Sequence[int], k: int = 1) -> Vec:
    return tuple(a + k * b for a, b in zip(u, v))


def unit(r: int, i: int, k: int = 1) -> Vec:
    return tuple(k if j == i else 0 for j in range(r))


# Bourbaki Cartan matrices for the exceptional types; A[i][j] = <a_i, a_j^v>.
_G2 = ((2, -1), (-3, 2))


def _simply_laced(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i][j] = a[j][i] = -1
    return tuple(tuple(r) for r in a)


_E6 = _simply_laced(6, [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)])
_E7 = _simply_laced(7, [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)])
_EXCEPTIONAL = {"G2": _G2, "E6": _E6, "E7": _E7}


# ---------------------------------------------------------------------------
# Factors


@dataclass(frozen=True)
class Factor:
    """One named factor of a product group, owning a block of coordinates."""

    name: str
    family: str  # model family, e.g. "GL", "GSp", "GSpin_odd", "E7ad"
    letter: str  # isogeny-class letter used for rep-spec lookup: A, B, C, D, E, G, T
    size: int  # matrix size (or rank for exceptional groups)
    coords: tuple[int, ...]
    simple: tuple[int, ...]  # indices into the ambient simple-root list

    @property
    def iso_key(self) -> tuple[str, int]:
        return (self.letter, self.size)


_FACTOR_RE = re.compile(r"^(GL|SL|PGL|Sp|PSp|GSp|SO|PSO|GSO|PGSO|Spin|GSpin|E6ad|E7ad|E6|E7|GE6|G2)(\d*)$")

# family -> dual family (dual datum swaps roots and coroots)
_DUAL_FAMILY = {
    "GL": "GL",
    "Sp": "SO_odd",
    "SO_odd": "Sp",
    "GSp": "GSpin_odd",
    "GSpin_odd": "GSp",
    "SO_even": "SO_even",
    "GSO": "GSpin_even",
    "GSpin_even": "GSO",
    "G2": "G2",
    "E6": "E6ad",
    "E6ad": "E6",
    "E7": "E7ad",
    "E7ad": "E7",
}


def _local_factor(family: str, size: int) -> tuple[int, list[Vec], list[Vec]]:
    """Return (rank, simple roots, simple coroots) in local coordinates."""
    if family == "GL":
        n = size
        roots = [vadd(unit(n, i), unit(n, i + 1), -1) for i in range(n - 1)]
        return n, roots, list(roots)
    if family in ("Sp", "SO_odd", "SO_even"):
        n = size // 2
        roots = [vadd(unit(n, i), unit(n, i + 1), -1) for i in range(n - 1)]
        coroots = list(roots)
        if family == "Sp":
            roots.append(unit(n, n - 1, 2))
            coroots.append(unit(n, n - 1))
        elif family == "SO_odd":
            roots.append(unit(n, n - 1))
            coroots.append(unit(n, n - 1, 2))
        elif n >= 2:
            last = vadd(unit(n, n - 2), unit(n, n - 1))
            roots.append(last)
            coroots.append(last)
        return n, roots, coroots
    if family in ("GSp", "GSpin_odd", "GSO", "GSpin_even"):
        # coordinates x_1..x_n followed by the similitude coordinate x_0
        n = size // 2
        r = n + 1
        roots = [vadd(unit(r, i), unit(r, i + 1), -1) for i in range(n - 1)]
        coroots = list(roots)
        e0 = unit(r, n)
        if family == "GSp":
            roots.append(vadd(unit(r, n - 1, 2), e0, -1))
            coroots.append(unit(r, n - 1))
        elif family == "GSpin_odd":
            roots.append(unit(r, n - 1))
            coroots.append(vadd(unit(r, n - 1, 2), e0, -1))
        elif n >= 2:
            pair = vadd(unit(r, n - 2), unit(r, n - 1))
            if family == "GSO":
                roots.append(vadd(pair, e0, -1))
                coroots.append(pair)
            else:
                roots.append(pair)
                coroots.append(vadd(pair, e0, -1))
        elif family == "GSO":
            pass
        return r, roots, coroots
    if family in ("G2", "E6", "E7"):
        a = _EXCEPTIONAL[family]
        n = len(a)
        return n, [tuple(a[i]) for i in range(n)], [unit(n, i) for i in range(n)]
    if family in ("E6ad", "E7ad"):
        a = _EXCEPTIONAL[family[:2]]
        n = len(a)
        return n, [unit(n, i) for i in range(n)], [tuple(a[j][i] for j in range(n)) for i in range(n)]
    raise RootDatumError(f"unsupported family {family!r}")


def parse_factor(token: str) -> tuple[str, str, int, str]:
    """Map a factor token like ``GSp6`` to (display name, family, size, letter)."""
    m = _FACTOR_RE.match(token.strip())
    if not m:
        raise RootDatumError(f"unsupported type label {token!r}")
    head, num = m.group(1), m.group(2)
    if head in ("E6", "E7", "E6ad", "E7ad", "GE6", "G2"):
        if num:
            raise RootDatumError(f"unsupported type label {token!r}")
        family = {"GE6": "E6ad"}.get(head, head)
        size = int(family[1])
        letter = family[0]
        return token.strip(), family, size, letter
    if not num:
        raise RootDatumError(f"missing size in {token!r}")
    size = int(num)
    if size < 1:
        raise RootDatumError(f"bad size in {token!r}")
    if head in ("GL", "SL", "PGL"):
        return token, "GL", size, "A" if size > 1 else "T"
    if head in ("Sp", "PSp", "GSp"):
        if size % 2:
            raise RootDatumError(f"symplectic groups need even size: {token!r}")
        return token, ("Sp" if head == "Sp" else "GSp"), size, "C"
    odd = size % 2 == 1
    if head == "SO":
        return token, ("SO_odd" if odd else "SO_even"), size, "B" if odd else "D"
    if head in ("GSO", "PGSO", "PSO"):
        if odd:
            raise RootDatumError(f"{head} only modelled in even size: {token!r}")
        return token, "GSO", size, "D"
    if head in ("Spin", "GSpin"):
        return token, ("GSpin_odd" if odd else "GSpin_even"), size, "B" if odd else "D"
    raise RootDatumError(f"unsupported type label {token!r}")


_DUAL_NAME = {
    "GL": lambda s: f"GL{s}",
    "Sp": lambda s: f"SO{s + 1}",
    "SO_odd": lambda s: f"Sp{s - 1}",
    "GSp": lambda s: f"GSpin{s + 1}",
    "GSpin_odd": lambda s: f"GSp{s - 1}",
    "SO_even": lambda s: f"SO{s}",
    "GSO": lambda s: f"GSpin{s}",
    "GSpin_even": lambda s: f"GSO{s}",
    "G2": lambda s: "G2",
    "E6": lambda s: "E6ad",
    "E6ad": lambda s: "E6",
    "E7": lambda s: "E7ad",
    "E7ad": lambda s: "E7",
}


# ---------------------------------------------------------------------------
# Cartan-type classification


def _component_type(idx: list[int], cartan: Sequence[Sequence[int]]) -> tuple[str, list[int]]:
    """Classify a connected Dynkin diagram; return (label, Bourbaki-ordered nodes)."""
    n = len(idx)
    nbrs = {i: [j for j in idx if j != i and cartan[i][j] != 0] for i in idx}
    if n == 1:
        return "A1", list(idx)
    triple = [(i, j) for i in idx for j in nbrs[i] if cartan[i][j] == -3]
    if triple:
        i, j = triple[0]
        # a_ij = <a_i, a_j^v> = -3 means a_i long, a_j short; alpha_1 is short
        return "G2", [j, i]
    double = [(i, j) for i in idx for j in nbrs[i] if cartan[i][j] == -2]
    ends = sorted(i for i in idx if len(nbrs[i]) == 1)
    if double:
        if n > 2 and len(ends) != 2:
            raise RootDatumError("F4-type or non-path double-bond diagram is unsupported")
        i, j = double[0]
        # <a_i, a_j^v> = -2: a_i long, a_j short
        long_, short = i, j
        if n == 2:
            return "B2", [long_, short]
        # the double bond sits at the end of a path
        end_node = long_ if len(nbrs[long_]) == 1 else short
        other = long_ if end_node == short else short
        path = _walk_path(end_node, nbrs)
        path.reverse()  # now ends at end_node
        if end_node == short:
            return f"B{n}", path
        if n == 2:
            return "B2", [other, end_node]
        return f"C{n}", path
    branch = [i for i in idx if len(nbrs[i]) == 3]
    if not branch:
        path = _walk_path(ends[0], nbrs)
        return f"A{n}", path
    b = branch[0]
    arms = []
    for start in sorted(nbrs[b]):
        arm = [start]
        prev, cur = b, start
        while True:
            nxt = [k for k in nbrs[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            arm.append(cur)
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), -a[0]))
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        # D_n: long arm reversed, then branch, then the two short arms
        long_arm = list(reversed(arms[2]))
        return f"D{n}", long_arm + [b] + sorted([arms[0][0], arms[1][0]])
    if lens == [1, 2, 2]:
        a1, a2, a3 = arms
        return "E6", [a2[1], a1[0], a2[0], b, a3[0], a3[1]]
    if lens == [1, 2, 3]:
        a1, a2, a3 = arms
        return "E7", [a2[1], a1[0], a2[0], b, a3[0], a3[1], a3[2]]
    raise RootDatumError(f"unsupported diagram with arms {lens}")


def _walk_path(start: int, nbrs: dict[int, list[int]]) -> list[int]:
    path = [start]
    prev = None
    cur = start
    while True:
        nxt = [k for k in nbrs[cur] if k != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


_DUAL_LETTER = {"A": "A", "B": "C", "C": "B", "D": "D", "E": "E", "G": "G"}


def canonical_type(label: str) -> str:
    """Normalise low-rank coincidences: B1=C1=A1, C2=B2, D2=A1xA1, D3=A3."""
    if not label or label in ("0", "T"):
        return ""
    parts = []
    for p in re.split(r"\s*x\s*", label.strip()):
        m = re.match(r"^\(?([ABCDEG])(\d+)\)?(?:\^(\d+))?$", p)
        if not m:
            raise RootDatumError(f"bad type label {label!r}")
        letter, n, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if n == 0:
            continue
        for _ in range(power):
            if letter in "BC" and n == 1:
                parts.append("A1")
            elif letter == "C" and n == 2:
                parts.append("B2")
            elif letter == "D" and n == 1:
                continue
            elif letter == "D" and n == 2:
                parts += ["A1", "A1"]
            elif letter == "D" and n == 3:
                parts.append("A3")
            else:
                parts.append(f"{letter}{n}")
    return "x".join(sorted(parts, key=_type_sort_key))


def _type_sort_key(t: str) -> tuple[str, int]:
    return (t[0], int(t[1:]))


def dual_type(label: str) -> str:
    """Langlands dual of a (product) type label, canonicalised."""
    canon = canonical_type(label)
    if not canon:
        return ""
    out = []
    for p in canon.split("x"):
        out.append(_DUAL_LETTER[p[0]] + p[1:])
    return canonical_type("x".join(out))


# ---------------------------------------------------------------------------
# The root datum


@dataclass(frozen=True)
class RootDatum:
    """A (product) root datum on Z^rank with dot-product pairing."""

    rank: int
    simple_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    factors: tuple[Factor, ...] = ()
    constraint: str | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if len(self.simple_roots) != len(self.simple_coroots):
            raise RootDatumError("roots and coroots differ in number")
        for v in self.simple_roots + self.simple_coroots:
            if len(v) != self.rank:
                raise RootDatumError("vector of wrong length")
        for i in range(len(self.simple_roots)):
            if dot(self.simple_roots[i], self.simple_coroots[i]) != 2:
                raise RootDatumError("<a_i, a_i^v> must be 2")

    # -- basic invariants -------------------------------------------------
    @property
    def ss_rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def cartan(self) -> tuple[tuple[int, ...], ...]:
        s = self.ss_rank
        return tuple(
            tuple(dot(self.simple_roots[i], self.simple_coroots[j]) for j in range(s)) for i in range(s)
        )

    @cached_property
    def components(self) -> tuple[tuple[str, tuple[int, ...]], ...]:
        """Connected components as (type label, Bourbaki-ordered simple indices)."""
        s = self.ss_rank
        seen: set[int] = set()
        comps = []
        for i in range(s):
            if i in seen:
                continue
            comp = []
            queue = deque([i])
            seen.add(i)
            while queue:
                k = queue.popleft()
                comp.append(k)
                for j in range(s):
                    if j not in seen and (self.cartan[k][j] != 0 or self.cartan[j][k] != 0):
                        seen.add(j)
                        queue.append(j)
            comp.sort()
            label, order = _component_type(comp, self.cartan)
            comps.append((label, tuple(order)))
        return tuple(comps)

    @property
    def type_label(self) -> str:
        return canonical_type("x".join(t for t, _ in self.components))

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """d_i = (a_i, a_i)/2 with A_ij d_j = A_ji d_i, normalised per component."""
        s = self.ss_rank
        d: list[Fraction | None] = [None] * s
        for _, comp in self.components:
            shorts = []
            d[comp[0]] = Fraction(1)
            queue = deque([comp[0]])
            while queue:
                i = queue.popleft()
                for j in comp:
                    if d[j] is None and self.cartan[i][j] != 0:
                        d[j] = d[i] * self.cartan[j][i] / self.cartan[i][j]
                        queue.append(j)
            shorts = min(d[j] for j in comp)  # type: ignore[type-var]
            for j in comp:
                d[j] = d[j] / shorts  # type: ignore[operator]
        return tuple(d)  # type: ignore[arg-type]

    # -- positive roots ---------------------------------------------------
    @cached_property
    def _positive_system(self) -> tuple[tuple[Vec, Vec], ...]:
        """Positive (root, coroot) pairs in simple-root / simple-coroot coordinates."""
        s = self.ss_rank
        a = self.cartan
        start = [(unit(s, i), unit(s, i)) for i in range(s)]
        seen = {p[0]: p[1] for p in start}
        queue = deque(start)
        while queue:
            c, d = queue.popleft()
            for i in range(s):
                if c == unit(s, i):
                    continue
                # <beta, a_i^v> and <a_i, beta^v>
                pair_root = sum(c[j] * a[j][i] for j in range(s))
                pair_coroot = sum(d[j] * a[i][j] for j in range(s))
                c2 = vadd(c, unit(s, i), -pair_root)
                d2 = vadd(d, unit(s, i), -pair_coroot)
                if all(x >= 0 for x in c2) and c2 not in seen:
                    seen[c2] = d2
                    queue.append((c2, d2))
        out = sorted(seen.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        return tuple(out)

    @property
    def positive_root_coords(self) -> tuple[Vec, ...]:
        return tuple(c for c, _ in self._positive_system)

    @property
    def positive_coroot_coords(self) -> tuple[Vec, ...]:
        return tuple(d for _, d in self._positive_system)

    @cached_property
    def positive_roots(self) -> tuple[Vec, ...]:
        return tuple(self._combine(self.simple_roots, c) for c in self.positive_root_coords)

    @cached_property
    def positive_coroots(self) -> tuple[Vec, ...]:
        return tuple(self._combine(self.simple_coroots, d) for d in self.positive_coroot_coords)

    def _combine(self, basis: Sequence[Vec], coeffs: Sequence[int]) -> Vec:
        out = [0] * self.rank
        for k, b in zip(coeffs, basis):
            if k:
                for t in range(self.rank):
                    out[t] += k * b[t]
        return tuple(out)

    @property
    def roots(self) -> tuple[Vec, ...]:
        return self.positive_roots + tuple(tuple(-x for x in r) for r in self.positive_roots)

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @cached_property
    def two_rho_check_coords(self) -> Vec:
        """2 rho^v written in the simple-coroot basis (integers)."""
        s = self.ss_rank
        out = [0] * s
        for d in self.positive_coroot_coords:
            for i in range(s):
                out[i] += d[i]
        return tuple(out)

    @property
    def two_rho_check(self) -> Vec:
        return self._combine(self.simple_coroots, self.two_rho_check_coords)

    # -- weights ------------------------------------------------------------
    def labels(self, weight: Sequence[int]) -> Vec:
        """Dynkin labels <weight, a_i^v>."""
        if len(weight) != self.rank:
            raise RootDatumError(f"weight {tuple(weight)} has length {len(weight)}, expected {self.rank}")
        return tuple(dot(weight, c) for c in self.simple_coroots)

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(x >= 0 for x in self.labels(weight))

    def reflect(self, weight: Sequence[int], i: int) -> Vec:
        return vadd(weight, self.simple_roots[i], -dot(weight, self.simple_coroots[i]))

    def reflect_coweight(self, x: Sequence[int], i: int) -> Vec:
        return vadd(x, self.simple_coroots[i], -dot(self.simple_roots[i], x))

    def act(self, word: "WeylElement", weight: Sequence[int]) -> Vec:
        w = tuple(weight)
        for i in reversed(word.word):
            w = self.reflect(w, i)
        return w

    def act_coweight(self, word: "WeylElement", x: Sequence[int]) -> Vec:
        w = tuple(x)
        for i in reversed(word.word):
            w = self.reflect_coweight(w, i)
        return w

    # -- derived data --------------------------------------------------------
    def dual(self) -> "RootDatum":
        """Langlands dual: swap roots and coroots on the same coordinates."""
        factors = tuple(
            Factor(
                name=_DUAL_NAME[f.family](f.size),
                family=_DUAL_FAMILY[f.family],
                letter={"B": "C", "C": "B"}.get(f.letter, f.letter),
                size=_dual_size(f),
                coords=f.coords,
                simple=f.simple,
            )
            for f in self.factors
        )
        return RootDatum(
            rank=self.rank,
            simple_roots=self.simple_coroots,
            simple_coroots=self.simple_roots,
            factors=factors,
            constraint=self.constraint,
            label=" x ".join(f.name for f in factors),
        )

    def subdatum(self, indices: Iterable[int]) -> "RootDatum":
        idx = sorted(set(indices))
        for i in idx:
            if not 0 <= i < self.ss_rank:
                raise RootDatumError(f"invalid simple-root index {i}")
        return RootDatum(
            rank=self.rank,
            simple_roots=tuple(self.simple_roots[i] for i in idx),
            simple_coroots=tuple(self.simple_coroots[i] for i in idx),
            label=f"Levi{tuple(i + 1 for i in idx)} of {self.label}",
        )

    def factor_for_coord(self, k: int) -> Factor:
        for f in self.factors:
            if k in f.coords:
                return f
        raise RootDatumError(f"coordinate {k} not owned by a factor")

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"RootDatum({self.label or self.type_label!r}, rank={self.rank})"


def _dual_size(f: Factor) -> int:
    return {
        "Sp": f.size + 1,
        "SO_odd": f.size - 1,
        "GSp": f.size + 1,
        "GSpin_odd": f.size - 1,
    }.get(f.family, f.size)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a word; ``(i1, ..., ik)`` means s_i1 ... s_ik."""

    word: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElement":
        return WeylElement(tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word)


@dataclass(frozen=True)
class LeviLabel:
    """A subset of simple-root indices (0-based); empty means the trivial orbit."""

    indices: tuple[int, ...] = ()

    @classmethod
    def of(cls, indices: Iterable[int]) -> "LeviLabel":
        return cls(tuple(sorted(set(indices))))


# ---------------------------------------------------------------------------
# Construction


def product(factor_specs: Sequence[tuple[str, str, int, str]], constraint: str | None = None) -> RootDatum:
    roots: list[Vec] = []
    coroots: list[Vec] = []
    factors: list[Factor] = []
    blocks = []
    total = 0
    for name, family, size, letter in factor_specs:
        r, sr, sc = _local_factor(family, size)
        blocks.append((name, family, size, letter, r, sr, sc, total))
        total += r
    for name, family, size, letter, r, sr, sc, off in blocks:
        first = len(roots)
        for v in sr:
            roots.append(tuple([0] * off + list(v) + [0] * (total - off - r)))
        for v in sc:
            coroots.append(tuple([0] * off + list(v) + [0] * (total - off - r)))
        factors.append(
            Factor(name, family, letter, size, tuple(range(off, off + r)), tuple(range(first, len(roots))))
        )
    label = " x ".join(f.name for f in factors)
    return RootDatum(total, tuple(roots), tuple(coroots), tuple(factors), constraint, label)


def build_root_datum(spec: str) -> RootDatum:
    """Build a datum from a spec such as ``"GSp6 x GSpin7"``, ``"GL2^3"`` or
    ``"S(GL2^3)"`` (the ``S(...)`` wrapper records a determinant constraint).

    Appending ``", simply-connected"`` or ``", adjoint"`` to a single exceptional
    or rank-one type selects that lattice.
    """
    text = spec.strip()
    lattice = None
    if "," in text:
        text, lattice = (t.strip() for t in text.split(",", 1))
    constraint = None
    m = re.match(r"^S\((.*)\)$", text)
    if m:
        text = m.group(1)
        constraint = "det=1"
    specs = []
    for tok in re.split(r"\s*(?:x|×)\s*", text):
        if not tok:
            raise RootDatumError(f"empty factor in {spec!r}")
        power = 1
        pm = re.match(r"^(.*)\^(\d+)$", tok)
        if pm:
            tok, power = pm.group(1), int(pm.group(2))
        tok = _apply_lattice(tok, lattice)
        parsed = parse_factor(tok)
        specs.extend([parsed] * power)
    names = [s[0] for s in specs]
    if len(set(names)) != len(names):
        counts: dict[str, int] = {}
        renamed = []
        for s in specs:
            counts[s[0]] = counts.get(s[0], 0) + 1
            renamed.append((f"{s[0]}#{counts[s[0]]}",) + s[1:])
        specs = renamed
    return product(specs, constraint)


def _apply_lattice(tok: str, lattice: str | None) -> str:
    if lattice is None:
        return tok
    lat = lattice.lower()
    if lat not in ("simply-connected", "adjoint"):
        raise RootDatumError(f"unknown lattice choice {lattice!r}")
    if tok in ("E6", "E7") and lat == "adjoint":
        return tok + "ad"
    if tok == "A1":
        # rank one: alpha = 2*omega (sc) or omega = alpha/2 not in the lattice (adjoint)
        return "Sp2" if lat == "simply-connected" else "SO3"
    if tok.startswith("A") and tok[1:].isdigit():
        n = int(tok[1:]) + 1
        return f"SL{n}" if lat == "simply-connected" else f"PGL{n}"
    return tok


def from_cartan(cartan: Sequence[Sequence[int]], lattice: str = "simply-connected") -> RootDatum:
    """Datum of a Cartan matrix on the weight lattice (sc) or the root lattice (adjoint)."""
    n = len(cartan)
    if lattice == "simply-connected":
        roots = tuple(tuple(cartan[i]) for i in range(n))
        coroots = tuple(unit(n, i) for i in range(n))
    elif lattice == "adjoint":
        roots = tuple(unit(n, i) for i in range(n))
        coroots = tuple(tuple(cartan[j][i] for j in range(n)) for i in range(n))
    else:
        raise RootDatumError(f"unknown lattice {lattice!r}")
    return RootDatum(n, roots, coroots, label=f"cartan/{lattice}")


def check_perfect_pairing(char_basis: Sequence[Sequence[int]], cochar_basis: Sequence[Sequence[int]]) -> bool:
    """An explicit basis pair is perfect iff the Gram matrix is unimodular."""
    import sympy

    gram = sympy.Matrix([[dot(u, v) for v in cochar_basis] for u in char_basis])
    return gram.shape[0] == gram.shape[1] and abs(gram.det()) == 1


# ---------------------------------------------------------------------------
# Weyl-group operations


def dominantize(d: RootDatum, weight: Sequence[int]) -> tuple[Vec, WeylElement]:
    """Return (dominant weight, w) with w(weight) dominant."""
    w = tuple(weight)
    applied: list[int] = []
    while True:
        labs = d.labels(w)
        neg = [i for i, x in enumerate(labs) if x < 0]
        if not neg:
            return w, WeylElement(tuple(reversed(applied)))
        i = neg[0]
        w = d.reflect(w, i)
        applied.append(i)


def dominantize_coweight(d: RootDatum, x: Sequence[int]) -> tuple[Vec, WeylElement]:
    w = tuple(x)
    applied: list[int] = []
    while True:
        neg = [i for i, a in enumerate(d.simple_roots) if dot(a, w) < 0]
        if not neg:
            return w, WeylElement(tuple(reversed(applied)))
        w = d.reflect_coweight(w, neg[0])
        applied.append(neg[0])


def _label_reflect(cartan: Sequence[Sequence[int]], labs: Sequence[int], i: int) -> Vec:
    ai = labs[i]
    return tuple(labs[j] - ai * cartan[i][j] for j in range(len(labs)))


def longest_element(d: RootDatum) -> WeylElement:
    """w_0, found by walking -rho (as Dynkin labels) to the dominant chamber."""
    if d.ss_rank == 0:
        raise RootDatumError("longest element needs a nonempty semisimple part")
    labs: Vec = tuple(-1 for _ in range(d.ss_rank))
    applied: list[int] = []
    while True:
        neg = [i for i, x in enumerate(labs) if x < 0]
        if not neg:
            return WeylElement(tuple(reversed(applied)))
        labs = _label_reflect(d.cartan, labs, neg[0])
        applied.append(neg[0])


def word_length(d: RootDatum, w: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    s = d.ss_rank
    count = 0
    for c in d.positive_root_coords:
        v = c
        for i in reversed(w.word):
            pair = sum(v[j] * d.cartan[j][i] for j in range(s))
            v = vadd(v, unit(s, i), -pair)
        if all(x <= 0 for x in v):
            count += 1
    return count


def weyl_orbit(d: RootDatum, weight: Sequence[int], limit: int = 200000) -> set[Vec]:
    start = tuple(weight)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for i in range(d.ss_rank):
            v = d.reflect(w, i)
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise RootDatumError("orbit exceeds limit")
                queue.append(v)
    return seen


def minus_w0(d: RootDatum, weight: Sequence[int]) -> Vec:
    w0 = longest_element(d) if d.ss_rank else WeylElement()
    return tuple(-x for x in d.act(w0, weight))


def levi_subdatum(d: RootDatum, levi: LeviLabel) -> tuple[RootDatum, "IdentityMap"]:
    sub = d.subdatum(levi.indices)
    return sub, IdentityMap(d.rank)


@dataclass(frozen=True)
class IdentityMap:
    rank: int

    @property
    def matrix(self) -> tuple[Vec, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))


def rho_check_of(d: RootDatum, indices: Iterable[int]) -> Vec:
    """2 rho^v of the Levi on the given simple roots, as a cocharacter of d."""
    sub = d.subdatum(indices)
    if sub.ss_rank == 0:
        return tuple(0 for _ in range(d.rank))
    return sub.two_rho_check


def zero_level_subdatum(d: RootDatum, h: Sequence[int]) -> RootDatum:
    """The Levi M = Z_G(h): roots with <alpha, h> = 0, simple system from G's positivity."""
    pos = [(r, c) for r, c in zip(d.positive_roots, d.positive_coroots) if dot(r, h) == 0]
    rootset = {r for r, _ in pos}
    simple = []
    for r, c in pos:
        decomposable = False
        for r2, _ in pos:
            diff = vadd(r, r2, -1)
            if diff in rootset:
                decomposable = True
                break
        if not decomposable:
            simple.append((r, c))
    return RootDatum(
        rank=d.rank,
        simple_roots=tuple(r for r, _ in simple),
        simple_coroots=tuple(c for _, c in simple),
        label=f"Z({d.label})",
    )


__all__ = [
    "Factor",
    "LeviLabel",
    "RootDatum",
    "RootDatumError",
    "WeylElement",
    "build_root_datum",
    "canonical_type",
    "dominantize",
    "dominantize_coweight",
    "dual_type",
    "from_cartan",
    "levi_subdatum",
    "longest_element",
    "minus_w0",
    "rho_check_of",
    "weyl_orbit",
    "word_length",
    "zero_level_subdatum",
]
