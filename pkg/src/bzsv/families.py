"""Parametrised row builders for the shipped corpus.

Every table row is a function of its parameters returning a :class:`RowSpec`.
The JSON files under ``bzsv/data`` are generated from these builders at the
default parameters; reductions that land on another parameter value of a
reductive family are re-instantiated from here.

Torus maps are written as *pull expressions*: for each character coordinate of
G (named by the factor letter ``a, b, c, ...`` and a local index, with ``0`` the
similitude coordinate of GSp/GSO/GSpin factors) a linear combination of the
character coordinates of H (factor letters ``A, B, C, ...``). Coordinates left
out pull back to zero. The matrix stored in JSON has one row per H coordinate,
the image of that cocharacter in the cocharacter lattice of G.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable

from .rootdata import RootDatum, build_root_datum, dot

SIMILITUDE_FAMILIES = ("GSp", "GSpin_odd", "GSO", "GSpin_even")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class RowSpec:
    table: str
    row: int
    params: dict
    G: str
    H: str
    rho_H: str
    rho_hat: str
    iota: tuple[int, ...] = ()
    pull: dict | None = None
    matrix: tuple[tuple[int, ...], ...] | None = None
    G_hat: str | None = None
    knop: str | None = None
    W_V: str | None = None
    l_hat: str | None = None
    reduces_to: dict | None = None
    embedding: str = "stated"
    pairing: str | None = None
    notes: str = ""

    @property
    def key(self) -> str:
        return f"{self.table}:{self.row}"

    def torus_rows(self) -> tuple[tuple[int, ...], ...]:
        if self.matrix is not None:
            return self.matrix
        G, H = build_root_datum(self.G), build_root_datum(self.H)
        return pull_to_rows(G, H, self.pull or {})


# ---------------------------------------------------------------------------
# Coordinate names and pull expressions


def coordinate_names(d: RootDatum, upper: bool) -> dict[str, int]:
    out = {}
    base = ord("A") if upper else ord("a")
    for k, f in enumerate(d.factors):
        letter = chr(base + k)
        if f.family in SIMILITUDE_FAMILIES:
            n = len(f.coords) - 1
            for i in range(n):
                out[f"{letter}{i + 1}"] = f.coords[i]
            out[f"{letter}0"] = f.coords[n]
        else:
            for i, c in enumerate(f.coords):
                out[f"{letter}{i + 1}"] = c
    return out


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Z]\d+)")


def parse_linear(expr: str, names: dict[str, int], size: int) -> list[int]:
    vec = [0] * size
    text = expr.replace(" ", "")
    if text in ("", "0"):
        return vec
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.start() != pos:
            raise FamilyError(f"cannot parse {expr!r} at {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        if m.group(3) not in names:
            raise FamilyError(f"unknown H coordinate {m.group(3)!r}")
        vec[names[m.group(3)]] += sign * coef
        pos = m.end()
    return vec


def pull_to_rows(G: RootDatum, H: RootDatum, pull: dict[str, str]) -> tuple[tuple[int, ...], ...]:
    gnames = coordinate_names(G, upper=False)
    hnames = coordinate_names(H, upper=True)
    rows = [[0] * G.rank for _ in range(H.rank)]
    for gname, expr in pull.items():
        if gname not in gnames:
            raise FamilyError(f"unknown G coordinate {gname!r}")
        col = gnames[gname]
        for i, c in enumerate(parse_linear(expr, hnames, H.rank)):
            rows[i][col] += c
    return tuple(tuple(r) for r in rows)


def iota_of(G: str, factor: int, local: list[int]) -> tuple[int, ...]:
    d = build_root_datum(G)
    f = d.factors[factor]
    return tuple(f.simple[i] for i in local)


def same(letter_g: str, letter_h: str, locals_: list[int | str]) -> dict[str, str]:
    """Identity pull on matching local coordinates."""
    return {f"{letter_g}{i}": f"{letter_h}{i}" for i in locals_}


def _red(table: str, row: int, **params) -> dict:
    return {"table": table, "row": row, "params": params}


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _A(n: int) -> str:
    return f"A{n}" if n > 0 else "0"


def _prod(*types: str) -> str:
    parts = [t for t in types if t not in ("", "0")]
    return "x".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Table red1: reductive strongly tempered quadruples 1


def red1_1(m: int = 2) -> RowSpec:
    G = f"SO{2 * m + 1} x SO{2 * m}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "A", list(range(1, m + 1)))
    return RowSpec("red1", 1, {"m": m}, G, f"SO{2 * m}", "0", f"std(Sp{2 * m})(x)std(SO{2 * m})",
                   pull=pull, knop="(1.1), p=2m", W_V=f"D{m}", l_hat="0")


def red1_2(m: int = 2) -> RowSpec:
    G = f"SO{2 * m + 2} x SO{2 * m + 1}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "A", list(range(1, m + 1)))
    return RowSpec("red1", 2, {"m": m}, G, f"SO{2 * m + 1}", "0", f"std(Sp{2 * m})(x)std(SO{2 * m + 2})",
                   pull=pull, knop="(1.1), p=2m+2", W_V=f"C{m}", l_hat="0")


def red1_3() -> RowSpec:
    G = "GSp6 x GSpin7"
    pull = same("a", "A", [1, 2, 3, 0]) | same("b", "B", [1, 2, 3, 0])
    return RowSpec("red1", 3, {}, G, "S(GSp6 x GSpin7)", "std(Sp6)(x)Spin(Spin7)", "std(Sp6)(x)Spin(Spin7)",
                   pull=pull, knop="(1.3), m=3", W_V="C3xB3", l_hat="0")


def red1_4() -> RowSpec:
    pull = same("a", "A", [1, 2, 3, 0]) | same("b", "B", [1, 2, 3, 4, 0])
    return RowSpec("red1", 4, {}, "GSp6 x GSpin9", "S(GSp6 x GSpin8)", "std(Sp6)(x)HSpin+(Spin8)",
                   "std(Sp8)(x)Spin(Spin7)", pull=pull, knop="(1.3), m=4", W_V="D4xB3", l_hat="0")


def red1_5(n: int = 3) -> RowSpec:
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "A", list(range(1, n + 1)))
    return RowSpec("red1", 5, {"n": n}, f"GL{n} x GL{n}", f"GL{n}", f"T(std(GL{n}))",
                   f"T(std(GL{n}#1)(x)std(GL{n}#2))", pull=pull, knop="(2.1), m=n", W_V=_A(n - 1), l_hat="0")


def red1_6(n: int = 2) -> RowSpec:
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "A", list(range(1, n + 1)))
    return RowSpec("red1", 6, {"n": n}, f"GL{n + 1} x GL{n}", f"GL{n}", "0",
                   f"T(std(GL{n + 1})(x)std(GL{n}))", pull=pull, knop="(2.1), m=n+1", W_V=_A(n - 1), l_hat="0")


def red1_7() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "a0": "A0", "b1": "-A0", "b2": "-A0-A1-A2"}
    return RowSpec("red1", 7, {}, "GSpin5 x GL2", "GSpin4", "T(HSpin-(Spin4))", "T(std(Sp4)(x)std(GL2))",
                   pull=pull, knop="(2.6), m=n=2", W_V="A1xA1", l_hat="0", embedding="prose-derived",
                   notes="the first GL2 copy of GSpin4 maps to the GL2 factor")


def red1_8() -> RowSpec:
    pull = same("a", "A", [1, 2, 0]) | same("b", "B", [1, 2, 3])
    return RowSpec("red1", 8, {}, "GSp4 x GL3", "S(GSp4 x GL3)", "T(std(Sp4)(x)std(GL3))",
                   "T(Spin(Spin5)(x)std(GL3))", pull=pull, knop="(2.6), m=2, n=3", W_V="C2xA2", l_hat="0")


def red1_9() -> RowSpec:
    pull = same("a", "A", [1, 2, 0]) | same("b", "B", [1, 2, 3, 4])
    return RowSpec("red1", 9, {}, "GSp4 x GL4", "S(GSp4 x GL4)", "std(Sp4)(x)wedge2(GL4) (+) T(std(GL4))",
                   "T(Spin(Spin5)(x)std(GL4))", pull=pull, knop="(2.6), m=2, n=4", W_V="C2xA3", l_hat="0")


def red1_10() -> RowSpec:
    pull = same("a", "A", [1, 2, 0]) | same("b", "B", [1, 2, 3, 4])
    return RowSpec("red1", 10, {}, "GSp4 x GL5", "S(GSp4 x GL4)", "std(Sp4)(x)wedge2(GL4)",
                   "T(Spin(Spin5)(x)std(GL5))", pull=pull, knop="(2.6), m=2, n=5", W_V="C2xA3", l_hat="0")


def red1_11() -> RowSpec:
    pull = same("a", "A", [1, 2, 3, 0]) | same("b", "B", [1, 2, 3])
    return RowSpec("red1", 11, {}, "GSpin7 x GL3", "S(GSpin6 x GL3)", "T(HSpin+(Spin6)(x)std(GL3))",
                   "T(std(Sp6)(x)std(GL3))", pull=pull, knop="(2.6), m=3, n=3", W_V="A3xA2", l_hat="0")


def red1_12(m: int = 2) -> RowSpec:
    G = f"SO{2 * m + 1} x Sp{2 * m}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "B", list(range(1, m + 1)))
    return RowSpec("red1", 12, {"m": m}, G, G, f"std(SO{2 * m + 1})(x)std(Sp{2 * m}) (+) std(Sp{2 * m})",
                   f"std(SO{2 * m + 1})(x)std(Sp{2 * m}) (+) std(Sp{2 * m})", pull=pull,
                   knop="(11.11), p=2m+1", W_V=f"B{m}xC{m}", l_hat="0")


def red1_13(m: int = 2) -> RowSpec:
    _need(m >= 2, "need m >= 2")
    G = f"SO{2 * m + 1} x Sp{2 * m - 2}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "B", list(range(1, m)))
    return RowSpec("red1", 13, {"m": m}, G, f"SO{2 * m} x Sp{2 * m - 2}", f"std(SO{2 * m})(x)std(Sp{2 * m - 2})",
                   f"std(SO{2 * m - 1})(x)std(Sp{2 * m}) (+) std(Sp{2 * m})", pull=pull,
                   knop="(11.11), p=2m-1", W_V=f"B{m - 1}xD{m}", l_hat="0")


def red1_14() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "a3": "A0-A2", "a4": "A0-A1"} | same("b", "B", [1, 2, 0])
    return RowSpec("red1", 14, {}, "GL4 x GSO4", "S(GSp4 x GSO4)", "std(SO4)(x)std(Sp4)",
                   "HSpin+(Spin4)(x)wedge2(GL4) (+) wedge2(GL4)(x)HSpin-(Spin4)", pull=pull,
                   knop="(11.10)", W_V="A1xA1xB2", l_hat="0")


def red1_15() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "a3": "B1", "a4": "B2", "b1": "A1", "b2": "A2"}
    return RowSpec("red1", 15, {}, "GL4 x GL2", "GL2 x GL2", "0", "std(GL2)(x)wedge2(GL4) (+) T(std(GL4))",
                   pull=pull, knop="(12.7), m=1", W_V="A1xA1", l_hat="0",
                   notes="(h1, h2) maps to (diag(h1, h2), h1)")


def red1_16() -> RowSpec:
    pull = same("a", "A", [1, 2, 3, 4]) | same("b", "B", [1, 2, 0])
    return RowSpec("red1", 16, {}, "GL4 x GSp4", "S(GL4 x GSp4)", "T(std(GL4)(x)std(Sp4))",
                   "Spin(Spin5)(x)wedge2(GL4) (+) T(std(GL4))", pull=pull, knop="(12.7), m=2",
                   W_V="C2xA3", l_hat="0")


def red1_17() -> RowSpec:
    pull = same("a", "A", [1, 2, 3, 0]) | same("b", "B", [1, 2, 3, 0])
    return RowSpec("red1", 17, {}, "GSpin7 x GSpin6", "S(GSpin6 x GSpin6)",
                   "T(HSpin+(Spin6#1)(x)HSpin+(Spin6#2))", "std(Sp6)(x)std(Spin6) (+) T(HSpin+(Spin6))",
                   G_hat="GSp6 x GSpin6", pull=pull, knop="(12.7), m=3", W_V="A3xA3", l_hat="0",
                   pairing="editorial", notes="dual group taken with a GSpin6 factor so that HSpin is a weight")


def red1_18(n: int = 2) -> RowSpec:
    rho = f"T(std(GL{n}#1)(x)std(GL{n}#2) (+) std(GL{n}#1))"
    rho_hat = f"T(std(GL{n}#1)(x)std(GL{n}#2) (+) std(GL{n}#2))"
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "B", list(range(1, n + 1)))
    return RowSpec("red1", 18, {"n": n}, f"GL{n} x GL{n}", f"GL{n} x GL{n}", rho, rho_hat, pull=pull,
                   knop="(22.3), m=n", W_V=_prod(_A(n - 1), _A(n - 1)), l_hat="0")


def red1_19(n: int = 2) -> RowSpec:
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "B", list(range(1, n + 1)))
    return RowSpec("red1", 19, {"n": n}, f"GL{n + 1} x GL{n}", f"GL{n} x GL{n}",
                   f"T(std(GL{n}#1)(x)std(GL{n}#2))", f"T(std(GL{n + 1})(x)std(GL{n})) (+) T(std(GL{n}))",
                   pull=pull, knop="(22.3), m=n+1", W_V=_prod(_A(n - 1), _A(n - 1)), l_hat="0",
                   embedding="prose-derived", notes="the first GL_n sits in the corner of GL_{n+1}")


def red1_20(n: int = 3) -> RowSpec:
    _need(n >= 2, "need n >= 2")
    m = n - 1
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "B", list(range(1, m + 1)))
    return RowSpec("red1", 20, {"n": n}, f"GL{n} x GL{m}", f"GL{n} x GL{m}",
                   f"T(std(GL{n})(x)std(GL{m}) (+) std(GL{n}))", f"T(std(GL{m})(x)std(GL{n})) (+) T(std(GL{n}))",
                   pull=pull, knop="(22.3), m=n-1", W_V=_prod(_A(m), _A(m - 1)), l_hat="0")


def red1_21(n: int = 4) -> RowSpec:
    _need(n >= 3, "need n >= 3")
    m = n - 2
    pull = same("a", "A", list(range(1, n))) | same("b", "B", list(range(1, m + 1)))
    return RowSpec("red1", 21, {"n": n}, f"GL{n} x GL{m}", f"GL{n - 1} x GL{m}",
                   f"T(std(GL{n - 1})(x)std(GL{m}))", f"T(std(GL{n})(x)std(GL{m})) (+) T(std(GL{n}))",
                   pull=pull, knop="(22.3), m=n-2", W_V=_prod(_A(m), _A(m - 1)),
                   l_hat="0", embedding="prose-derived")


_TRIPLE = "std(GL2#1)(x)std(GL2#2)(x)std(GL2#3)"


def red1_22() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "b1": "B1", "b2": "B2", "c1": "B1", "c2": "B2", "d1": "C1", "d2": "C2",
            "e1": "C1", "e2": "C2"}
    return RowSpec("red1", 22, {}, "GL2^5", "S(GL2^3)", _TRIPLE,
                   "std(GL2#1)(x)std(GL2#2)(x)std(GL2#3) (+) std(GL2#1)(x)std(GL2#4)(x)std(GL2#5)", pull=pull,
                   notes="GL(2)5: glued from two trilinear models")


def red1_23() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "b1": "B1", "b2": "B2", "c1": "C1", "c2": "C2", "d1": "C1", "d2": "C2"}
    return RowSpec("red1", 23, {}, "GL2^4", "S(GL2^3)", f"{_TRIPLE} (+) T(std(GL2#2))",
                   "T(std(GL2#1)(x)std(GL2#2)) (+) std(GL2#1)(x)std(GL2#3)(x)std(GL2#4)", pull=pull,
                   notes="GL(2)4")


def red1_24() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "b1": "B1", "b2": "B2", "c1": "B1", "c2": "B2"}
    return RowSpec("red1", 24, {}, "GL2^3", "GL2 x GL2", "T(std(GL2#1)(x)std(GL2#2))",
                   "T(std(GL2#1)) (+) std(GL2#1)(x)std(GL2#2)(x)std(GL2#3)", pull=pull, notes="GL(2)3")


def red1_25() -> RowSpec:
    pull = same("a", "A", [1, 2]) | same("b", "B", [1, 2]) | same("c", "C", [1, 2])
    return RowSpec("red1", 25, {}, "GL2^3", "S(GL2^3)", f"{_TRIPLE} (+) T(std(GL2#2)) (+) T(std(GL2#3))",
                   "T(std(GL2#1)(x)std(GL2#2)) (+) T(std(GL2#1)(x)std(GL2#3))", pull=pull, notes="GL(2)31")


def red1_26() -> RowSpec:
    rho = "T(std(GL2) (+) std(GL2)(x)std(GL1))"
    pull = same("a", "A", [1, 2]) | same("b", "B", [1])
    return RowSpec("red1", 26, {}, "GL2 x GL1", "GL2 x GL1", rho, rho, pull=pull, notes="GL(2)1")


# ---------------------------------------------------------------------------
# Table red2: reductive strongly tempered quadruples 2


def red2_1() -> RowSpec:
    pull = {"a1": "A1+C1", "a2": "A2+C1", "a3": "B1+C1", "a0": "2C1", "b1": "A1+C1", "b2": "A2+C1", "b0": "2C1"}
    return RowSpec("red2", 1, {}, "GSp6 x GSp4", "Sp4 x Sp2 x GL1", "0", "Spin(Spin5)(x)Spin(Spin7)",
                   pull=pull, knop="(1.3), m=2", W_V="C2xA1", l_hat="0",
                   notes="G(Sp4 x SL2) modelled through Sp4 x Sp2 x GL1 (central isogeny)")


def red2_2() -> RowSpec:
    pull = same("b", "A", [1, 2, 0]) | {"a1": "B1+D1", "a2": "B2+D1", "a3": "C1+D1", "a0": "2D1"}
    return RowSpec("red2", 2, {}, "GSp6 x GSO4", "GSO4 x Sp4 x Sp2 x GL1", "std(SO4)(x)std(Sp4)",
                   "HSpin+(Spin4)(x)Spin(Spin7) (+) Spin(Spin7)(x)HSpin-(Spin4)", pull=pull,
                   knop="(11.9)", W_V="A1xA1xA1xB2", l_hat="0", embedding="prose-derived")


def red2_3() -> RowSpec:
    pull = (same("b", "A", [1, 2, 3, 4, 0]) | {"a1": "B1+D1", "a2": "B2+D1", "a0": "2D1"}
            | {"c1": "C1+D1", "c2": "D1-C1"})
    return RowSpec("red2", 3, {}, "GSp4 x GSpin8 x GL2", "GSpin8 x Sp4 x Sp2 x GL1",
                   "std(Sp4)(x)std(Spin8) (+) HSpin+(Spin8)(x)std(Sp2)",
                   "Spin(Spin5)(x)std(Spin8) (+) HSpin+(Spin8)(x)std(GL2)", G_hat="GSpin5 x GSpin8 x GL2",
                   pull=pull, knop="(11.7)", W_V="C2xD4xA1", l_hat="0", pairing="editorial",
                   embedding="prose-derived")


def red2_4() -> RowSpec:
    pull = {"a1": "B1", "a2": "B2", "a3": "B3", "a4": "B4", "a5": "C1", "a6": "C2", "b1": "A1", "b2": "A2"}
    return RowSpec("red2", 4, {}, "GL6 x GL2", "GL2 x GL4 x GL2", "wedge2(GL4)(x)std(GL2#1)",
                   "wedge3(GL6) (+) T(std(GL6)(x)std(GL2))", pull=pull, knop="(12.5)", W_V="A1xA1xA3",
                   l_hat="0", embedding="prose-derived")


def red2_5() -> RowSpec:
    rho = "std(GL2#1)(x)wedge2(GL4) (+) T(std(GL4)(x)std(GL2#2))"
    pull = same("a", "A", [1, 2]) | same("b", "B", [1, 2, 3, 4]) | same("c", "C", [1, 2])
    return RowSpec("red2", 5, {}, "GL2 x GL4 x GL2", "GL2 x GL4 x GL2", rho, rho, pull=pull, knop="(12.8)",
                   W_V="A1xA1xA3", l_hat="0")


def red2_6(m: int = 2) -> RowSpec:
    n = 2 * m
    pull = {f"a{i}": f"A{i}" for i in range(1, m + 1)} | {f"a{m + i}": f"B{i}" for i in range(1, m + 1)}
    return RowSpec("red2", 6, {"m": m}, f"GL{n}", f"GL{m} x GL{m}", f"T(std(GL{m}#1))",
                   f"T(wedge2(GL{n})) (+) T(std(GL{n}))", pull=pull, knop="(22.2), n=2m",
                   W_V=_prod(_A(m - 1), _A(m - 1)), l_hat="0")


def red2_7(m: int = 2) -> RowSpec:
    n = 2 * m + 1
    pull = {f"a{i}": f"A{i}" for i in range(1, m + 2)} | {f"a{m + 1 + i}": f"B{i}" for i in range(1, m + 1)}
    return RowSpec("red2", 7, {"m": m}, f"GL{n}", f"GL{m + 1} x GL{m}", f"T(std(GL{m + 1}))",
                   f"T(wedge2(GL{n})) (+) T(std(GL{n}))", pull=pull, knop="(22.2), n=2m+1",
                   W_V=_prod(_A(m), _A(m - 1)), l_hat="0")


def red2_8() -> RowSpec:
    pull = {"a1": "A1", "a2": "A2", "a3": "B1"}
    return RowSpec("red2", 8, {}, "GL3", "GL2 x GL1", "T(std(GL2))", "T(std(GL3)) (+) T(std(GL3))", pull=pull,
                   knop="(22.4), n=3", W_V="A1", l_hat="0")


def red2_9() -> RowSpec:
    pull = same("a", "A", [1, 2, 0]) | same("b", "B", [1])
    return RowSpec("red2", 9, {}, "GSpin5 x GL1", "GSpin4 x GL1", "T(HSpin+(Spin4) (+) HSpin-(Spin4)(x)std(GL1))",
                   "T(std(Sp4)) (+) T(std(Sp4))", pull=pull, knop="(22.5), m=2", W_V="A1xA1", l_hat="0")


# ---------------------------------------------------------------------------
# Table nonred1: non-reductive strongly tempered quadruples 1


def nonred1_1(m: int = 3, n: int = 2) -> RowSpec:
    if not m > n:
        raise FamilyError("need m > n")
    G = f"SO{2 * m + 1} x SO{2 * n}"
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "A", list(range(1, n + 1)))
    return RowSpec("nonred1", 1, {"m": m, "n": n}, G, f"SO{2 * n}", "0", f"std(Sp{2 * m})(x)std(SO{2 * n})",
                   iota=iota_of(G, 0, list(range(n, m))), pull=pull, knop="(1.1), p=2n<2m", W_V=f"D{n}",
                   l_hat=f"C{m - n}", reduces_to=_red("red1", 1, m=n), embedding="prose-derived")


def nonred1_2(m: int = 2, n: int = 4) -> RowSpec:
    if not n >= m + 2:
        raise FamilyError("need n >= m + 2")
    G = f"SO{2 * m + 1} x SO{2 * n}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "A", list(range(1, m + 1)))
    return RowSpec("nonred1", 2, {"m": m, "n": n}, G, f"SO{2 * m + 1}", "0", f"std(Sp{2 * m})(x)std(SO{2 * n})",
                   iota=iota_of(G, 1, list(range(m, n))), pull=pull, knop="(1.1), p=2n>2m+2", W_V=f"C{m}",
                   l_hat=f"D{n - m}", reduces_to=_red("red1", 2, m=m), embedding="prose-derived",
                   notes="iota is the D_{n-m} Levi on the last coordinates of SO_2n")


def nonred1_3(m: int = 5) -> RowSpec:
    _need(m >= 5, "need m >= 5")
    G = f"GSpin{2 * m + 1} x GSp6"
    pull = same("a", "A", [1, 2, 3, 4, 0]) | same("b", "B", [1, 2, 3, 0])
    return RowSpec("nonred1", 3, {"m": m}, G, "GSpin8 x GSp6", "std(Sp6)(x)HSpin+(Spin8)",
                   f"std(Sp{2 * m})(x)Spin(Spin7)", iota=iota_of(G, 0, list(range(4, m))), pull=pull,
                   knop="(1.3), m>4", W_V="D4xB3", l_hat=f"C{m - 4}", reduces_to=_red("red1", 4),
                   embedding="prose-derived")


def nonred1_4(m: int = 2) -> RowSpec:
    G = f"SO{2 * m + 1}"
    return RowSpec("nonred1", 4, {"m": m}, G, "SO2", "0", f"T(std(Sp{2 * m}))",
                   iota=iota_of(G, 0, list(range(1, m))), pull={"a1": "A1"}, knop="(2.5)", W_V="0",
                   l_hat=f"C{m - 1}", reduces_to=_red("red1", 1, m=1), embedding="prose-derived")


def nonred1_5(m: int = 3) -> RowSpec:
    _need(m >= 3, "need m >= 3")
    G = f"GSpin{2 * m + 1} x GL2"
    pull = {"a1": "A1", "a2": "A2", "a0": "A0", "b1": "-A0", "b2": "-A0-A1-A2"}
    return RowSpec("nonred1", 5, {"m": m}, G, "GSpin4", "T(HSpin-(Spin4))", f"T(std(Sp{2 * m})(x)std(GL2))",
                   iota=iota_of(G, 0, list(range(2, m))), pull=pull, knop="(2.6), n=2", W_V="A1xA1",
                   l_hat=f"C{m - 2}", reduces_to=_red("red1", 7), embedding="prose-derived")


def _gsp4_gln(table: str, row: int, n: int, knop: str) -> RowSpec:
    if n < 6:
        raise FamilyError("need n >= 6")
    G = f"GSp4 x GL{n}"
    pull = same("a", "A", [1, 2, 0]) | same("b", "B", [1, 2, 3, 4])
    target = _red("red1", 10) if n % 2 else _red("red1", 9)
    return RowSpec(table, row, {"n": n}, G, "S(GSp4 x GL4)", "std(Sp4)(x)wedge2(GL4)",
                   f"T(Spin(Spin5)(x)std(GL{n}))", iota=iota_of(G, 1, list(range(4, n - 1))), pull=pull,
                   knop=knop, W_V="C2xA3", l_hat=_A(n - 5), reduces_to=target, embedding="prose-derived",
                   notes="Bessel for odd n, Fourier-Jacobi for even n")


def nonred1_6(n: int = 7) -> RowSpec:
    return _gsp4_gln("nonred1", 6, n, "(2.6), m=2, n>5")


def nonred1_7(m: int = 3, n: int = 2) -> RowSpec:
    _need(m > n >= 2, "need m > n >= 2")
    G = f"SO{2 * m + 1} x Sp{2 * n - 2}"
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "B", list(range(1, n)))
    return RowSpec("nonred1", 7, {"m": m, "n": n}, G, f"SO{2 * n} x Sp{2 * n - 2}",
                   f"std(SO{2 * n})(x)std(Sp{2 * n - 2})", f"std(SO{2 * n - 1})(x)std(Sp{2 * m}) (+) std(Sp{2 * m})",
                   iota=iota_of(G, 0, list(range(n, m))), pull=pull, knop="(11.11), p=2n-1",
                   W_V=f"B{n - 1}xD{n}", l_hat=f"C{m - n}", reduces_to=_red("red1", 13, m=n),
                   embedding="prose-derived")


# GSp4 -> GSpin5 through the exceptional isomorphism, written as a pull on (u1, u2; u0).
_GSP4_TO_GSPIN5 = {"1": "A1+A2-A0", "2": "A1-A2", "0": "-A1"}


def nonred1_8(k: int = 4) -> RowSpec:
    _need(k >= 4, "need k >= 4")
    G = f"GSpin{2 * k} x GSO4"
    pull = {"a1": _GSP4_TO_GSPIN5["1"], "a2": _GSP4_TO_GSPIN5["2"], "a0": _GSP4_TO_GSPIN5["0"]}
    pull |= same("b", "B", [1, 2, 0])
    return RowSpec("nonred1", 8, {"k": k}, G, "S(GSp4 x GSO4)", "std(SO4)(x)std(Sp4)",
                   f"HSpin+(Spin4)(x)std(SO{2 * k}) (+) std(SO{2 * k})(x)HSpin-(Spin4)",
                   iota=iota_of(G, 0, list(range(2, k))), pull=pull, knop="(11.1)", W_V="A1xA1xB2",
                   l_hat=f"D{k - 2}", reduces_to=_red("red1", 14), embedding="prose-derived",
                   notes="GSp4 enters GSpin6 through GSp4 = GSpin5")


def nonred1_9(m: int = 4) -> RowSpec:
    _need(m >= 4, "need m >= 4")
    G = f"GSpin{2 * m + 1} x GSpin6"
    pull = same("a", "A", [1, 2, 3, 0]) | same("b", "B", [1, 2, 3, 0])
    return RowSpec("nonred1", 9, {"m": m}, G, "S(GSpin6 x GSpin6)", "T(HSpin+(Spin6#1)(x)HSpin+(Spin6#2))",
                   f"std(Sp{2 * m})(x)std(Spin6) (+) T(HSpin+(Spin6))", G_hat=f"GSp{2 * m} x GSpin6",
                   iota=iota_of(G, 0, list(range(3, m))), pull=pull, knop="(12.7), m>3", W_V="A3xA3",
                   l_hat=f"C{m - 3}", reduces_to=_red("red1", 17), embedding="prose-derived", pairing="editorial")


# ---------------------------------------------------------------------------
# Table nonred1x: non-reductive strongly tempered quadruples 2


def nonred1x_1() -> RowSpec:
    G = "GSp6 x GL2"
    pull = {"a1": "A1", "a2": "A1", "a3": "A1", "a0": "A1+A2", "b1": "A1", "b2": "A2"}
    return RowSpec("nonred1x", 1, {}, G, "GL2", "0", "std(GL2)(x)Spin(Spin7)", iota=iota_of(G, 0, [0, 1]),
                   pull=pull, knop="(1.3), m=1", W_V="A1", l_hat="A2", reduces_to=_red("red1", 2, m=1),
                   embedding="prose-derived")


_GSP8_FROM_GSPIN4 = {"a1": "-A0", "a2": "-A0", "a3": "-A0", "a4": "-A0-A2", "a0": "-2A0-A1-A2"}


def nonred1x_2() -> RowSpec:
    G = "GSp8 x GL2"
    pull = _GSP8_FROM_GSPIN4 | {"b1": "-A0-A2", "b2": "-A0-A1"}
    return RowSpec("nonred1x", 2, {}, G, "GSpin4", "0", "std(GL2)(x)Spin(Spin9)", iota=iota_of(G, 0, [0, 1]),
                   pull=pull, knop="(1.4)", W_V="A1xA1", l_hat="A2", reduces_to=_red("red1", 1, m=2),
                   embedding="prose-derived")


def nonred1x_3() -> RowSpec:
    pull = {f"a{i}": "A1" for i in range(1, 6)} | {"a0": "A1+A2"}
    return RowSpec("nonred1x", 3, {}, "GSp10", "GL2", "0", "Spin(Spin11)", iota=(0, 1, 2, 3), pull=pull,
                   knop="(1.5), n=11", W_V="A1", l_hat="A4", reduces_to=_red("red1", 2, m=1),
                   embedding="prose-derived")


def nonred1x_4() -> RowSpec:
    pull = {f"a{i}": "A1" for i in range(1, 7)} | {"a0": "A1+A2"}
    return RowSpec("nonred1x", 4, {}, "GSO12", "GL2", "0", "HSpin+(Spin12)", iota=(0, 1, 2, 3, 4), pull=pull,
                   knop="(1.5), n=12", W_V="A1", l_hat="A5", reduces_to=_red("red1", 2, m=1),
                   embedding="prose-derived", pairing="editorial")


def nonred1x_5() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "A1", "a4": "A2", "a5": "A2", "a6": "A2"}
    return RowSpec("nonred1x", 5, {}, "GL6", "GL2", "0", "wedge3(GL6)", iota=(0, 1, 3, 4), pull=pull,
                   knop="(1.7)", W_V="A1", l_hat="A2xA2", reduces_to=_red("red1", 2, m=1),
                   embedding="prose-derived")


def _zero_level_simple(G: RootDatum, h) -> list[tuple]:
    """Simple (root, coroot) pairs of the centralizer of h, positive w.r.t. G."""
    pos = [(r, c) for r, c in zip(G.positive_roots, G.positive_coroots) if dot(r, h) == 0]
    roots = {r for r, _ in pos}
    out = []
    for r, c in pos:
        if not any(tuple(x - y for x, y in zip(r, s)) in roots for s in roots if s != r):
            out.append((r, c))
    return out


def nonred1x_6() -> RowSpec:
    from .grading import sl2_cocharacter
    from .rootdata import LeviLabel

    G = "E7, adjoint"
    iota = (0, 1, 2, 3, 4, 5)
    d = build_root_datum(G)
    h = sl2_cocharacter(d, LeviLabel.of(iota))
    simple = _zero_level_simple(d, h)
    row = tuple(sum(c[i] for _, c in simple) for i in range(d.rank))
    return RowSpec("nonred1x", 6, {}, G, "Sp2", "0", "std(E7)", iota=iota, matrix=(row,), knop="(1.11)",
                   W_V="A1", l_hat="E6", reduces_to=_red("red1", 2, m=1), embedding="prose-derived",
                   notes="PGL2 modelled by its simply-connected cover, mapped diagonally into the three "
                         "commuting SL2 of the centralizer")


def nonred1x_7(m: int = 2) -> RowSpec:
    n = 2 * m
    pull = {}
    for i in range(m):
        pull[f"a{2 * i + 1}"] = f"A{i + 1}"
        pull[f"a{2 * i + 2}"] = f"A{i + 1}"
    return RowSpec("nonred1x", 7, {"m": m}, f"GL{n}", f"GL{m}", f"T(std(GL{m}))", f"T(wedge2(GL{n}))",
                   iota=tuple(range(0, n, 2)), pull=pull, knop="(2.2), n=2m", W_V=_A(m - 1),
                   l_hat=f"A1^{m}", reduces_to=_red("red1", 5, n=m), embedding="prose-derived")


def nonred1x_8(m: int = 2) -> RowSpec:
    n = 2 * m + 1
    pull = {}
    for i in range(m):
        pull[f"a{2 * i + 1}"] = f"A{i + 1}"
        pull[f"a{2 * i + 2}"] = f"A{i + 1}"
    return RowSpec("nonred1x", 8, {"m": m}, f"GL{n}", f"GL{m}", "0", f"T(wedge2(GL{n}))",
                   iota=tuple(range(0, 2 * m, 2)), pull=pull, knop="(2.2), n=2m+1", W_V=_A(m - 1),
                   l_hat=f"A1^{m}", reduces_to=_red("red1", 5, n=m), embedding="prose-derived")


def nonred1x_9(k: int = 3) -> RowSpec:
    _need(k >= 3, "need k >= 3")
    G = f"GSpin{2 * k}"
    return RowSpec("nonred1x", 9, {"k": k}, G, "GSpin3", "T(Spin(Spin3))", f"T(std(SO{2 * k}))",
                   iota=tuple(range(1, k)), pull={"a1": "A1", "a0": "A0"}, knop="(2.7), n=2k",
                   W_V="A1", l_hat=f"D{k - 1}", reduces_to=_red("red1", 5, n=2), embedding="prose-derived")


def nonred1x_10() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "A1", "a0": "A1+A2"}
    return RowSpec("nonred1x", 10, {}, "GSp6", "GL2", "T(std(GL2))", "T(Spin(Spin7))", iota=(0, 1), pull=pull,
                   knop="(2.8), n=7", W_V="A1", l_hat="A2", reduces_to=_red("red1", 5, n=2),
                   embedding="prose-derived")


def nonred1x_11() -> RowSpec:
    return RowSpec("nonred1x", 11, {}, "GSp8", "GSpin4", "T(HSpin-(Spin4))", "T(Spin(Spin9))", iota=(0, 1),
                   pull=dict(_GSP8_FROM_GSPIN4), knop="(2.8), n=9", W_V="A1xA1", l_hat="A2",
                   reduces_to=_red("red1", 7), embedding="prose-derived")


def nonred1x_12() -> RowSpec:
    from .grading import sl2_cocharacter
    from .rootdata import LeviLabel

    G = "GE6"
    iota = (1, 2, 3, 4)
    d = build_root_datum(G)
    h = sl2_cocharacter(d, LeviLabel.of(iota))
    simple = _zero_level_simple(d, h)
    (b1, cb1), (b2, cb2), (g1, cg1), (g2, cg2) = _pair_a2_components(d, simple)
    c1 = [x + y for x, y in zip(cb1, cg1)]
    c2 = [x + y for x, y in zip(cb2, cg2)]
    # the centre of GL3 must act trivially: shift every row by -(c1 + 2 c2) / 3
    shift = [-(x + 2 * y) // 3 for x, y in zip(c1, c2)]
    if any((x + 2 * y) % 3 for x, y in zip(c1, c2)):
        raise FamilyError("diagonal GL3 does not descend to the adjoint group")
    rows = (tuple(x + y + s for x, y, s in zip(c1, c2, shift)), tuple(y + s for y, s in zip(c2, shift)),
            tuple(shift))
    return RowSpec("nonred1x", 12, {}, G, "GL3", "T(std(GL3))", "T(std(E6))", iota=iota, matrix=rows,
                   knop="(2.10)", W_V="A2", l_hat="D4", reduces_to=_red("red1", 5, n=3),
                   embedding="prose-derived", notes="GL3 maps diagonally into the two SL3 of the centralizer")


def _pair_a2_components(d: RootDatum, simple: list[tuple]) -> list[tuple]:
    """Order four simple roots as (b1, b2, g1, g2) with b1-b2 and g1-g2 the two A2 chains."""
    def linked(x, y):
        return dot(x[0], y[1]) != 0

    first = simple[0]
    partner = next(s for s in simple[1:] if linked(first, s))
    rest = [s for s in simple if s is not first and s is not partner]
    return [first, partner, rest[0], rest[1]]


def nonred1x_13(m: int = 3) -> RowSpec:
    _need(m >= 3, "need m >= 3")
    G = f"GSpin{2 * m + 1} x GL1"
    pull = {"a1": "A1", "a2": "A2", "a0": "A0", "b1": "B1"}
    return RowSpec("nonred1x", 13, {"m": m}, G, "GSpin4 x GL1", "T(HSpin+(Spin4) (+) HSpin-(Spin4)(x)std(GL1))",
                   f"T(std(Sp{2 * m})) (+) T(std(Sp{2 * m}))", iota=iota_of(G, 0, list(range(2, m))),
                   pull=pull, knop="(22.5)", W_V="A1xA1", l_hat=f"C{m - 2}", reduces_to=_red("red2", 9),
                   embedding="prose-derived")


# ---------------------------------------------------------------------------
# Table nonred2: non-reductive strongly tempered quadruples 3


def nonred2_1(m: int = 4, n: int = 2) -> RowSpec:
    if not m >= n + 2:
        raise FamilyError("need m >= n + 2")
    G = f"GL{m} x GL{n}"
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "A", list(range(1, n + 1)))
    target = _red("red1", 6, n=n) if (m - n) % 2 else _red("red1", 5, n=n)
    return RowSpec("nonred2", 1, {"m": m, "n": n}, G, f"GL{n}", "0", f"T(std(GL{m})(x)std(GL{n}))",
                   iota=iota_of(G, 0, list(range(n, m - 1))), pull=pull, knop="(2.1), m>n+1",
                   W_V=_A(n - 1), l_hat=_A(m - n - 1), reduces_to=target, embedding="prose-derived")


def nonred2_2(n: int = 6) -> RowSpec:
    return _gsp4_gln("nonred2", 2, n, "(2.6), m=2, n>5")


def nonred2_3(m: int = 1, k: int = 2) -> RowSpec:
    _need(k > m >= 1, "need k > m >= 1")
    G = f"SO{2 * m + 1} x Sp{2 * k}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "B", list(range(1, m + 1)))
    return RowSpec("nonred2", 3, {"m": m, "k": k}, G, f"SO{2 * m + 1} x Sp{2 * m}",
                   f"std(SO{2 * m + 1})(x)std(Sp{2 * m})", f"std(SO{2 * k + 1})(x)std(Sp{2 * m}) (+) std(Sp{2 * m})",
                   iota=iota_of(G, 1, list(range(m, k))), pull=pull, knop="(11.11), p>2m+1",
                   W_V=f"B{m}xC{m}", l_hat=f"B{k - m}", reduces_to=_red("red1", 12, m=m), embedding="prose-derived")


def nonred2_4(m: int = 4, n: int = 2) -> RowSpec:
    if not m >= n + 2:
        raise FamilyError("need m >= n + 2")
    G = f"GL{m} x GL{n}"
    pull = same("a", "A", list(range(1, n + 1))) | same("b", "B", list(range(1, n + 1)))
    target = _red("red1", 19, n=n) if (m - n) % 2 else _red("red1", 18, n=n)
    return RowSpec("nonred2", 4, {"m": m, "n": n}, G, f"GL{n} x GL{n}", f"T(std(GL{n}#1)(x)std(GL{n}#2))",
                   f"T(std(GL{m})(x)std(GL{n})) (+) T(std(GL{n}))", iota=iota_of(G, 0, list(range(n, m - 1))),
                   pull=pull, knop="(22.3), m>n+1", W_V=_prod(_A(n - 1), _A(n - 1)), l_hat=_A(m - n - 1),
                   reduces_to=target, embedding="prose-derived", pairing="editorial",
                   notes="orbit and l-hat taken as A_{m-n-1}, matching the GL1^n x GL_{m-n} Levi")


def nonred2_5(m: int = 2, n: int = 6) -> RowSpec:
    if not n >= m + 3:
        raise FamilyError("need n >= m + 3")
    G = f"GL{m} x GL{n}"
    pull = same("a", "A", list(range(1, m + 1))) | same("b", "B", list(range(1, m + 2)))
    bessel = (n - m - 1) % 2 == 1
    target = _red("red1", 21, n=m + 2) if bessel else _red("red1", 20, n=m + 1)
    return RowSpec("nonred2", 5, {"m": m, "n": n}, G, f"GL{m} x GL{m + 1}", f"T(std(GL{m})(x)std(GL{m + 1}))",
                   f"T(std(GL{m})(x)std(GL{n})) (+) T(std(GL{n}))",
                   iota=iota_of(G, 1, list(range(m + 1, n - 1))), pull=pull, knop="(22.3), m<n-1",
                   W_V=_prod(_A(m), _A(m - 1)), l_hat=_A(n - m - 2), reduces_to=target,
                   embedding="prose-derived")


# ---------------------------------------------------------------------------
# Table nonred2x: non-reductive strongly tempered quadruples 4


def nonred2x_1() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "A2", "a4": "A2", "a5": "A2", "a6": "A1", "a0": "A0"}
    return RowSpec("nonred2x", 1, {}, "GSp12", "GSp4", "0", "Spin(Spin13)", iota=(0, 1, 3, 4), pull=pull,
                   knop="(1.5), n=13", W_V="B2", l_hat="A2xA2", reduces_to=_red("red1", 2, m=2),
                   embedding="prose-derived")


def nonred2x_2() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "A1", "a4": "A1", "a5": "A1+A2", "a0": "A1+A2"}
    return RowSpec("nonred2x", 2, {}, "PGSO10", "GL2", "0", "T(HSpin+(Spin10))", iota=(0, 1, 2), pull=pull,
                   knop="(2.8), n=10", W_V="A1", l_hat="A3", reduces_to=_red("red1", 5, n=2),
                   embedding="prose-derived", pairing="editorial")


def nonred2x_3() -> RowSpec:
    pull = {"a1": "A1+C1", "a2": "A1+C1", "a3": "A2+C1", "a4": "A2+C1", "a5": "B1+C1", "a6": "B2+C1", "a0": "2C1"}
    return RowSpec("nonred2x", 3, {}, "GSO12", "Sp4 x SO4 x GL1", "0", "HSpin+(Spin12) (+) HSpin-(Spin12)",
                   iota=(0, 2), pull=pull, knop="(11.2)", W_V="A1xA1xB2", l_hat="A1xA1",
                   reduces_to=_red("red1", 14), embedding="prose-derived",
                   notes="S(GSp4 x GSO4) modelled through Sp4 x SO4 x GL1 (central isogeny)")


# S(GL2 x GSO4) is modelled through SL2 x SL2 x SL2 x GL1 (copies A, P, Q and the
# scalar D): the GL2 of H is A scaled by D, and GSO4 = (P scaled by D, Q).
_PLANE = "A1+D1"
_GSO4_FROM_PQ = {"1": "B1+C1+D1", "2": "B1-C1+D1", "0": "2D1"}
_S_GL2_GSO4 = "Sp2 x Sp2 x Sp2 x GL1"


def _gso4(letter: str) -> dict[str, str]:
    return {f"{letter}{k}": v for k, v in _GSO4_FROM_PQ.items()}


def nonred2x_4() -> RowSpec:
    pull = {f"a{i}": _PLANE for i in range(1, 5)}
    pull |= {"a5": _GSO4_FROM_PQ["1"], "a6": _GSO4_FROM_PQ["2"], "a0": _GSO4_FROM_PQ["0"], "b1": "2B1"}
    return RowSpec("nonred2x", 4, {}, "GSO12 x SO3", _S_GL2_GSO4, "0",
                   "std(Sp2)(x)std(Spin12) (+) HSpin-(Spin12)", G_hat="GSpin12 x Sp2", iota=(0, 1, 2), pull=pull,
                   knop="(11.3)", W_V="A1xA1xA1", l_hat="A3", reduces_to=_red("red1", 22),
                   embedding="prose-derived", pairing="editorial",
                   notes="PGL2 realised as SO3; S(GL2 x GSO4) realised through SL2^3 x GL1; half-spin sign fixed by the Levi")


def nonred2x_5() -> RowSpec:
    G = "GSp4 x GSpin12"
    pull = {"a1": "B1+D1", "a2": "B2+D1", "a0": "2D1", "b1": "C1", "b2": "C1"}
    pull |= {"b3": "A1", "b4": "A2", "b5": "A3", "b6": "A4", "b0": "A0-C1"}
    return RowSpec("nonred2x", 5, {}, G, "GSpin8 x Sp4 x Sp2 x GL1", "std(Sp4)(x)HSpin+(Spin8)",
                   "Spin(Spin5)(x)std(Spin12) (+) HSpin+(Spin12)", G_hat="GSpin5 x GSpin12",
                   iota=iota_of(G, 1, [0]), pull=pull, knop="(11.4)", W_V="C2xA1xD4", l_hat="A1",
                   reduces_to=_red("red2", 3), embedding="prose-derived", pairing="editorial",
                   notes="first factor GSp4; the Spin8 representation is read up to triality")


def nonred2x_6() -> RowSpec:
    pull = {"a1": _PLANE, "a2": _PLANE, "a3": _GSO4_FROM_PQ["1"], "a4": _GSO4_FROM_PQ["2"], "a0": _GSO4_FROM_PQ["0"]}
    pull |= _gso4("b")
    return RowSpec("nonred2x", 6, {}, "GSO8 x GSO4", _S_GL2_GSO4, "0",
                   "HSpin-(Spin4)(x)HSpin-(Spin8) (+) HSpin+(Spin8)(x)HSpin+(Spin4)", iota=(0,), pull=pull,
                   knop="(11.6)", W_V="A1xA1xA1", l_hat="A1", reduces_to=_red("red1", 22),
                   embedding="prose-derived", pairing="editorial",
                   notes="S(GL2 x GSO4) realised through SL2^3 x GL1; Spin8 representations read up to triality")


def nonred2x_7() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "B1-B2", "a0": "B2-A1"}
    return RowSpec("nonred2x", 7, {}, "GSpin7", "Sp2 x GL2", "std(Sp2)", "wedge0_3(Sp6) (+) std(Sp6)",
                   iota=(0,), pull=pull, knop="(11.12)", W_V="A1xA1", l_hat="A1",
                   reduces_to=_red("red1", 12, m=1), embedding="prose-derived",
                   notes="S(GL2 x GL2) realised through SL2 x GL2; the SL2 fixes the root vector of the orbit")


def nonred2x_8() -> RowSpec:
    pull = {f"a{i}": _PLANE for i in range(1, 5)}
    pull |= {"a5": _GSO4_FROM_PQ["1"], "a6": _GSO4_FROM_PQ["2"], "a0": _GSO4_FROM_PQ["0"]}
    return RowSpec("nonred2x", 8, {}, "GSO12", _S_GL2_GSO4, "T(std(Sp2#2))",
                   "T(std(Spin12)) (+) HSpin-(Spin12)", G_hat="GSpin12", iota=(0, 1, 2), pull=pull,
                   knop="(12.1)", W_V="A1xA1xA1", l_hat="A3", reduces_to=_red("red1", 23),
                   embedding="prose-derived", pairing="editorial",
                   notes="theta series on the GL2 copy of GSO4 that fed the PGL2 factor in the (11.3) model; half-spin sign fixed by the Levi")


def nonred2x_9() -> RowSpec:
    pull = {"a1": "A1", "a2": "A1", "a3": "B1", "a4": "B2", "a5": "B3", "a0": "B0-A1"} | same("b", "C", [1, 2])
    return RowSpec("nonred2x", 9, {}, "GSpin10 x GL2", "Sp2 x GSpin6 x GL2", "T(HSpin+(Spin6)(x)std(GL2))",
                   "std(GL2)(x)std(SO10) (+) T(std(SO10))", iota=(0,), pull=pull, knop="(12.2)",
                   W_V="A1xA1xA3", l_hat="A1", reduces_to=_red("red2", 5), embedding="prose-derived",
                   notes="S(GL2 x GSpin6) x GL2 realised through SL2 x GSpin6 x GL2")


def nonred2x_10() -> RowSpec:
    pull = {"a1": _PLANE, "a2": _PLANE, "a3": _GSO4_FROM_PQ["1"], "a4": _GSO4_FROM_PQ["2"], "a0": _GSO4_FROM_PQ["0"]}
    pull |= {"b1": "B1+D1", "b2": "D1-B1"}
    return RowSpec("nonred2x", 10, {}, "GSO8 x GL2", _S_GL2_GSO4, "T(std(Sp2#3))",
                   "std(GL2)(x)HSpin+(Spin8) (+) T(HSpin-(Spin8))", G_hat="GSpin8 x GL2", iota=(0,), pull=pull,
                   knop="(12.3)", W_V="A1xA1xA1", l_hat="A1", reduces_to=_red("red1", 23),
                   embedding="prose-derived", pairing="editorial",
                   notes="S(GL2 x GSO4) realised through SL2^3 x GL1; theta series on the second GSO4 copy; Spin8 representations read up to triality")


def nonred2x_11() -> RowSpec:
    pull = {"a1": "B1", "a2": "B1", "a3": "B2", "a4": "B2", "a5": "A1", "a6": "A2"}
    return RowSpec("nonred2x", 11, {}, "GL6", "GL2 x GL2", "0", "wedge3(GL6) (+) T(std(GL6))", iota=(0, 2),
                   pull=pull, knop="(12.6)", W_V="A1xA1", l_hat="A1xA1", reduces_to=_red("red1", 24),
                   embedding="prose-derived")


def nonred2x_12() -> RowSpec:
    pull = {"a1": _PLANE, "a2": _PLANE, "a3": _GSO4_FROM_PQ["1"], "a4": _GSO4_FROM_PQ["2"], "a0": _GSO4_FROM_PQ["0"]}
    return RowSpec("nonred2x", 12, {}, "GSO8", _S_GL2_GSO4, "T(std(Sp2#2) (+) std(Sp2#3))",
                   "T(HSpin+(Spin8)) (+) T(HSpin-(Spin8))", G_hat="GSpin8", iota=(0,), pull=pull, knop="(22.1)",
                   W_V="A1xA1xA1", l_hat="A1", reduces_to=_red("red1", 25), embedding="prose-derived",
                   pairing="editorial", notes="S(GL2 x GSO4) realised through SL2^3 x GL1; Spin8 representations read up to triality")


def nonred2x_13(n: int = 5) -> RowSpec:
    _need(n >= 4, "need n >= 4")
    pull = {f"a{n - 1}": "A1", f"a{n}": "A2"}
    target = _red("red2", 8) if n % 2 else _red("red1", 26)
    return RowSpec("nonred2x", 13, {"n": n}, f"GL{n}", "GL2", "T(std(GL2))", f"T(std(GL{n})) (+) T(std(GL{n}))",
                   iota=tuple(range(0, n - 3)), pull=pull, knop="(22.4), n>3", W_V="A1", l_hat=_A(n - 3),
                   reduces_to=target, embedding="prose-derived", notes="Bessel for odd n")


# ---------------------------------------------------------------------------
# Registry

TABLES = ("red1", "red2", "nonred1", "nonred1x", "nonred2", "nonred2x")
TABLE_SIZES = {"red1": 26, "red2": 9, "nonred1": 9, "nonred1x": 13, "nonred2": 5, "nonred2x": 13}
CAPTIONS = {
    "red1": "Reductive strongly tempered quadruples 1",
    "red2": "Reductive strongly tempered quadruples 2",
    "nonred1": "Non-reductive strongly tempered quadruples 1",
    "nonred1x": "Non-reductive strongly tempered quadruples 2",
    "nonred2": "Non-reductive strongly tempered quadruples 3",
    "nonred2x": "Non-reductive strongly tempered quadruples 4",
}

FAMILIES: dict[tuple[str, int], Callable[..., RowSpec]] = {}
for _name, _fn in list(globals().items()):
    _m = re.fullmatch(r"(red1|red2|nonred1x|nonred1|nonred2x|nonred2)_(\d+)", _name)
    if _m and callable(_fn):
        FAMILIES[(_m.group(1), int(_m.group(2)))] = _fn


def instantiate(table: str, row: int, **params) -> RowSpec:
    try:
        fn = FAMILIES[(table, row)]
    except KeyError:
        raise FamilyError(f"no row {table}:{row}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise FamilyError(f"bad parameters for {table}:{row}: {exc}") from None
