"""sl2-gradings of the adjoint representation attached to a Levi-principal nilpotent.

For ``h = 2 rho^v_L`` every root ``alpha`` sits at level ``<alpha, h>``; the
Cartan contributes ``rank`` zero weights at level 0. Restricting each level to
a torus of ``H`` and subtracting level ``k+2`` from level ``k`` gives the
characters of the H-representations ``rho_k`` in ``g = (+)_k rho_k (x) Sym^k``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .repcalc import RepError, RepSum, TorusMap, decompose_weight_multiset, restrict_along
from .rootdata import LeviLabel, RootDatum, RootDatumError, Vec, dot, rho_check_of


class GradingError(ValueError):
    pass


def sl2_cocharacter(G: RootDatum, L: LeviLabel) -> Vec:
    """h = 2 rho^v of the standard Levi L (the zero cocharacter for L empty)."""
    try:
        return rho_check_of(G, L.indices)
    except RootDatumError as exc:
        raise GradingError(str(exc)) from exc


@dataclass(frozen=True)
class AdjointGrading:
    G: RootDatum
    h: Vec
    levels: dict[int, Counter] = field(compare=False)

    def size(self, k: int) -> int:
        return sum(self.levels.get(k, Counter()).values())

    @property
    def total(self) -> int:
        return sum(self.size(k) for k in self.levels)

    @property
    def support(self) -> list[int]:
        return sorted(self.levels)

    def is_symmetric(self) -> bool:
        return all(self.size(k) == self.size(-k) for k in self.levels)

    def string_counts(self) -> dict[int, int]:
        """m_k - m_{k+2} for k >= 0: the number of Sym^k strings."""
        top = max(self.levels) if self.levels else 0
        return {k: self.size(k) - self.size(k + 2) for k in range(0, top + 1)}


def adjoint_grading(G: RootDatum, h: Vec) -> AdjointGrading:
    if len(h) != G.rank or any(not isinstance(x, int) for x in h):
        raise GradingError("h must be an integral cocharacter of G")
    levels: dict[int, Counter] = {}
    zero = tuple(0 for _ in range(G.rank))
    levels[0] = Counter({zero: G.rank})
    for r in G.roots:
        k = dot(r, h)
        levels.setdefault(k, Counter())[r] += 1
    return AdjointGrading(G, tuple(h), levels)


def rho_k_decomposition(G: RootDatum, h: Vec, phi: TorusMap) -> dict[int, RepSum]:
    """Map k -> rho_k as a representation of phi.source (only nonzero pieces).

    The H-torus must centralize h; otherwise the level restrictions are not
    H-characters and a :class:`GradingError` is raised.
    """
    gr = adjoint_grading(G, h)
    H = phi.source
    restricted = {k: restrict_along(phi, c) for k, c in gr.levels.items()}
    out: dict[int, RepSum] = {}
    for k in sorted(x for x in restricted if x >= 0):
        diff = Counter(restricted[k])
        diff.subtract(restricted.get(k + 2, Counter()))
        if any(v < 0 for v in diff.values()):
            raise GradingError(f"level {k} is smaller than level {k + 2} after restriction")
        diff = Counter({w: v for w, v in diff.items() if v})
        if not diff:
            continue
        try:
            out[k] = decompose_weight_multiset(H, diff)
        except RepError as exc:
            raise GradingError(f"rho_{k} is not a character of H: {exc}") from exc
    return out


def conservation_holds(G: RootDatum, pieces: dict[int, RepSum]) -> bool:
    return sum((k + 1) * r.dim for k, r in pieces.items()) == G.dim


def odd_levels(pieces: dict[int, RepSum]) -> list[int]:
    return sorted(k for k in pieces if k % 2)


def rho_H_iota(rho_H: RepSum, pieces: dict[int, RepSum]) -> RepSum:
    """rho_H plus every odd-level piece."""
    out = rho_H
    for k in odd_levels(pieces):
        out = out + pieces[k]
    return out


def period_type(pieces: dict[int, RepSum]) -> str:
    """Fourier-Jacobi when some odd level is present, Bessel otherwise."""
    return "Fourier-Jacobi" if odd_levels(pieces) else "Bessel"


__all__ = [
    "AdjointGrading",
    "GradingError",
    "adjoint_grading",
    "conservation_holds",
    "odd_levels",
    "period_type",
    "rho_H_iota",
    "rho_k_decomposition",
    "sl2_cocharacter",
]
