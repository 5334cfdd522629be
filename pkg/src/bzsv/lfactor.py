"""Unramified local L-factors and the right-hand sides of the period conjectures.

Only right-hand-side expressions are evaluated here; no period integral is
ever computed, and identities hold only up to the usual finite sets of
ramified places and zeta normalizations.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .repcalc import RepSum
from .rootdata import RootDatum

TEMPERED_TOL = 1e-12
POLE_TOL = 1e-12


class LFactorError(ValueError):
    pass


class PoleError(LFactorError):
    """A local factor hit a pole; ``weight`` is the offending weight."""

    def __init__(self, weight: tuple[int, ...], eigenvalue: complex, s: complex):
        self.weight, self.eigenvalue, self.s = weight, eigenvalue, s
        super().__init__(f"pole at s={s}: weight {weight} has eigenvalue {eigenvalue:.6g} = q^s")


@dataclass(frozen=True)
class SatakeParameter:
    """A point of the dual torus (one nonzero coordinate per cocharacter basis vector) and q."""

    datum: RootDatum
    coords: tuple[complex, ...]
    q: float
    tempered: bool = False

    def __post_init__(self) -> None:
        if len(self.coords) != self.datum.rank:
            raise LFactorError(f"need {self.datum.rank} coordinates, got {len(self.coords)}")
        if any(c == 0 for c in self.coords):
            raise LFactorError("Satake coordinates must be nonzero")
        if not self.q > 1:
            raise LFactorError("residue cardinality q must exceed 1")
        if self.tempered and any(abs(abs(c) - 1) > TEMPERED_TOL for c in self.coords):
            raise LFactorError("tempered parameter needs unit-modulus coordinates")

    def eval(self, weight: Sequence[int]) -> complex:
        """λ(c) = ∏ c_i^{λ_i}."""
        out = complex(1)
        for c, k in zip(self.coords, weight):
            if k:
                out *= complex(c) ** k
        return out

    def reflect(self, i: int) -> "SatakeParameter":
        """Simple reflection s_i: t -> t · α_i^∨(α_i(t))^{-1}."""
        a = self.eval(self.datum.simple_roots[i])
        cor = self.datum.simple_coroots[i]
        coords = tuple(c * a ** (-k) if k else c for c, k in zip(self.coords, cor))
        return SatakeParameter(self.datum, coords, self.q, self.tempered)

    def act(self, word: Iterable[int]) -> "SatakeParameter":
        c = self
        for i in reversed(list(word)):
            c = c.reflect(i)
        return c

    @classmethod
    def random(cls, datum: RootDatum, q: float, rng, tempered: bool = True) -> "SatakeParameter":
        """Random parameter from a ``random.Random``; unit circle when tempered."""
        if tempered:
            coords = tuple(cmath.exp(2j * math.pi * rng.random()) for _ in range(datum.rank))
        else:
            coords = tuple(cmath.rect(rng.uniform(0.5, 1.5), 2 * math.pi * rng.random()) for _ in range(datum.rank))
        return cls(datum, coords, q, tempered)


@dataclass(frozen=True)
class LFactorValue:
    """value = ∏ (1 − eigenvalue · q^{−s})^{−exponent} over ``factors``."""

    value: complex
    factors: tuple[tuple[complex, int], ...]
    q: float
    s: complex

    def recompute(self) -> complex:
        out = complex(1)
        qs = self.q ** (-self.s)
        for ev, k in self.factors:
            out *= (1 - ev * qs) ** (-k)
        return out


def lfactor(rho: RepSum, c: SatakeParameter, s: complex) -> LFactorValue:
    """det(1 − ρ(c) q^{−s})^{−1} from the weight multiset of ρ."""
    if rho.datum != c.datum:
        raise LFactorError("representation and Satake parameter live on different groups")
    qs = c.q ** (-s)
    factors = []
    value = complex(1)
    for w, k in sorted(rho.weights().items()):
        ev = c.eval(w)
        one = 1 - ev * qs
        if abs(one) < POLE_TOL:
            raise PoleError(w, ev, s)
        factors.append((ev, k))
        value *= one ** (-k)
    return LFactorValue(value, tuple(factors), c.q, s)


def adjoint_weights(d: RootDatum) -> dict[tuple[int, ...], int]:
    """Weights of the adjoint representation of the full Lie algebra (roots and rank zeros)."""
    out = {tuple(r): 1 for r in d.roots}
    out[tuple([0] * d.rank)] = d.rank
    return out


def adjoint_lfactor(c: SatakeParameter, s: complex) -> LFactorValue:
    qs = c.q ** (-s)
    value, factors = complex(1), []
    for w, k in sorted(adjoint_weights(c.datum).items()):
        ev = c.eval(w)
        one = 1 - ev * qs
        if abs(one) < POLE_TOL:
            raise PoleError(w, ev, s)
        factors.append((ev, k))
        value *= one ** (-k)
    return LFactorValue(value, tuple(factors), c.q, s)


@dataclass(frozen=True)
class HPrimeData:
    """Data for the general form: ρ_{Ĥ'} and the pieces ρ̂_k, all on Ĥ'."""

    rho_half: RepSum
    pieces: Mapping[int, RepSum]


def conjecture_rhs(entry, c: SatakeParameter, hprime: HPrimeData | None = None,
                   shifts: Sequence[tuple[RepSum, complex]] = ()) -> complex:
    """Right-hand side of the period conjecture at one place.

    Without ``hprime`` this is the strongly tempered form L(1/2, ρ̂) / L(1, Ad),
    which applies to every corpus entry.  The general form needs ``hprime`` to
    supply ρ_{Ĥ'} and the ρ̂_k, with ``c`` a parameter of Ĥ'; the value is then
    L(1/2, ρ_{Ĥ'}) ∏_k L(k/2 + 1, ρ̂_k) / L(1, Ad)^2.  ``shifts`` multiplies in
    extra factors L(s_j, ρ_j) recorded alongside an entry.
    """
    if hprime is None:
        val = lfactor(entry.dual.rho_hat, c, 0.5).value / adjoint_lfactor(c, 1).value
    else:
        val = lfactor(hprime.rho_half, c, 0.5).value if hprime.rho_half.terms else complex(1)
        for k, rho in sorted(hprime.pieces.items()):
            val *= lfactor(rho, c, k / 2 + 1).value
        val /= adjoint_lfactor(c, 1).value ** 2
    for rho, s in shifts:
        val *= lfactor(rho, c, s).value
    return val


def lseries_partial(rho: RepSum, c: SatakeParameter | Mapping[float, SatakeParameter], s: complex,
                    places: Sequence[float]) -> complex:
    """∏ over places of the local factors (one Satake parameter per q, or one reused at every q)."""
    out = complex(1)
    for q in places:
        cq = c[q] if isinstance(c, Mapping) else SatakeParameter(c.datum, c.coords, q, c.tempered)
        out *= lfactor(rho, cq, s).value
    return out


# ---------------------------------------------------------------------------
# Cauchy identity oracle


def _complete_homogeneous(xs: Sequence[Fraction], top: int) -> list[Fraction]:
    """h_0..h_top by the recursion h_k(x1..xn) = h_k(x1..x_{n-1}) + x_n h_{k-1}(x1..xn)."""
    h = [Fraction(1)] + [Fraction(0)] * top
    for x in xs:
        for k in range(1, top + 1):
            h[k] += x * h[k - 1]
    return h


def _det(m: list[list[Fraction]]) -> Fraction:
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if m[r][i] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det *= m[i][i]
        for r in range(i + 1, n):
            f = m[r][i] / m[i][i]
            if f:
                for k in range(i, n):
                    m[r][k] -= f * m[i][k]
    return det


def schur(lam: Sequence[int], h: Sequence[Fraction]) -> Fraction:
    """Jacobi–Trudi: s_λ = det(h_{λ_i − i + j})."""
    n = len(lam)
    if n == 0:
        return Fraction(1)
    hk = lambda k: h[k] if 0 <= k < len(h) else Fraction(0)  # noqa: E731
    return _det([[hk(lam[i] - i + j) for j in range(n)] for i in range(n)])


def partitions(total: int, max_parts: int, max_part: int | None = None) -> Iterable[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    top = total if max_part is None else min(total, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(total - first, max_parts - 1, first):
            yield (first,) + rest


def cauchy_oracle(x: Sequence[float], y: Sequence[float], cutoff: int) -> tuple[float, float, float]:
    """Σ_{|λ| ≤ cutoff} s_λ(x) s_λ(y) against ∏ (1 − x_i y_j)^{-1}; exact rational arithmetic."""
    if cutoff < 0:
        raise LFactorError("cutoff must be non-negative")
    if x and y and max(abs(a * b) for a in x for b in y) >= 1:
        raise LFactorError("Cauchy series diverges: need |x_i y_j| < 1")
    fx, fy = [Fraction(v) for v in x], [Fraction(v) for v in y]
    hx, hy = _complete_homogeneous(fx, cutoff), _complete_homogeneous(fy, cutoff)
    parts = min(len(fx), len(fy))
    lhs = Fraction(0)
    for d in range(cutoff + 1):
        for lam in partitions(d, parts):
            lhs += schur(lam, hx) * schur(lam, hy)
    rhs = Fraction(1)
    for a in fx:
        for b in fy:
            rhs /= 1 - a * b
    return float(lhs), float(rhs), float(abs(rhs - lhs))


def cauchy_tail_bound(x: Sequence[float], y: Sequence[float], cutoff: int) -> float:
    """Bound for Σ_{|λ| > cutoff}: degree-d part is h_d of the products x_i y_j, at most C(d+k−1, k−1) r^d."""
    prods = [abs(a * b) for a in x for b in y]
    if not prods:
        return 0.0
    r, k = max(prods), len(prods)
    if r >= 1:
        return math.inf
    total, d = 0.0, cutoff + 1
    while True:
        term = math.comb(d + k - 1, k - 1) * r**d
        total += term
        if term < 1e-30 * max(total, 1e-300) or d > cutoff + 10_000:
            return total
        d += 1


def weyl_words(d: RootDatum, count: int, rng, max_len: int = 12) -> list[list[int]]:
    """Random words in the simple reflections."""
    if d.ss_rank == 0:
        return [[] for _ in range(count)]
    return [[rng.randrange(d.ss_rank) for _ in range(rng.randint(1, max_len))] for _ in range(count)]


__all__ = [
    "HPrimeData",
    "LFactorError",
    "LFactorValue",
    "PoleError",
    "SatakeParameter",
    "adjoint_lfactor",
    "cauchy_oracle",
    "cauchy_tail_bound",
    "conjecture_rhs",
    "lfactor",
    "lseries_partial",
    "partitions",
    "schur",
    "weyl_words",
]
