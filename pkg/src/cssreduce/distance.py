"""Exact minimum-distance search and brute-force soundness estimators.

The distance search enumerates candidate supports weight by weight, in
colexicographic order within each weight, and returns the first qualifying
support.  The enumeration is organised as a DFS over support elements
(largest first) with two exact accelerations that preserve the visit
order: syndrome-weight pruning, and a precomputed pair table that
completes the final two support positions by lookup instead of scanning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Literal

from .f2 import BitMatrix, BitVector, kernel_basis, rref
from .model import CssCode, k_of, require_valid

Side = Literal["x", "z"]


class EnumerationBudgetError(RuntimeError):
    """Raised instead of approximating when an exhaustive step is too large."""


@dataclass(frozen=True)
class DistanceResult:
    """Outcome of a minimum logical weight search.

    If exact, `witness` holds a logical operator of weight `value`.
    If not exact, no logical of weight <= cap exists, so the distance is
    at least `value` (= cap + 1).
    """

    value: int
    exact: bool
    cap: int
    witness: BitVector | None = None


@dataclass(frozen=True)
class SoundnessEstimate:
    epsilon: Fraction | None
    weight_cap: int
    attained_at: BitVector | None
    kind: str


def _column_syndromes(m: BitMatrix) -> list[int]:
    return list(m.transpose().row_words)


def _pair_table(cols: list[int]) -> dict[int, list[tuple[int, int]]]:
    """syndrome -> [(c2, c1)] for all pairs c1 < c2, in (c2, c1) order."""
    table: dict[int, list[tuple[int, int]]] = {}
    for c2 in range(len(cols)):
        w2 = cols[c2]
        for c1 in range(c2):
            table.setdefault(w2 ^ cols[c1], []).append((c2, c1))
    return table


def _first_zero_syndrome_support(
    weight: int,
    n: int,
    cols: list[int],
    pairs: dict[int, list[tuple[int, int]]],
    accept: Callable[[int], bool],
    max_degree: int,
) -> int:
    """First weight-`weight` support (colex order) with zero syndrome that
    passes `accept`; 0 if none exists."""
    if weight == 1:
        for j in range(n):
            if cols[j] == 0 and accept(1 << j):
                return 1 << j
        return 0
    if weight == 2:
        for c2, c1 in pairs.get(0, ()):
            cand = (1 << c2) | (1 << c1)
            if accept(cand):
                return cand
        return 0

    def rec(r: int, limit: int, sigma: int, partial: int) -> int:
        if sigma.bit_count() > r * max_degree:
            return 0
        if r == 2:
            for c2, c1 in pairs.get(sigma, ()):
                if c2 >= limit:
                    break
                cand = partial | (1 << c2) | (1 << c1)
                if accept(cand):
                    return cand
            return 0
        for e in range(r - 1, limit):
            hit = rec(r - 1, e, sigma ^ cols[e], partial | (1 << e))
            if hit:
                return hit
        return 0

    return rec(weight, n, 0, 0)


def min_logical_weight(code: CssCode, side: Side, cap: int | None = None) -> DistanceResult:
    """Least weight of a logical operator of the given type, up to `cap`.

    A support qualifies if it commutes with every opposite-type generator
    (zero syndrome) and is not in the row space of the same-type generators.
    The returned witness is the first qualifying support in colex order.
    """
    require_valid(code)
    if side not in ("x", "z"):
        raise ValueError("side must be 'x' or 'z'")
    if k_of(code) == 0:
        raise ValueError("no logical operators exist (k = 0)")
    opp = code.z_gens if side == "x" else code.x_gens
    own = code.x_gens if side == "x" else code.z_gens
    n = code.n
    cap = n if cap is None else cap
    if cap < 1:
        raise ValueError("cap must be at least 1")

    cols = _column_syndromes(opp)
    pairs = _pair_table(cols)
    max_degree = max((c.bit_count() for c in cols), default=0)
    own_rref = rref(own)

    def accept(bits: int) -> bool:
        return own_rref.reduce_word(bits) != 0

    for w in range(1, min(cap, n) + 1):
        hit = _first_zero_syndrome_support(w, n, cols, pairs, accept, max_degree)
        if hit:
            return DistanceResult(value=w, exact=True, cap=cap, witness=BitVector(n, hit))
    return DistanceResult(value=cap + 1, exact=False, cap=cap, witness=None)


def _colex_supports(n: int, weight: int) -> Iterator[int]:
    """All weight-`weight` subsets of range(n) as bit masks, colex order."""
    if weight == 0:
        yield 0
        return
    for m in range(weight - 1, n):
        for rest in _colex_supports(m, weight - 1):
            yield rest | (1 << m)


def _min_violation_ratio(
    m: BitMatrix, weight_cap: int, kernel_budget: int, kind: str
) -> SoundnessEstimate:
    """min over nonzero-image v with wt(v) <= cap of wt(m v) / min coset weight.

    The coset minimum is over v + u with u in ker(m), found by exhaustive
    kernel enumeration; refuses if the kernel is larger than the budget.
    """
    domain = m.cols
    basis = kernel_basis(m)
    if len(basis) > kernel_budget:
        raise EnumerationBudgetError(
            f"kernel dimension {len(basis)} exceeds enumeration budget {kernel_budget}"
        )
    kernel = [0]
    for b in basis:
        kernel += [u ^ b.bits for u in kernel]

    cols = _column_syndromes(m)
    best: Fraction | None = None
    best_witness = 0
    for w in range(1, min(weight_cap, domain) + 1):
        for v in _colex_supports(domain, w):
            sigma = 0
            vv = v
            while vv:
                low = vv & -vv
                sigma ^= cols[low.bit_length() - 1]
                vv ^= low
            if sigma == 0:
                continue
            coset_min = min((v ^ u).bit_count() for u in kernel)
            ratio = Fraction(sigma.bit_count(), coset_min)
            if best is None or ratio < best:
                best = ratio
                best_witness = v
    return SoundnessEstimate(
        epsilon=best,
        weight_cap=weight_cap,
        attained_at=BitVector(domain, best_witness) if best is not None else None,
        kind=kind,
    )


def soundness(
    code: CssCode, side: Side, weight_cap: int = 4, kernel_budget: int = 20
) -> SoundnessEstimate:
    """Locally-testable-code soundness over errors of weight <= weight_cap.

    For side z the candidates are Z-type operators checked against the X
    generators; epsilon is None when no candidate violates any generator
    (the infimum over an empty set).
    """
    require_valid(code)
    m = code.x_gens if side == "z" else code.z_gens
    return _min_violation_ratio(m, weight_cap, kernel_budget, f"soundness_{side}")


def cosoundness(
    code: CssCode, side: Side, weight_cap: int = 4, kernel_budget: int = 20
) -> SoundnessEstimate:
    """Ratio of product-operator weight to minimal generator-combination size.

    Candidates are combinations of same-type generators with a nonzero
    product; the coset minimum quotients out redundancies among generators.
    """
    require_valid(code)
    m = (code.z_gens if side == "z" else code.x_gens).transpose()
    return _min_violation_ratio(m, weight_cap, kernel_budget, f"cosoundness_{side}")
