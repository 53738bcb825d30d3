"""Elementary weight-reduction transforms on CSS codes.

Four operations: splitting a heavy X generator into a chain of weight-3
generators over new "cut" qubits; thickening a code by an interval of
length l with one retained copy of each Z generator; the full product
code with every copy retained (the stabilizer-group oracle for thicken);
and an alternative qubit split that caps the X degree instead.

Orderings are fixed for reproducibility: split processes generators in
ascending row order and appends cut qubits / chain generators at the end;
thicken lays qubits out as all (q,k) copy blocks with k as the major
index, then all [s,k] link blocks, again k-major.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .f2 import BitMatrix
from .model import ChainComplex, CodeParams, CssCode, require_valid


@dataclass(frozen=True)
class SplitStep:
    """One generator split: which row, its weight, and what got appended."""

    gen_index: int
    weight: int
    cut_qubits: tuple[int, ...]
    new_gen_indices: tuple[int, ...]


@dataclass(frozen=True)
class SplitTrace:
    steps: tuple[SplitStep, ...]
    z_matching: tuple[int, ...]  # original Z row -> matching Z row (positional)

    @property
    def delta(self) -> int:
        return sum(s.weight - 3 for s in self.steps)


@dataclass(frozen=True)
class Assignment:
    """Copy index k in 1..l for each Z generator, used by thicken."""

    l: int
    choice: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError("copy count must be positive")
        for k in self.choice:
            if not 1 <= k <= self.l:
                raise ValueError(f"copy index {k} outside 1..{self.l}")

    @classmethod
    def all_ones(cls, l: int, n_z: int) -> Assignment:
        return cls(l, (1,) * n_z)


def _chain_from(start: int, supp: tuple[int, ...], z_cols: list[int]) -> tuple[int, ...]:
    """Greedy co-occurrence chain over the support, starting at `start`."""
    remaining = [q for q in supp if q != start]
    order = [start]
    while remaining:
        last = z_cols[order[-1]]
        best_count = max((z_cols[q] & last).bit_count() for q in remaining)
        pick = min(q for q in remaining if (z_cols[q] & last).bit_count() == best_count)
        order.append(pick)
        remaining.remove(pick)
    return tuple(order)


def _split_gains(order: tuple[int, ...], z_words: tuple[int, ...]) -> list[int]:
    """Cut qubits each Z generator would pick up for this chain ordering."""
    w = len(order)
    gains = []
    for wz in z_words:
        par = (wz >> order[0]) & 1
        count = 0
        for m in range(1, w - 2):
            par ^= (wz >> order[m]) & 1
            count += par
        gains.append(count)
    return gains


def _split_order(code: CssCode, supp: tuple[int, ...]) -> tuple[int, ...]:
    """Pick a chain ordering of the support that keeps the matched Z
    generators short.

    A matched generator gains one cut qubit per position where its overlap
    with the chain prefix has odd parity, so the ordering matters.  Score a
    candidate ordering by the resulting weights of the touched Z generators,
    sorted descending (so the worst weight is minimized first, then the next,
    and so on), then by total gain, then by the ordering itself; all
    orderings are tried up to weight 6, greedy co-occurrence chains from
    each start qubit above that.  Deterministic, and because splitting is
    sequential this balances gains across generators.
    """
    if code.n_z == 0 or len(supp) <= 3:
        return supp
    z_cols = code.z_gens.transpose().row_words
    mask = 0
    for q in supp:
        mask |= 1 << q
    touched = [
        (i, wz) for i, wz in enumerate(code.z_gens.row_words) if wz & mask
    ]
    if not touched:
        return supp
    z_words = tuple(wz for _, wz in touched)
    weights = [wz.bit_count() for wz in z_words]

    if len(supp) <= 6:
        candidates = itertools.permutations(supp)
    else:
        candidates = (_chain_from(start, supp, z_cols) for start in supp)

    best = None
    for order in candidates:
        gains = _split_gains(order, z_words)
        profile = sorted((weights[i] + g for i, g in enumerate(gains)), reverse=True)
        score = (profile, sum(gains), order)
        if best is None or score < best:
            best = score
    return tuple(best[2])


def split_one_generator(code: CssCode, gen_index: int) -> tuple[CssCode, SplitStep]:
    """Replace one X generator of weight w >= 4 by a chain of w-2 weight-3
    generators over w-3 new cut qubits; every Z generator R is replaced by
    R times Z on the cut qubits where R anticommutes with the chain prefix.
    """
    require_valid(code)
    supp = _split_order(code, code.x_support(gen_index))
    w = len(supp)
    if w < 4:
        raise ValueError(f"nothing to split: generator weight {w} < 4")
    n = code.n
    n_new = n + w - 3
    cuts = tuple(range(n, n_new))

    chain: list[list[int]] = []
    chain.append([supp[0], supp[1], cuts[0]])
    for j in range(1, w - 3):
        chain.append([cuts[j - 1], supp[j + 1], cuts[j]])
    chain.append([cuts[w - 4], supp[w - 2], supp[w - 1]])

    kept = [i for i in range(code.n_x) if i != gen_index]
    x_words = [code.x_gens.row_words[i] for i in kept]
    for genq in chain:
        word = 0
        for q in genq:
            word |= 1 << q
        x_words.append(word)

    z_words = []
    for wz in code.z_gens.row_words:
        word = wz
        # running parity of the overlap of R with the chain prefix q_1..q_{m+1}
        par = (wz >> supp[0]) & 1
        for m in range(1, w - 2):
            par ^= (wz >> supp[m]) & 1
            if par:
                word |= 1 << cuts[m - 1]
        z_words.append(word)

    glabel = code.x_label(gen_index)
    qubit_labels = tuple(code.qubit_label(q) for q in range(n)) + tuple(
        f"{glabel}({m})" for m in range(1, w - 2)
    )
    x_labels = tuple(code.x_label(i) for i in kept) + tuple(
        f"{glabel}:{t}" for t in range(1, w - 1)
    )
    z_labels = tuple(code.z_label(i) for i in range(code.n_z))

    new_code = CssCode(
        n_new,
        BitMatrix.from_words(n_new, x_words),
        BitMatrix.from_words(n_new, z_words),
        qubit_labels=qubit_labels,
        x_labels=x_labels,
        z_labels=z_labels,
    )
    step = SplitStep(
        gen_index=gen_index,
        weight=w,
        cut_qubits=cuts,
        new_gen_indices=tuple(range(len(kept), len(kept) + w - 2)),
    )
    return new_code, step


def split_all_x_generators(code: CssCode) -> tuple[CssCode, SplitTrace]:
    """Split X generators in ascending row order until all have weight <= 3."""
    require_valid(code)
    steps = []
    current = code
    while True:
        idx = next(
            (i for i in range(current.n_x) if current.x_gens.row_weight(i) >= 4),
            None,
        )
        if idx is None:
            break
        current, step = split_one_generator(current, idx)
        steps.append(step)
    return current, SplitTrace(steps=tuple(steps), z_matching=tuple(range(code.n_z)))


def interval_complex(l: int) -> ChainComplex:
    """Chain complex of an interval with l points and l-1 edges."""
    if l < 2:
        raise ValueError("interval needs at least 2 points")
    boundary = BitMatrix.from_supports(l - 1, [[j for j in (i - 1, i) if 0 <= j < l - 1] for i in range(l)])
    return ChainComplex(dims=(l - 1, l), boundaries=(boundary,))


def _thickened_layout(code: CssCode, l: int):
    """Index helpers for the thickened qubit layout: (q,k) blocks k-major,
    then [s,k] link blocks k-major; all k are 1-based."""
    n = code.n

    def qub(q: int, k: int) -> int:
        return (k - 1) * n + q

    def link(s: int, k: int) -> int:
        return n * l + (k - 1) * code.n_x + s

    return qub, link


def _thickened_x_side(code: CssCode, l: int):
    """X generator supports and labels, shared by thicken and the full product."""
    qub, link = _thickened_layout(code, l)
    supports = []
    labels = []
    for k in range(1, l + 1):
        for s in range(code.n_x):
            supp = [qub(q, k) for q in code.x_support(s)]
            if k >= 2:
                supp.append(link(s, k - 1))
            if k <= l - 1:
                supp.append(link(s, k))
            supports.append(supp)
            labels.append(f"({code.x_label(s)},{k})")
    return supports, labels


def _link_z_side(code: CssCode, l: int):
    qub, link = _thickened_layout(code, l)
    x_on_qubit = [[] for _ in range(code.n)]
    for s in range(code.n_x):
        for q in code.x_support(s):
            x_on_qubit[q].append(s)
    supports = []
    labels = []
    for k in range(1, l):
        for q in range(code.n):
            supports.append([qub(q, k), qub(q, k + 1)] + [link(s, k) for s in x_on_qubit[q]])
            labels.append(f"[{code.qubit_label(q)},{k}]")
    return supports, labels


def _thickened_qubit_labels(code: CssCode, l: int) -> tuple[str, ...]:
    labels = [
        f"({code.qubit_label(q)},{k})" for k in range(1, l + 1) for q in range(code.n)
    ]
    labels += [
        f"[{code.x_label(s)},{k}]" for k in range(1, l) for s in range(code.n_x)
    ]
    return tuple(labels)


def thicken(code: CssCode, assignment: Assignment) -> CssCode:
    """Product with an interval of length l, keeping one copy of each Z
    generator at its assigned position plus all link generators."""
    require_valid(code)
    l = assignment.l
    if l < 2:
        raise ValueError("thickening needs at least 2 copies")
    if len(assignment.choice) != code.n_z:
        raise ValueError(
            f"assignment size mismatch: {len(assignment.choice)} choices for "
            f"{code.n_z} Z generators"
        )
    qub, _ = _thickened_layout(code, l)
    n_new = code.n * l + code.n_x * (l - 1)

    x_supports, x_labels = _thickened_x_side(code, l)
    z_supports = []
    z_labels = []
    for j in range(code.n_z):
        k = assignment.choice[j]
        z_supports.append([qub(q, k) for q in code.z_support(j)])
        z_labels.append(f"({code.z_label(j)},{k})")
    link_supports, link_labels = _link_z_side(code, l)

    return CssCode(
        n_new,
        BitMatrix.from_supports(n_new, x_supports),
        BitMatrix.from_supports(n_new, z_supports + link_supports),
        qubit_labels=_thickened_qubit_labels(code, l),
        x_labels=tuple(x_labels),
        z_labels=tuple(z_labels + link_labels),
    )


def full_product_code(code: CssCode, l: int) -> CssCode:
    """Product with an interval keeping *every* copy of every Z generator.

    Same qubit layout and X matrix as thicken; its Z row space is the
    stabilizer-group oracle that any assignment must reproduce.
    """
    require_valid(code)
    if l < 2:
        raise ValueError("product needs at least 2 copies")
    qub, _ = _thickened_layout(code, l)
    n_new = code.n * l + code.n_x * (l - 1)

    x_supports, x_labels = _thickened_x_side(code, l)
    z_supports = []
    z_labels = []
    for k in range(1, l + 1):
        for j in range(code.n_z):
            z_supports.append([qub(q, k) for q in code.z_support(j)])
            z_labels.append(f"({code.z_label(j)},{k})")
    link_supports, link_labels = _link_z_side(code, l)

    return CssCode(
        n_new,
        BitMatrix.from_supports(n_new, x_supports),
        BitMatrix.from_supports(n_new, z_supports + link_supports),
        qubit_labels=_thickened_qubit_labels(code, l),
        x_labels=tuple(x_labels),
        z_labels=tuple(z_labels + link_labels),
    )


def alt_qubit_split_all(code: CssCode) -> CssCode:
    """Replace every qubit of X degree w >= 4 by w copies joined by a chain
    of weight-2 X generators; incident X generators are rewired one per
    copy, and Z generators act on all copies."""
    require_valid(code)
    degs = code.x_gens.col_degrees()
    split_qs = [q for q in range(code.n) if degs[q] >= 4]
    incident: dict[int, list[int]] = {q: [] for q in split_qs}
    for s in range(code.n_x):
        for q in code.x_support(s):
            if q in incident:
                incident[q].append(s)

    new_index: dict[int, int] = {}
    next_idx = 0
    qubit_labels = []
    for q in range(code.n):
        if degs[q] < 4:
            new_index[q] = next_idx
            qubit_labels.append(code.qubit_label(q))
            next_idx += 1
    copy_start: dict[int, int] = {}
    for q in split_qs:
        copy_start[q] = next_idx
        for a in range(degs[q]):
            qubit_labels.append(f"{code.qubit_label(q)}({a + 1})")
        next_idx += degs[q]
    n_new = next_idx

    copy_of: dict[tuple[int, int], int] = {}
    for q in split_qs:
        for rank_a, s in enumerate(incident[q]):
            copy_of[(q, s)] = copy_start[q] + rank_a

    x_supports = []
    x_labels = []
    for s in range(code.n_x):
        supp = []
        for q in code.x_support(s):
            supp.append(copy_of[(q, s)] if q in copy_start else new_index[q])
        x_supports.append(supp)
        x_labels.append(code.x_label(s))
    for q in split_qs:
        for a in range(degs[q] - 1):
            x_supports.append([copy_start[q] + a, copy_start[q] + a + 1])
            x_labels.append(f"{code.qubit_label(q)}:{a + 1}")

    z_supports = []
    for j in range(code.n_z):
        supp = []
        for q in code.z_support(j):
            if q in copy_start:
                supp.extend(copy_start[q] + a for a in range(degs[q]))
            else:
                supp.append(new_index[q])
        z_supports.append(supp)

    return CssCode(
        n_new,
        BitMatrix.from_supports(n_new, x_supports),
        BitMatrix.from_supports(n_new, z_supports),
        qubit_labels=tuple(qubit_labels),
        x_labels=tuple(x_labels),
        z_labels=tuple(code.z_label(j) for j in range(code.n_z)),
    )


def _as_fraction(x) -> Fraction:
    """Exact rational view of x; float input is read as its decimal literal."""
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def _iroot_ceil(x: int, k: int) -> int:
    """Smallest integer r with r**k >= x, for x >= 0, k >= 1."""
    if x <= 1:
        return x
    r = 1 << -(-x.bit_length() // k)  # upper seed: 2^ceil(bits/k) >= x^(1/k)
    while True:
        candidate = ((k - 1) * r + x // r ** (k - 1)) // k
        if candidate >= r:
            break
        r = candidate
    return r if r**k >= x else r + 1


def lll_parameters(p: CodeParams, epsilon) -> tuple[int, int]:
    """The (w, l) choice of the randomized-assignment analysis:
    l = ceil((w_x q_z)^(1+eps)), w = ceil(2/eps) + 1, both exact.

    Pass epsilon as a Fraction or string for exact ceiling behaviour at
    rational boundaries; floats are interpreted as decimal literals.
    """
    eps = _as_fraction(epsilon)
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    wq = p.w_x * p.q_z
    if wq < 3:
        raise ValueError(f"w_x * q_z = {wq} must be at least 3")
    exponent = 1 + eps
    if exponent.numerator * wq.bit_length() > 10**8:
        raise ValueError("epsilon too large for exact evaluation")
    l = _iroot_ceil(wq**exponent.numerator, exponent.denominator)
    w = -((-2 * eps.denominator) // eps.numerator) + 1
    return w, l


# e rounded up so the condition is never falsely permissive
_E_UPPER = Fraction(27182818285, 10**10)


def check_lll_condition(
    p: CodeParams, w: int, l: int, variant: str = "combined"
) -> bool:
    """Exact evaluation of the resampling feasibility inequality.

    variant "combined": event degree from the split-then-thicken pipeline,
    using w_x*q_z and min(w_x*q_z/2, n + w_total_x).
    variant "thicken_only": thickening alone, using q_z and min(q_z*w_z, n).
    """
    if w < 1:
        raise ValueError("w must be at least 1")
    if l < 2:
        raise ValueError("l must be at least 2")
    if variant == "combined":
        balls = p.w_x * p.q_z
        degree = min(Fraction(p.w_x * p.q_z, 2), Fraction(p.n + p.w_total_x))
    elif variant == "thicken_only":
        balls = p.q_z
        degree = min(Fraction(p.q_z * p.w_z), Fraction(p.n))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    lhs = 2 * _E_UPPER * math.comb(balls, w + 1) * Fraction(1, l ** (w + 1)) * degree * l
    return lhs <= 1
