"""Copy-index assignment for thickening.

Chooses the interval position k for each Z generator: seeded uniform
choice, resampling of overloaded qubits until no qubit sees more than w
copied generators at one position, and a deterministic greedy fallback.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import CssCode, require_valid
from .transforms import Assignment


@dataclass(frozen=True)
class AssignmentOutcome:
    assignment: Assignment
    max_copied_load: int
    resample_rounds: int
    method: str  # "random_lll" or "greedy"
    target_met: bool
    target: int | None = None


def _incidence(code: CssCode) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(code.n)]
    for j in range(code.n_z):
        for q in code.z_support(j):
            inc[q].append(j)
    return inc


def max_copied_load(code: CssCode, assignment: Assignment) -> int:
    """Max over qubit/position pairs of copied Z generators landing there."""
    worst = 0
    for gens in _incidence(code):
        counts: dict[int, int] = {}
        for j in gens:
            k = assignment.choice[j]
            counts[k] = counts.get(k, 0) + 1
        if counts:
            worst = max(worst, max(counts.values()))
    return worst


def random_assignment(n_z: int, l: int, seed: int) -> Assignment:
    """Independent uniform copy indices from a seeded generator."""
    if l < 2:
        raise ValueError("copy count must be at least 2")
    rng = random.Random(seed)
    return Assignment(l, tuple(rng.randrange(l) + 1 for _ in range(n_z)))


def _first_bad_qubit(
    incidence: list[list[int]], choice: list[int], w: int, l: int
) -> int | None:
    """Lowest qubit index with more than w generators at one position."""
    for q, gens in enumerate(incidence):
        if len(gens) <= w:
            continue
        counts = [0] * (l + 1)
        for j in gens:
            counts[choice[j]] += 1
            if counts[choice[j]] > w:
                return q
    return None


def lll_resample(
    code: CssCode,
    l: int,
    w: int,
    seed: int,
    max_rounds: int | None = None,
) -> AssignmentOutcome:
    """Start uniform, then repeatedly resample every generator incident on
    the first overloaded qubit until no qubit exceeds w copied generators
    at a single position, or max_rounds is exhausted (then the best
    assignment seen is returned)."""
    require_valid(code)
    if l < 2:
        raise ValueError("copy count must be at least 2")
    if w < 1:
        raise ValueError("load target must be at least 1")
    if max_rounds is None:
        max_rounds = 100 * max(code.n_z, 1)
    rng = random.Random(seed)
    choice = [rng.randrange(l) + 1 for _ in range(code.n_z)]
    incidence = _incidence(code)

    def load_of(ch: list[int]) -> int:
        return max_copied_load(code, Assignment(l, tuple(ch)))

    best_choice = list(choice)
    best_load = load_of(choice)
    rounds = 0
    while True:
        bad = _first_bad_qubit(incidence, choice, w, l)
        if bad is None:
            return AssignmentOutcome(
                assignment=Assignment(l, tuple(choice)),
                max_copied_load=load_of(choice),
                resample_rounds=rounds,
                method="random_lll",
                target_met=True,
                target=w,
            )
        if rounds == max_rounds:
            break
        rounds += 1
        for j in incidence[bad]:
            choice[j] = rng.randrange(l) + 1
        load = load_of(choice)
        if load < best_load:
            best_load = load
            best_choice = list(choice)
    return AssignmentOutcome(
        assignment=Assignment(l, tuple(best_choice)),
        max_copied_load=best_load,
        resample_rounds=rounds,
        method="random_lll",
        target_met=best_load <= w,
        target=w,
    )


def greedy_assignment(code: CssCode, l: int, w: int | None = None) -> AssignmentOutcome:
    """Deterministic fallback: generators in ascending order, each taking
    the position that minimizes the resulting worst load over its qubits,
    ties to the smallest position."""
    require_valid(code)
    if l < 2:
        raise ValueError("copy count must be at least 2")
    loads = [[0] * (l + 1) for _ in range(code.n)]
    choice = []
    for j in range(code.n_z):
        supp = code.z_support(j)
        best_k = 1
        best_cost = None
        for k in range(1, l + 1):
            cost = max((loads[q][k] + 1 for q in supp), default=0)
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best_k = k
        choice.append(best_k)
        for q in supp:
            loads[q][best_k] += 1
    assignment = Assignment(l, tuple(choice))
    load = max_copied_load(code, assignment)
    return AssignmentOutcome(
        assignment=assignment,
        max_copied_load=load,
        resample_rounds=0,
        method="greedy",
        target_met=(load <= w) if w is not None else True,
        target=w,
    )
