"""Reference codes used throughout the tests and the CLI."""

from __future__ import annotations

import random

from .f2 import BitMatrix, kernel_basis
from .model import CssCode


def steane() -> CssCode:
    """[[7,1,3]] code; X and Z checks are both the Hamming(7,4) matrix."""
    rows = [[0, 2, 4, 6], [1, 2, 5, 6], [3, 4, 5, 6]]
    return CssCode.from_supports(7, rows, rows)


def toric(L: int) -> CssCode:
    """Toric code on an L x L torus: 2L^2 qubits on edges, k=2, distance L.

    X generators sit on vertices, Z generators on faces.
    """
    if L < 2:
        raise ValueError("toric code needs L >= 2")

    def h(i: int, j: int) -> int:  # edge (i,j)-(i,j+1)
        return (i % L) * L + (j % L)

    def v(i: int, j: int) -> int:  # edge (i,j)-(i+1,j)
        return L * L + (i % L) * L + (j % L)

    stars = [
        [h(i, j), h(i, j - 1), v(i, j), v(i - 1, j)]
        for i in range(L)
        for j in range(L)
    ]
    plaquettes = [
        [h(i, j), h(i + 1, j), v(i, j), v(i, j + 1)]
        for i in range(L)
        for j in range(L)
    ]
    return CssCode.from_supports(2 * L * L, stars, plaquettes)


def repetition_triangle() -> CssCode:
    """Three qubits, Z generators on the edges of a triangle, no X side.

    The three generators multiply to the identity, so the redundancy
    kernel is nontrivial; k = 1.
    """
    return CssCode.from_supports(3, [], [[0, 1], [1, 2], [0, 2]])


def window_grid(L: int = 4) -> CssCode:
    """Z generators are all 2x2 windows on an L x L torus of qubits.

    Every qubit sits in exactly 4 windows of weight 4; there are no X
    generators, so any copy assignment question is purely about Z loads.
    """
    if L < 2:
        raise ValueError("window grid needs L >= 2")

    def q(i: int, j: int) -> int:
        return (i % L) * L + (j % L)

    windows = [
        [q(i, j), q(i, j + 1), q(i + 1, j), q(i + 1, j + 1)]
        for i in range(L)
        for j in range(L)
    ]
    return CssCode.from_supports(L * L, [], windows)


def random_css(
    n: int,
    n_x: int,
    seed: int,
    n_z: int | None = None,
    max_weight: int | None = None,
) -> CssCode:
    """Seeded random commuting code: random nonzero X rows, Z rows drawn
    as combinations of the X kernel so commutation holds by construction."""
    if n < 1:
        raise ValueError("need at least one qubit")
    rng = random.Random(seed)
    if n_z is None:
        n_z = n_x

    x_rows = []
    for _ in range(n_x):
        while True:
            if max_weight is None:
                word = rng.getrandbits(n)
            else:
                weight = rng.randint(1, min(max_weight, n))
                word = 0
                for j in rng.sample(range(n), weight):
                    word |= 1 << j
            if word:
                break
        x_rows.append(word)
    x_gens = BitMatrix.from_words(n, x_rows)

    basis = kernel_basis(x_gens)
    z_rows = []
    if basis:
        for _ in range(n_z):
            while True:
                combo = rng.getrandbits(len(basis))
                if combo:
                    break
            word = 0
            for i, b in enumerate(basis):
                if (combo >> i) & 1:
                    word ^= b.bits
            z_rows.append(word)
    return CssCode(n, x_gens, BitMatrix.from_words(n, z_rows))


def fixture(name: str, **kwargs) -> CssCode:
    """Dispatch by fixture name; used by the CLI."""
    if name == "steane":
        return steane()
    if name == "toric":
        return toric(kwargs["L"])
    if name == "repetition_triangle":
        return repetition_triangle()
    if name == "window_grid":
        return window_grid(kwargs.get("L", 4))
    if name == "random_css":
        return random_css(
            kwargs["n"],
            kwargs["n_x"],
            kwargs["seed"],
            n_z=kwargs.get("n_z"),
            max_weight=kwargs.get("max_weight"),
        )
    raise ValueError(f"unknown fixture {name!r}")
