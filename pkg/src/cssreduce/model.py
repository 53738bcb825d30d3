"""CSS code and chain-complex data model.

Orientation conventions, fixed everywhere to avoid transpose bugs:

* generators are matrix rows, qubits are columns;
* boundary matrices act on column vectors; the boundary map out of
  position p+1 has dim(C_p) rows and dim(C_{p+1}) columns;
* chain positions count from the bottom, so a 3-term code complex has
  X generators at position 0, qubits at position 1, Z generators at 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .f2 import BitMatrix, product_is_zero, rank

if TYPE_CHECKING:
    from .distance import DistanceResult


class InvalidCodeError(ValueError):
    """Raised when an operation requires a commuting CSS code and gets none."""


@dataclass(frozen=True)
class CssCode:
    """A CSS stabilizer code: X/Z generator matrices over n qubits.

    Commutation (x_gens @ z_gens.T == 0) is *not* enforced at construction;
    use `validate`.  Labels are provenance tags carried through transforms
    and are ignored for equality.
    """

    n: int
    x_gens: BitMatrix
    z_gens: BitMatrix
    qubit_labels: tuple[str, ...] | None = field(default=None, compare=False)
    x_labels: tuple[str, ...] | None = field(default=None, compare=False)
    z_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.x_gens.cols != self.n or self.z_gens.cols != self.n:
            raise ValueError("generator matrices must have n columns")
        if self.qubit_labels is not None and len(self.qubit_labels) != self.n:
            raise ValueError("qubit label count must equal n")
        if self.x_labels is not None and len(self.x_labels) != self.x_gens.rows:
            raise ValueError("X label count must equal number of X generators")
        if self.z_labels is not None and len(self.z_labels) != self.z_gens.rows:
            raise ValueError("Z label count must equal number of Z generators")

    @classmethod
    def from_supports(
        cls,
        n: int,
        x_supports: list[list[int]] | tuple,
        z_supports: list[list[int]] | tuple,
        **labels,
    ) -> CssCode:
        return cls(
            n,
            BitMatrix.from_supports(n, x_supports),
            BitMatrix.from_supports(n, z_supports),
            **labels,
        )

    @property
    def n_x(self) -> int:
        return self.x_gens.rows

    @property
    def n_z(self) -> int:
        return self.z_gens.rows

    def x_support(self, i: int) -> tuple[int, ...]:
        return self.x_gens.row_support(i)

    def z_support(self, i: int) -> tuple[int, ...]:
        return self.z_gens.row_support(i)

    def qubit_label(self, q: int) -> str:
        return self.qubit_labels[q] if self.qubit_labels is not None else str(q)

    def x_label(self, i: int) -> str:
        return self.x_labels[i] if self.x_labels is not None else f"x{i}"

    def z_label(self, i: int) -> str:
        return self.z_labels[i] if self.z_labels is not None else f"z{i}"


@dataclass(frozen=True)
class ValidationReport:
    commutes: bool
    anticommuting_pairs: tuple[tuple[int, int], ...]
    zero_weight_x: tuple[int, ...]
    zero_weight_z: tuple[int, ...]
    duplicate_x: tuple[int, ...]
    duplicate_z: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.commutes

    def warnings(self) -> list[str]:
        out = []
        for i in self.zero_weight_x:
            out.append(f"zero-weight generator: X row {i}")
        for i in self.zero_weight_z:
            out.append(f"zero-weight generator: Z row {i}")
        for i in self.duplicate_x:
            out.append(f"duplicate generator: X row {i}")
        for i in self.duplicate_z:
            out.append(f"duplicate generator: Z row {i}")
        return out


def _duplicates(words: tuple[int, ...]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    dups = []
    for i, w in enumerate(words):
        if w in seen:
            dups.append(i)
        else:
            seen[w] = i
    return tuple(dups)


def validate(code: CssCode, max_pairs: int = 20) -> ValidationReport:
    """Check commutation and collect degeneracy warnings.

    Never raises; a failed commutation check is reported and causes every
    transform to reject the code.
    """
    pairs = []
    commutes = True
    for i, wx in enumerate(code.x_gens.row_words):
        for j, wz in enumerate(code.z_gens.row_words):
            if (wx & wz).bit_count() & 1:
                commutes = False
                if len(pairs) < max_pairs:
                    pairs.append((i, j))
    return ValidationReport(
        commutes=commutes,
        anticommuting_pairs=tuple(pairs),
        zero_weight_x=tuple(i for i, w in enumerate(code.x_gens.row_words) if w == 0),
        zero_weight_z=tuple(i for i, w in enumerate(code.z_gens.row_words) if w == 0),
        duplicate_x=_duplicates(code.x_gens.row_words),
        duplicate_z=_duplicates(code.z_gens.row_words),
    )


def require_valid(code: CssCode) -> None:
    if not product_is_zero(code.x_gens, code.z_gens):
        raise InvalidCodeError("X and Z generators do not commute")


@dataclass(frozen=True)
class CodeParams:
    """The code parameter vector: counts, weights, degrees, distances."""

    n: int
    k: int
    n_x: int
    n_z: int
    w_x: int
    w_z: int
    q_x: int
    q_z: int
    w_total_x: int
    w_total_z: int
    d_x: "DistanceResult | None" = None
    d_z: "DistanceResult | None" = None

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "n_x": self.n_x,
            "n_z": self.n_z,
            "w_x": self.w_x,
            "w_z": self.w_z,
            "q_x": self.q_x,
            "q_z": self.q_z,
            "w_total_x": self.w_total_x,
            "w_total_z": self.w_total_z,
        }
        for name, d in (("d_x", self.d_x), ("d_z", self.d_z)):
            if d is not None:
                out[name] = {"value": d.value, "exact": d.exact, "cap": d.cap}
        return out


def k_of(code: CssCode) -> int:
    """Logical qubit count, always computed from ranks."""
    return code.n - rank(code.x_gens) - rank(code.z_gens)


def params(code: CssCode, *, distance_cap: int | None = None) -> CodeParams:
    """Exact parameter vector; distances only when a search cap is given."""
    require_valid(code)
    k = k_of(code)
    d_x = d_z = None
    if distance_cap is not None:
        from .distance import min_logical_weight

        d_x = min_logical_weight(code, "x", cap=distance_cap)
        d_z = min_logical_weight(code, "z", cap=distance_cap)
    return CodeParams(
        n=code.n,
        k=k,
        n_x=code.n_x,
        n_z=code.n_z,
        w_x=code.x_gens.max_row_weight(),
        w_z=code.z_gens.max_row_weight(),
        q_x=code.x_gens.max_col_degree(),
        q_z=code.z_gens.max_col_degree(),
        w_total_x=code.x_gens.total_weight(),
        w_total_z=code.z_gens.total_weight(),
        d_x=d_x,
        d_z=d_z,
    )


def dualize(code: CssCode) -> CssCode:
    """Swap the X and Z sides; an involution that preserves k."""
    require_valid(code)
    return CssCode(
        code.n,
        code.z_gens,
        code.x_gens,
        qubit_labels=code.qubit_labels,
        x_labels=code.z_labels,
        z_labels=code.x_labels,
    )


@dataclass(frozen=True)
class ChainComplex:
    """Sequence of GF(2) boundary maps with boundary-of-boundary zero.

    dims lists space dimensions from the top of the chain down to the
    bottom; boundaries[i] maps the space of dims[i] into dims[i+1].
    """

    dims: tuple[int, ...]
    boundaries: tuple[BitMatrix, ...]

    def __post_init__(self) -> None:
        if len(self.dims) == 0:
            raise ValueError("a chain complex needs at least one space")
        if len(self.boundaries) != len(self.dims) - 1:
            raise ValueError("need exactly one boundary map per adjacent pair")
        for i, b in enumerate(self.boundaries):
            if b.cols != self.dims[i] or b.rows != self.dims[i + 1]:
                raise ValueError(
                    f"boundary {i} has shape {b.rows}x{b.cols}, expected "
                    f"{self.dims[i + 1]}x{self.dims[i]}"
                )
        for i in range(len(self.boundaries) - 1):
            if not self.boundaries[i + 1].matmul(self.boundaries[i]).is_zero():
                raise ValueError("boundary of boundary is not zero")

    @property
    def length(self) -> int:
        return len(self.dims)

    def dim_at(self, position: int) -> int:
        """Dimension of the space at `position`, counting 0 = bottom."""
        if not 0 <= position < self.length:
            raise ValueError(f"position {position} out of range")
        return self.dims[self.length - 1 - position]

    def boundary_from(self, position: int) -> BitMatrix | None:
        """The map out of `position` (into position-1), None at the bottom."""
        if not 0 <= position < self.length:
            raise ValueError(f"position {position} out of range")
        if position == 0:
            return None
        return self.boundaries[self.length - 1 - position]


def to_chain_complex(code: CssCode) -> ChainComplex:
    """3-term complex (Z generators, qubits, X generators), qubits at position 1."""
    require_valid(code)
    return ChainComplex(
        dims=(code.n_z, code.n, code.n_x),
        boundaries=(code.z_gens.transpose(), code.x_gens),
    )


def from_chain_complex(c: ChainComplex, q: int) -> CssCode:
    """Code with qubits at interior position q: X from the map out of q,
    Z from the transpose of the map into q."""
    if not 1 <= q <= c.length - 2:
        raise ValueError(
            f"qubit position {q} must be interior (1..{c.length - 2})"
        )
    x_gens = c.boundary_from(q)
    z_gens = c.boundary_from(q + 1).transpose()
    assert x_gens is not None
    return CssCode(c.dim_at(q), x_gens, z_gens)


def homology_dimension(c: ChainComplex, q: int) -> int:
    """dim ker(boundary out of q) - rank(boundary into q); missing maps are zero."""
    out_map = c.boundary_from(q)
    ker = c.dim_at(q) - (rank(out_map) if out_map is not None else 0)
    in_map = c.boundary_from(q + 1) if q + 1 < c.length else None
    return ker - (rank(in_map) if in_map is not None else 0)


def _product_blocks(a: ChainComplex, b: ChainComplex, r: int) -> list[tuple[int, int, int, int]]:
    """Blocks (q, s, dim_a, dim_b) of the degree-r product space, ascending q."""
    blocks = []
    for q in range(max(0, r - (b.length - 1)), min(a.length - 1, r) + 1):
        s = r - q
        blocks.append((q, s, a.dim_at(q), b.dim_at(s)))
    return blocks


def product_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Tensor product complex with boundary d(x (x) y) = dx (x) y + x (x) dy.

    Basis order inside degree r: blocks by ascending left position q, and
    within a block the left factor index is the major index.
    """
    top = (a.length - 1) + (b.length - 1)
    dims_by_pos = [sum(da * db for _, _, da, db in _product_blocks(a, b, r)) for r in range(top + 1)]

    boundaries = []
    for r in range(top, 0, -1):
        src_blocks = _product_blocks(a, b, r)
        dst_blocks = _product_blocks(a, b, r - 1)
        dst_offset = {}
        off = 0
        for q, s, da, db in dst_blocks:
            dst_offset[(q, s)] = off
            off += da * db
        row_words = [0] * dims_by_pos[r - 1]

        col = 0
        for q, s, da, db in src_blocks:
            da_map = a.boundary_from(q)
            db_map = b.boundary_from(s)
            da_cols = da_map.transpose().row_words if da_map is not None else None
            db_cols = db_map.transpose().row_words if db_map is not None else None
            for i in range(da):
                for j in range(db):
                    if da_cols is not None:
                        base = dst_offset[(q - 1, s)]
                        dbm = b.dim_at(s)
                        w = da_cols[i]
                        while w:
                            low = w & -w
                            ip = low.bit_length() - 1
                            row_words[base + ip * dbm + j] |= 1 << col
                            w ^= low
                    if db_cols is not None:
                        base = dst_offset[(q, s - 1)]
                        dbm = b.dim_at(s - 1)
                        w = db_cols[j]
                        while w:
                            low = w & -w
                            jp = low.bit_length() - 1
                            row_words[base + i * dbm + jp] |= 1 << col
                            w ^= low
                    col += 1
        boundaries.append(BitMatrix(dims_by_pos[r - 1], dims_by_pos[r], tuple(row_words)))

    dims_top_down = tuple(dims_by_pos[r] for r in range(top, -1, -1))
    return ChainComplex(dims=dims_top_down, boundaries=tuple(boundaries))
