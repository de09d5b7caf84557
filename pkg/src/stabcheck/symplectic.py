"""Binary symplectic encoding of phaseless Pauli operators and GF(2) linear algebra.

An n-qubit Pauli operator, with its global phase discarded, is encoded as a
pair of length-n bit vectors (x | z): bit j of x is set when the factor on
qubit j is X or Y, bit j of z is set when it is Z or Y.  So X -> (1|0),
Z -> (0|1), Y -> (1|1), I -> (0|0).  Qubit j lives in bit j of the backing
integers, and the leftmost character of a Pauli string is qubit 1 (bit 0).

Two operators commute exactly when the symplectic product
x_a.z_b + z_a.x_b vanishes mod 2, and the phaseless product of two
operators is the XOR of their encodings.

Bit vectors and matrices here are plain Python integers used as bitsets:
a matrix row is one int, bit j = column j.  That keeps rank / kernel /
subset-independence loops allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "BitVector",
    "SymplecticVector",
    "PauliOperator",
    "PauliParseError",
    "Gf2Matrix",
    "RowReduction",
    "RowBasis",
    "SubsetSearch",
    "pauli_from_string",
    "pauli_to_string",
    "symplectic_weight",
    "commutes",
    "pauli_product",
    "row_reduce",
    "gf2_invert",
    "kernel_basis",
    "columns_subset_independent",
    "smallest_dependent_subset",
    "ALL_INDEPENDENT",
    "DEPENDENT_FOUND",
    "BUDGET_EXHAUSTED",
]


def _parity(v: int) -> int:
    return v.bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """Length-n bit vector; bit j of `bits` is coordinate j."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"negative length {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits 0x{self.bits:x} do not fit in {self.n} coordinates")

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n, 0)

    @classmethod
    def from01(cls, text: str) -> BitVector:
        """Parse a 0/1 string; the leftmost character is coordinate 0."""
        bits = 0
        for j, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise ValueError(f"unexpected character {ch!r} at position {j + 1}")
        return cls(len(text), bits)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> BitVector:
        bits = 0
        for j in indices:
            if not 0 <= j < n:
                raise ValueError(f"index {j} out of range for length {n}")
            bits |= 1 << j
        return cls(n, bits)

    def get(self, j: int) -> int:
        if not 0 <= j < self.n:
            raise ValueError(f"index {j} out of range for length {self.n}")
        return (self.bits >> j) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: BitVector) -> int:
        """Inner product mod 2."""
        self._check_len(other)
        return _parity(self.bits & other.bits)

    def __xor__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self.n, self.bits ^ other.bits)

    def __and__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self.n, self.bits & other.bits)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> j) & 1 else "0" for j in range(self.n))

    def __str__(self) -> str:
        return self.to01()

    def _check_len(self, other: BitVector) -> None:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")


@dataclass(frozen=True)
class SymplecticVector:
    """Element of GF(2)^2n written as an (x | z) pair of length-n halves."""

    x: BitVector
    z: BitVector

    def __post_init__(self) -> None:
        if self.x.n != self.z.n:
            raise ValueError(f"half lengths differ: {self.x.n} vs {self.z.n}")

    @classmethod
    def zero(cls, n: int) -> SymplecticVector:
        return cls(BitVector.zeros(n), BitVector.zeros(n))

    @classmethod
    def from_masks(cls, n: int, x: int, z: int) -> SymplecticVector:
        return cls(BitVector(n, x), BitVector(n, z))

    @property
    def n(self) -> int:
        return self.x.n

    def __xor__(self, other: SymplecticVector) -> SymplecticVector:
        return SymplecticVector(self.x ^ other.x, self.z ^ other.z)

    def symplectic_product(self, other: SymplecticVector) -> int:
        """x_a.z_b + z_a.x_b mod 2; zero exactly when the operators commute."""
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} vs {other.n}")
        return self.x.dot(other.z) ^ self.z.dot(other.x)

    def is_zero(self) -> bool:
        return self.x.bits == 0 and self.z.bits == 0


@dataclass(frozen=True)
class PauliOperator:
    """Phaseless n-qubit Pauli operator backed by its symplectic vector."""

    v: SymplecticVector

    @classmethod
    def identity(cls, n: int) -> PauliOperator:
        return cls(SymplecticVector.zero(n))

    @classmethod
    def from_masks(cls, n: int, x: int, z: int) -> PauliOperator:
        return cls(SymplecticVector.from_masks(n, x, z))

    @classmethod
    def single(cls, n: int, qubit: int, letter: str) -> PauliOperator:
        """One non-identity factor at 0-based `qubit`."""
        lx, lz = _LETTER_TO_XZ[letter]
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for {n} qubits")
        return cls.from_masks(n, lx << qubit, lz << qubit)

    @property
    def n(self) -> int:
        return self.v.n

    @property
    def x(self) -> BitVector:
        return self.v.x

    @property
    def z(self) -> BitVector:
        return self.v.z

    @property
    def weight(self) -> int:
        return symplectic_weight(self.v)

    @property
    def is_identity(self) -> bool:
        return self.v.is_zero()

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        return pauli_product(self, other)

    def commutes_with(self, other: PauliOperator) -> bool:
        return commutes(self, other)

    def __str__(self) -> str:
        return pauli_to_string(self)


class PauliParseError(ValueError):
    """Raised on malformed Pauli strings; carries the 1-based offending position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


_LETTER_TO_XZ = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_XZ_TO_LETTER = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_PHASE_TOKENS = ("+i", "-i", "+", "-", "i")


def pauli_from_string(text: str) -> PauliOperator:
    """Parse a Pauli string of I/X/Y/Z letters.

    A single leading phase token (+, -, i, +i, -i) is accepted and discarded;
    phases carry no information at the symplectic level.  The leftmost letter
    is qubit 1.  Anything else raises PauliParseError naming the 1-based
    position in the original string.
    """
    offset = 0
    for tok in _PHASE_TOKENS:
        if text.startswith(tok):
            offset = len(tok)
            break
    body = text[offset:]
    if not body:
        raise PauliParseError("empty Pauli string", position=offset + 1)
    x = 0
    z = 0
    for j, ch in enumerate(body):
        pair = _LETTER_TO_XZ.get(ch)
        if pair is None:
            pos = offset + j + 1
            raise PauliParseError(
                f"unexpected character {ch!r} at position {pos}", position=pos
            )
        x |= pair[0] << j
        z |= pair[1] << j
    return PauliOperator.from_masks(len(body), x, z)


def pauli_to_string(p: PauliOperator) -> str:
    """Render as bare I/X/Y/Z letters (no phase); inverse of pauli_from_string."""
    xb, zb = p.x.bits, p.z.bits
    return "".join(
        _XZ_TO_LETTER[((xb >> j) & 1, (zb >> j) & 1)] for j in range(p.n)
    )


def symplectic_weight(v: SymplecticVector) -> int:
    """Number of qubits acted on non-trivially: w(x) + w(z) - w(x AND z)."""
    return (v.x.bits | v.z.bits).bit_count()


def commutes(a: PauliOperator, b: PauliOperator) -> bool:
    return a.v.symplectic_product(b.v) == 0


def pauli_product(a: PauliOperator, b: PauliOperator) -> PauliOperator:
    """Phaseless product; XOR of the symplectic vectors."""
    return PauliOperator(a.v ^ b.v)


@dataclass(frozen=True)
class Gf2Matrix:
    """Matrix over GF(2); each row is an int with bit j = column j."""

    cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.cols < 0:
            raise ValueError(f"negative column count {self.cols}")
        for i, r in enumerate(self.rows):
            if r < 0 or r >> self.cols:
                raise ValueError(f"row {i} does not fit in {self.cols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[int], cols: int) -> Gf2Matrix:
        return cls(cols, tuple(rows))

    @classmethod
    def from01(cls, rows: Sequence[str]) -> Gf2Matrix:
        if not rows:
            raise ValueError("no rows given; column count would be ambiguous")
        vecs = [BitVector.from01(r) for r in rows]
        cols = vecs[0].n
        for i, v in enumerate(vecs):
            if v.n != cols:
                raise ValueError(f"row {i} has length {v.n}, expected {cols}")
        return cls(cols, tuple(v.bits for v in vecs))

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls(n, tuple(1 << j for j in range(n)))

    @classmethod
    def zeros(cls, nrows: int, cols: int) -> Gf2Matrix:
        return cls(cols, (0,) * nrows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j as an int with bit i = row i."""
        if not 0 <= j < self.cols:
            raise ValueError(f"column {j} out of range")
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix(self.nrows, tuple(self.columns()))

    def mat_vec(self, v: int) -> int:
        """Product with a column vector (int over cols); bit i = <row i, v>."""
        out = 0
        for i, r in enumerate(self.rows):
            out |= _parity(r & v) << i
        return out

    def vec_mat(self, v: int) -> int:
        """Product of a row vector (int over nrows) with this matrix."""
        out = 0
        i = 0
        while v:
            if v & 1:
                out ^= self.rows[i]
            v >>= 1
            i += 1
        return out

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        if self.cols != other.nrows:
            raise ValueError(f"shape mismatch: {self.cols} cols vs {other.nrows} rows")
        return Gf2Matrix(other.cols, tuple(other.vec_mat(r) for r in self.rows))

    def submatrix_columns(self, cols_idx: Sequence[int]) -> Gf2Matrix:
        """New matrix whose column j is column cols_idx[j] of this one."""
        out_rows = []
        for r in self.rows:
            nr = 0
            for jj, j in enumerate(cols_idx):
                nr |= ((r >> j) & 1) << jj
            out_rows.append(nr)
        return Gf2Matrix(len(cols_idx), tuple(out_rows))

    def to01(self) -> list[str]:
        return [BitVector(self.cols, r).to01() for r in self.rows]


@dataclass(frozen=True)
class RowReduction:
    """Result of Gaussian elimination to reduced row echelon form.

    `transform` is an invertible nrows x nrows matrix with
    transform @ input == reduced, so the record replays (and, inverted,
    undoes) the reduction.
    """

    reduced: Gf2Matrix
    rank: int
    pivot_cols: tuple[int, ...]
    transform: Gf2Matrix


def row_reduce(m: Gf2Matrix) -> RowReduction:
    """Reduced row echelon form over GF(2); zero rows sink to the bottom."""
    work = list(m.rows)
    tags = [1 << i for i in range(len(work))]  # rows of the transform
    rank = 0
    pivots: list[int] = []
    for col in range(m.cols):
        sel = None
        for i in range(rank, len(work)):
            if (work[i] >> col) & 1:
                sel = i
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        tags[rank], tags[sel] = tags[sel], tags[rank]
        for i in range(len(work)):
            if i != rank and (work[i] >> col) & 1:
                work[i] ^= work[rank]
                tags[i] ^= tags[rank]
        pivots.append(col)
        rank += 1
    return RowReduction(
        reduced=Gf2Matrix(m.cols, tuple(work)),
        rank=rank,
        pivot_cols=tuple(pivots),
        transform=Gf2Matrix(len(work), tuple(tags)),
    )


def gf2_invert(m: Gf2Matrix) -> Gf2Matrix:
    """Inverse of a square invertible matrix."""
    if m.nrows != m.cols:
        raise ValueError(f"not square: {m.nrows} x {m.cols}")
    red = row_reduce(m)
    if red.rank != m.cols:
        raise ValueError("matrix is singular")
    return red.transform


def kernel_basis(m: Gf2Matrix) -> tuple[BitVector, ...]:
    """Basis of {v : m @ v = 0}; one vector per non-pivot column."""
    red = row_reduce(m)
    pivot_set = set(red.pivot_cols)
    basis = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, pc in enumerate(red.pivot_cols):
            if (red.reduced.rows[i] >> free) & 1:
                v |= 1 << pc
        basis.append(BitVector(m.cols, v))
    return tuple(basis)


class RowBasis:
    """Incremental GF(2) row space: add vectors, reduce, test membership."""

    def __init__(self, width: int, rows: Iterable[int] = ()):
        self.width = width
        self._pivot_rows: dict[int, int] = {}
        for r in rows:
            self.add(r)

    def reduce(self, v: int) -> int:
        """Residue of v after elimination against the stored pivot rows."""
        while v:
            p = v.bit_length() - 1
            row = self._pivot_rows.get(p)
            if row is None:
                return v
            v ^= row
        return 0

    def add(self, v: int) -> bool:
        """Insert v; returns True when v was independent of the basis."""
        v = self.reduce(v)
        if v == 0:
            return False
        self._pivot_rows[v.bit_length() - 1] = v
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def __len__(self) -> int:
        return len(self._pivot_rows)


def columns_subset_independent(m: Gf2Matrix, cols_idx: Sequence[int]) -> bool:
    """True when the given columns are linearly independent.

    Incremental elimination with early exit on the first dependent column.
    Indices must be distinct and in range.
    """
    seen = set()
    for j in cols_idx:
        if not 0 <= j < m.cols:
            raise ValueError(f"column {j} out of range")
        if j in seen:
            raise ValueError(f"column {j} given twice")
        seen.add(j)
    basis = RowBasis(m.nrows)
    for j in cols_idx:
        if not basis.add(m.column(j)):
            return False
    return True


ALL_INDEPENDENT = "all_independent"
DEPENDENT_FOUND = "dependent_found"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SubsetSearch:
    """Outcome of a bounded search for a dependent column subset.

    `dependent` is None unless outcome == "dependent_found"; when set it is a
    minimal dependent subset (every proper subset is independent), sorted
    ascending.  `visited` counts column insertions performed, the quantity
    capped by the budget.
    """

    outcome: str
    dependent: tuple[int, ...] | None
    visited: int


def smallest_dependent_subset(
    m: Gf2Matrix, max_size: int, *, budget: int = 10**7
) -> SubsetSearch:
    """Search all column subsets of size <= max_size for a dependent one.

    Subsets are enumerated size by size, each size in colex order, so the
    first hit is a smallest dependent subset; because every smaller size was
    exhausted first, a hit is always minimal (a circuit).  Supersets of
    dependent subsets are never visited.  Returns "budget_exhausted" instead
    of a verdict once `visited` would pass the budget.
    """
    if max_size < 0:
        raise ValueError(f"negative subset size {max_size}")
    if max_size > m.cols:
        raise ValueError(f"subset size {max_size} exceeds {m.cols} columns")
    cols = m.columns()
    ncols = m.cols
    visited = 0

    def reduce_against(pivots: dict[int, int], v: int) -> int:
        while v:
            row = pivots.get(v.bit_length() - 1)
            if row is None:
                break
            v ^= row
        return v

    def search_level(size: int) -> tuple[int, ...] | None:
        # Colex DFS: choose the largest element first and iterate it
        # ascending, so subsets complete in colex order and the first hit is
        # the colex-least circuit of this size.  Zero residues cannot occur
        # at interior depths because every smaller size was exhausted first.
        nonlocal visited
        pivots: dict[int, int] = {}

        def extend(bound: int, depth: int, chosen: list[int]) -> tuple[int, ...] | None:
            nonlocal visited
            for c in range(depth - 1, bound):
                visited += 1
                if visited > budget:
                    raise _BudgetExhausted
                res = reduce_against(pivots, cols[c])
                if res == 0:
                    return tuple(sorted(chosen + [c]))
                if depth > 1:
                    key = res.bit_length() - 1
                    pivots[key] = res
                    hit = extend(c, depth - 1, chosen + [c])
                    del pivots[key]
                    if hit is not None:
                        return hit
            return None

        return extend(ncols, size, [])

    try:
        for size in range(1, max_size + 1):
            hit = search_level(size)
            if hit is not None:
                return SubsetSearch(DEPENDENT_FOUND, hit, visited)
    except _BudgetExhausted:
        return SubsetSearch(BUDGET_EXHAUSTED, None, visited)
    return SubsetSearch(ALL_INDEPENDENT, None, visited)


class _BudgetExhausted(Exception):
    pass
