"""Bit-packed linear algebra over the field with two elements.

Vectors and matrix rows are stored as Python integers; coordinate ``i`` is
bit ``i`` (index 0 is the lowest bit).  Text form lists coordinates from
index 0, so ``GF2Vec.from_str("100")`` is the first standard basis vector
of length 3.

Matrices act on column vectors: column ``j`` of a matrix is the image of
the ``j``-th basis vector.  A linear form is stored as the vector of its
values on the basis, and precomposition ``form ∘ M`` is ``M.lmul(form)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ShapeError(ValueError):
    """Raised when operand dimensions do not match."""


def parity(x: int) -> int:
    return x.bit_count() & 1


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True)
class GF2Vec:
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ShapeError(f"negative length {self.n}")
        if self.bits >> self.n:
            raise ShapeError(f"bits beyond length {self.n}: {self.bits:#x}")

    @classmethod
    def zero(cls, n: int) -> "GF2Vec":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "GF2Vec":
        return cls(n, _mask(n))

    @classmethod
    def unit(cls, n: int, i: int) -> "GF2Vec":
        if not 0 <= i < n:
            raise ShapeError(f"index {i} out of range for length {n}")
        return cls(n, 1 << i)

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "GF2Vec":
        values = list(values)
        bits = 0
        for i, x in enumerate(values):
            if x & 1:
                bits |= 1 << i
        return cls(len(values), bits)

    @classmethod
    def from_str(cls, text: str) -> "GF2Vec":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bitstring: {text!r}")
        return cls.from_list(int(ch) for ch in text)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.n))

    def __add__(self, other: "GF2Vec") -> "GF2Vec":
        self._check(other)
        return GF2Vec(self.n, self.bits ^ other.bits)

    __sub__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "GF2Vec") -> None:
        if not isinstance(other, GF2Vec):
            raise TypeError(f"expected GF2Vec, got {type(other).__name__}")
        if other.n != self.n:
            raise ShapeError(f"length mismatch: {self.n} vs {other.n}")

    def dot(self, other: "GF2Vec") -> int:
        self._check(other)
        return parity(self.bits & other.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> i) & 1]

    def to_list(self) -> list[int]:
        return list(self)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"GF2Vec('{self}')"


def all_vectors(n: int) -> Iterator[GF2Vec]:
    """All 2**n vectors of length n, in ascending bitstring order."""
    for bits in range(1 << n):
        # ascending bitstring order reads index 0 as the most significant digit
        yield GF2Vec(n, _reverse_bits(bits, n))


def _reverse_bits(x: int, n: int) -> int:
    out = 0
    for _ in range(n):
        out = (out << 1) | (x & 1)
        x >>= 1
    return out


@dataclass(frozen=True)
class GF2Mat:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ShapeError(f"expected {self.rows} rows, got {len(self.data)}")
        acc = 0
        for r in self.data:
            acc |= r
        if acc >> self.cols:
            bad = next(r for r in self.data if r >> self.cols)
            raise ShapeError(f"row {bad:#x} wider than {self.cols} columns")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Mat":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "GF2Mat":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int] | str], cols: int | None = None) -> "GF2Mat":
        vecs = [GF2Vec.from_str(r) if isinstance(r, str) else GF2Vec.from_list(r) for r in rows]
        if cols is None:
            if not vecs:
                raise ShapeError("cannot infer column count of an empty matrix")
            cols = vecs[0].n
        for v in vecs:
            if v.n != cols:
                raise ShapeError(f"ragged rows: expected {cols} columns, got {v.n}")
        return cls(len(vecs), cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_columns(cls, columns: Sequence[GF2Vec], rows: int | None = None) -> "GF2Mat":
        if rows is None:
            if not columns:
                raise ShapeError("cannot infer row count of an empty matrix")
            rows = columns[0].n
        data = [0] * rows
        for j, c in enumerate(columns):
            if c.n != rows:
                raise ShapeError(f"column {j} has length {c.n}, expected {rows}")
            b = c.bits
            while b:
                low = b & -b
                data[low.bit_length() - 1] |= 1 << j
                b ^= low
        return cls(rows, len(columns), tuple(data))

    @classmethod
    def from_str(cls, text: str) -> "GF2Mat":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        return cls.from_rows(lines)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.data[i] >> j) & 1

    def row(self, i: int) -> GF2Vec:
        return GF2Vec(self.cols, self.data[i])

    def column(self, j: int) -> GF2Vec:
        bits = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                bits |= 1 << i
        return GF2Vec(self.rows, bits)

    def columns(self) -> list[GF2Vec]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "GF2Mat":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            bit = 1 << i
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= bit
                r ^= low
        return GF2Mat(self.cols, self.rows, tuple(out))

    def __add__(self, other: "GF2Mat") -> "GF2Mat":
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return GF2Mat(self.rows, self.cols, tuple(a ^ b for a, b in zip(self.data, other.data)))

    __sub__ = __add__

    def __matmul__(self, other):
        if isinstance(other, GF2Mat):
            return mat_mul(self, other)
        if isinstance(other, GF2Vec):
            return mat_vec(self, other)
        return NotImplemented

    def lmul(self, form: GF2Vec) -> GF2Vec:
        """Row vector times matrix, i.e. the linear form ``form ∘ self``."""
        if form.n != self.rows:
            raise ShapeError(f"form of length {form.n} against {self.rows} rows")
        acc = 0
        b = form.bits
        while b:
            low = b & -b
            acc ^= self.data[low.bit_length() - 1]
            b ^= low
        return GF2Vec(self.cols, acc)

    def rank(self) -> int:
        return rank(self)

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.rows))


def mat_vec(a: GF2Mat, v: GF2Vec) -> GF2Vec:
    if a.cols != v.n:
        raise ShapeError(f"matrix with {a.cols} columns against vector of length {v.n}")
    bits = 0
    x = v.bits
    for i, r in enumerate(a.data):
        if (r & x).bit_count() & 1:
            bits |= 1 << i
    return GF2Vec(a.rows, bits)


def mat_mul(a: GF2Mat, b: GF2Mat) -> GF2Mat:
    """Exact product over GF(2)."""
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    brows = b.data
    out = []
    for r in a.data:
        acc = 0
        while r:
            low = r & -r
            acc ^= brows[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return GF2Mat(a.rows, b.cols, tuple(out))


def _echelon(data: list[int], ncols: int) -> list[int]:
    """Gauss-Jordan elimination in place; returns pivot columns by row."""
    pivots = []
    row = 0
    for col in range(ncols):
        bit = 1 << col
        for k in range(row, len(data)):
            if data[k] & bit:
                break
        else:
            continue
        data[row], data[k] = data[k], data[row]
        for k in range(len(data)):
            if k != row and data[k] & bit:
                data[k] ^= data[row]
        pivots.append(col)
        row += 1
        if row == len(data):
            break
    return pivots


def rank(a: GF2Mat) -> int:
    return len(_echelon(list(a.data), a.cols))


def mat_inv(a: GF2Mat) -> GF2Mat | None:
    """Inverse of a square matrix, or ``None`` when it is singular."""
    if not a.is_square():
        raise ShapeError(f"cannot invert non-square {a.shape}")
    n = a.rows
    # augment each row with the identity in the high half
    aug = [r | (1 << (n + i)) for i, r in enumerate(a.data)]
    pivots = _echelon(aug, n)
    if len(pivots) < n:
        return None
    return GF2Mat(n, n, tuple(r >> n for r in aug))


def kernel(a: GF2Mat) -> list[GF2Vec]:
    """Basis of the null space {x : a x = 0}."""
    data = list(a.data)
    pivots = _echelon(data, a.cols)
    pivset = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivset:
            continue
        bits = 1 << free
        for row, pc in enumerate(pivots):
            if (data[row] >> free) & 1:
                bits |= 1 << pc
        basis.append(GF2Vec(a.cols, bits))
    return basis


def solve(a: GF2Mat, b: GF2Vec) -> tuple[GF2Vec, list[GF2Vec]] | None:
    """Solve ``a x = b``.

    Returns ``(particular, kernel_basis)`` or ``None`` if the system is
    inconsistent.  Every solution is the particular one plus a combination
    of the kernel basis.
    """
    if a.rows != b.n:
        raise ShapeError(f"matrix with {a.rows} rows against right-hand side of length {b.n}")
    n = a.cols
    aug = [r | (((b.bits >> i) & 1) << n) for i, r in enumerate(a.data)]
    pivots = _echelon(aug, n)
    for r in aug[len(pivots):]:
        if r >> n:
            return None
    x = 0
    for row, pc in enumerate(pivots):
        if (aug[row] >> n) & 1:
            x |= 1 << pc
    return GF2Vec(n, x), kernel(a)


def span(vectors: Sequence[GF2Vec], n: int | None = None) -> set[GF2Vec]:
    """All linear combinations of ``vectors`` (desk scale only)."""
    if n is None:
        if not vectors:
            raise ShapeError("cannot infer the length of an empty span")
        n = vectors[0].n
    out = {0}
    for v in vectors:
        out |= {x ^ v.bits for x in out}
    return {GF2Vec(n, x) for x in out}


def in_span(v: GF2Vec, vectors: Sequence[GF2Vec]) -> bool:
    if not vectors:
        return not v
    return solve(GF2Mat.from_columns(list(vectors), rows=v.n), v) is not None
