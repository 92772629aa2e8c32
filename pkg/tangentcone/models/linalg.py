from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from tangentcone.models.polynomial import ScalarLike, to_vector
from tangentcone.utils.exceptions import DimensionMismatchError

Vector = Tuple[Fraction, ...]


def zero_vector(dim: int) -> Vector:
    return tuple(Fraction(0) for _ in range(dim))


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(Fraction(1 if i == index else 0) for i in range(dim))


def combine(coefficients: Sequence[Fraction], vectors: Sequence[Sequence[Fraction]], dim: int) -> Vector:
    """Linear combination sum_i c_i v_i in a space of the given dimension."""
    out = [Fraction(0)] * dim
    for c, v in zip(coefficients, vectors):
        if c:
            for i, x in enumerate(v):
                if x:
                    out[i] += c * x
    return tuple(out)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    if len(a) != len(b):
        raise DimensionMismatchError(f"vectors of length {len(a)} and {len(b)}")
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class ExactMatrix:
    """Dense row-major matrix of rationals."""

    __slots__ = ('rows', 'cols', 'entries')

    def __init__(self, rows: int, cols: int, entries: Sequence[ScalarLike]):
        entries = to_vector(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatchError(
                f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: Optional[int] = None) -> 'ExactMatrix':
        rows = [to_vector(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix without rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError(f"row of length {len(r)} in a matrix with {cols} columns")
        return cls(len(rows), cols, [x for r in rows for x in r])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int) -> 'ExactMatrix':
        columns = [to_vector(c) for c in columns]
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def identity(cls, n: int) -> 'ExactMatrix':
        return cls.from_rows([unit_vector(n, i) for i in range(n)], cols=n)

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    def transpose(self) -> 'ExactMatrix':
        return ExactMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def apply(self, vector: Sequence[ScalarLike]) -> Vector:
        vector = to_vector(vector)
        if len(vector) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} for a matrix with {self.cols} columns"
            )
        return tuple(dot(self.row(i), vector) for i in range(self.rows))

    def __matmul__(self, other: 'ExactMatrix') -> 'ExactMatrix':
        if self.cols != other.rows:
            raise DimensionMismatchError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = [other.column(j) for j in range(other.cols)]
        return ExactMatrix.from_rows(
            [[dot(self.row(i), c) for c in cols] for i in range(self.rows)], cols=other.cols
        )

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of K^ambient_dim given by linearly independent vectors.

    Construct through ``ExactLinearAlgebra.span`` unless the vectors are
    already known to be independent.
    """

    ambient_dim: int
    basis: Tuple[Vector, ...] = ()

    def __post_init__(self):
        for v in self.basis:
            if len(v) != self.ambient_dim:
                raise DimensionMismatchError(
                    f"basis vector of length {len(v)} in a space of dimension {self.ambient_dim}"
                )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis


@dataclass(frozen=True)
class AffineSolution:
    """Result of solving A x = b: canonical particular solution plus kernel."""

    consistent: bool
    particular: Optional[Vector]
    kernel: SubspaceBasis
    rank: int = 0

    @property
    def kernel_dim(self) -> int:
        return self.kernel.dim


@dataclass(frozen=True)
class RankKernel:
    rank: int
    kernel: SubspaceBasis
    pivots: Tuple[int, ...] = field(default=())
