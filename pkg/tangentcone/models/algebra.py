from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Mapping, Optional, Sequence, Tuple

from tangentcone.models.linalg import ExactMatrix, SubspaceBasis, Vector, unit_vector, zero_vector
from tangentcone.models.polynomial import ScalarLike, to_vector
from tangentcone.utils.exceptions import DimensionMismatchError, PreconditionError

BLOCK_KEYS = ('11^1', '11^2', '12^1', '12^2', '22^1', '22^2')


def tensor_index(i: int, j: int, k: int, n: int) -> int:
    """Position of c_ij^k (0-based) in the flat structure-constant vector."""
    return (i * n + j) * n + k


class BilinearMap:
    """A bilinear map K^n x K^n -> K^n given by its structure constants.

    ``coefficients[tensor_index(i, j, k, n)]`` is the e_k coordinate of
    e_i e_j.
    """

    __slots__ = ('n', 'coefficients')

    def __init__(self, n: int, coefficients: Sequence[ScalarLike]):
        coefficients = to_vector(coefficients)
        if len(coefficients) != n ** 3:
            raise DimensionMismatchError(
                f"a bilinear map on K^{n} has {n ** 3} structure constants, got {len(coefficients)}"
            )
        self.n = n
        self.coefficients: Vector = coefficients

    @classmethod
    def zero(cls, n: int) -> 'BilinearMap':
        return cls(n, zero_vector(n ** 3))

    @classmethod
    def from_products(cls, n: int, products: Mapping[Tuple[int, int], Sequence[ScalarLike]],
                      symmetric: bool = True):
        """Build from {(i, j): e_i e_j} with 0-based indices; (j, i) is filled in when symmetric."""
        coeffs = [Fraction(0)] * n ** 3
        for (i, j), value in products.items():
            value = to_vector(value)
            if len(value) != n:
                raise DimensionMismatchError(f"product e{i + 1}e{j + 1} has {len(value)} coordinates, expected {n}")
            pairs = {(i, j), (j, i)} if symmetric else {(i, j)}
            for a, b in pairs:
                for k, c in enumerate(value):
                    coeffs[tensor_index(a, b, k, n)] = c
        return cls(n, coeffs)

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Sequence[ScalarLike]]):
        return cls(n, [c for i, j in product(range(n), repeat=2) for c in to_vector(fn(i, j))])

    def basis_product(self, i: int, j: int) -> Vector:
        start = tensor_index(i, j, 0, self.n)
        return self.coefficients[start:start + self.n]

    def product(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        n = self.n
        out = [Fraction(0)] * n
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                start = tensor_index(i, j, 0, n)
                for k in range(n):
                    a = self.coefficients[start + k]
                    if a:
                        out[k] += c * a
        return tuple(out)

    __call__ = product

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.basis_product(i, j) == self.basis_product(j, i)
                   for i in range(n) for j in range(i + 1, n))

    def asymmetric_pairs(self):
        n = self.n
        return [(i, j) for i in range(n) for j in range(i + 1, n)
                if self.basis_product(i, j) != self.basis_product(j, i)]

    def associator(self, x, y, z) -> Vector:
        """(xy)z - x(yz)"""
        left = self.product(self.product(x, y), z)
        right = self.product(x, self.product(y, z))
        return tuple(a - b for a, b in zip(left, right))

    @property
    def is_associative(self) -> bool:
        units = [unit_vector(self.n, i) for i in range(self.n)]
        return all(not any(self.associator(a, b, c)) for a, b, c in product(units, repeat=3))

    @property
    def is_nilpotent3(self) -> bool:
        units = [unit_vector(self.n, i) for i in range(self.n)]
        return all(not any(self.product(self.product(a, b), c)) for a, b, c in product(units, repeat=3))

    def change_basis(self, P: ExactMatrix, Q: ExactMatrix) -> 'BilinearMap':
        """m'(a, b) = Q m(P e_a, P e_b), with Q the inverse of P."""
        n = self.n
        columns = [P.column(a) for a in range(n)]
        return BilinearMap.from_function(
            n, lambda a, b: Q.apply(self.product(columns[a], columns[b]))
        )

    def __add__(self, other: 'BilinearMap') -> 'BilinearMap':
        if self.n != other.n:
            raise DimensionMismatchError(f"bilinear maps on K^{self.n} and K^{other.n}")
        return BilinearMap(self.n, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    def scale(self, factor: ScalarLike) -> 'BilinearMap':
        c = to_vector([factor])[0]
        return BilinearMap(self.n, [c * a for a in self.coefficients])

    def __sub__(self, other: 'BilinearMap') -> 'BilinearMap':
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return (self.n, self.coefficients) == (other.n, other.coefficients)

    def __hash__(self):
        return hash((self.n, self.coefficients))

    def __repr__(self):
        nonzero = sum(1 for c in self.coefficients if c)
        return f"{type(self).__name__}(n={self.n}, {nonzero} nonzero constants)"


class AlgebraPoint(BilinearMap):
    """A commutative multiplication table, i.e. a point of the structure-constant space."""

    __slots__ = ()

    def __init__(self, n: int, coefficients: Sequence[ScalarLike]):
        super().__init__(n, coefficients)
        bad = self.asymmetric_pairs()
        if bad:
            raise PreconditionError(
                [f"table is not commutative: e{i + 1}e{j + 1} != e{j + 1}e{i + 1}" for i, j in bad]
            )

    @classmethod
    def from_map(cls, m: BilinearMap) -> 'AlgebraPoint':
        return cls(m.n, m.coefficients)

    def change_basis(self, P: ExactMatrix, Q: ExactMatrix) -> 'AlgebraPoint':
        return AlgebraPoint.from_map(super().change_basis(P, Q))


class BlockMap:
    """Linear map K^left (x) K^right -> K^out, one block of a map in split coordinates."""

    __slots__ = ('left', 'right', 'out', 'coefficients')

    def __init__(self, left: int, right: int, out: int, coefficients: Optional[Sequence[ScalarLike]] = None):
        size = left * right * out
        coefficients = zero_vector(size) if coefficients is None else to_vector(coefficients)
        if len(coefficients) != size:
            raise DimensionMismatchError(
                f"a {left}x{right}->{out} block needs {size} coefficients, got {len(coefficients)}"
            )
        self.left = left
        self.right = right
        self.out = out
        self.coefficients: Vector = coefficients

    @classmethod
    def from_function(cls, left: int, right: int, out: int, fn: Callable[[int, int], Sequence[Fraction]]):
        coeffs = []
        for a, b in product(range(left), range(right)):
            value = to_vector(fn(a, b))
            if len(value) != out:
                raise DimensionMismatchError(f"block value of length {len(value)}, expected {out}")
            coeffs.extend(value)
        return cls(left, right, out, coeffs)

    @property
    def shape(self) -> Tuple[int, int, int]:
        return self.left, self.right, self.out

    def index(self, a: int, b: int, c: int) -> int:
        return (a * self.right + b) * self.out + c

    def basis_value(self, a: int, b: int) -> Vector:
        start = self.index(a, b, 0)
        return self.coefficients[start:start + self.out]

    def apply(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        if len(x) != self.left or len(y) != self.right:
            raise DimensionMismatchError(
                f"block of shape {self.shape} applied to vectors of length {len(x)} and {len(y)}"
            )
        out = [Fraction(0)] * self.out
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if not yb:
                    continue
                c = xa * yb
                for k, v in enumerate(self.basis_value(a, b)):
                    if v:
                        out[k] += c * v
        return tuple(out)

    __call__ = apply

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def is_symmetric(self) -> bool:
        if self.left != self.right:
            return False
        return all(self.basis_value(a, b) == self.basis_value(b, a)
                   for a in range(self.left) for b in range(a + 1, self.left))

    def __eq__(self, other):
        if not isinstance(other, BlockMap):
            return NotImplemented
        return (self.shape, self.coefficients) == (other.shape, other.coefficients)

    def __hash__(self):
        return hash((self.shape, self.coefficients))

    def __repr__(self):
        return f"BlockMap({self.left}x{self.right}->{self.out})"


@dataclass(frozen=True)
class Splitting:
    """Basis change exhibiting N = N1 + N2 with N2 = N^2.

    Columns of P are the new basis in original coordinates: first the d
    vectors spanning N1, then the r vectors spanning N2. Q is P^-1.
    """

    n: int
    d: int
    r: int
    P: ExactMatrix
    Q: ExactMatrix

    def to_split(self, vector: Sequence[ScalarLike]) -> Vector:
        return self.Q.apply(vector)

    def from_split(self, vector: Sequence[ScalarLike]) -> Vector:
        return self.P.apply(vector)

    @property
    def n1_basis(self) -> Tuple[Vector, ...]:
        return tuple(self.P.column(a) for a in range(self.d))

    @property
    def n2_basis(self) -> Tuple[Vector, ...]:
        return tuple(self.P.column(self.d + k) for k in range(self.r))

    def split_map(self, m: BilinearMap) -> BilinearMap:
        return m.change_basis(self.P, self.Q)

    def unsplit_map(self, m: BilinearMap) -> BilinearMap:
        return m.change_basis(self.Q, self.P)


@dataclass(frozen=True)
class SymMapBlocks:
    """The blocks f_ij^k of a map in split coordinates, keyed '11^1', '12^2', ..."""

    d: int
    r: int
    blocks: Dict[str, BlockMap] = field(default_factory=dict)

    def __getitem__(self, key: str) -> BlockMap:
        return self.blocks[key]

    def nonzero_keys(self) -> Tuple[str, ...]:
        return tuple(k for k in BLOCK_KEYS if not self.blocks[k].is_zero)


@dataclass(frozen=True)
class ObstructionChain:
    f11: BlockMap
    f12: BlockMap
    g12: BlockMap
    g22: BlockMap
    f12_kernel_dim: int = 0

    @property
    def is_zero(self) -> bool:
        return all(m.is_zero for m in (self.f11, self.f12, self.g12, self.g22))


@dataclass(frozen=True)
class ChainInfeasible:
    stage: str
    detail: str = ''


@dataclass(frozen=True)
class AlgebraInvariants:
    square: SubspaceBasis
    annihilator: SubspaceBasis

    def in_anr(self, r: int) -> bool:
        return self.square.dim <= r <= self.annihilator.dim

    def in_smooth_locus(self, r: int) -> bool:
        return self.square.dim == r == self.annihilator.dim


@dataclass(frozen=True)
class QuadraticObstructionResult:
    feasible: bool
    star: Optional[BilinearMap] = None
    kernel_dim: int = 0


@dataclass(frozen=True)
class LinearConstraint:
    """delta(star) = rhs, the constraint attached to one map * of the lsym family."""

    star_map: BilinearMap
    matrix: ExactMatrix
    rhs: Vector


@dataclass(frozen=True)
class Thm1Report:
    verdict: bool
    certificate: str
    kernel_dim: int
    hull_dim: int
    restricted_rank: int = 0
    witness: Optional[BlockMap] = None
    checked: int = 0


@dataclass(frozen=True)
class DimIdentityReport:
    d: int
    r: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class TangentDecompositionReport:
    tangent_dim: int
    lsym_dim: int
    orbit_dim: int
    f_dim: int
    sum_dim: int
    contains: bool
    f11_surjective: bool
    kernel_matches: bool

    @property
    def equality_holds(self) -> bool:
        return self.contains and self.f11_surjective and self.kernel_matches


@dataclass(frozen=True)
class CorollaryReport:
    holds: bool
    forced: Tuple[int, ...]
    equations: Tuple[str, ...]
