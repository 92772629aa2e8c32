from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from tangentcone.models.polynomial import MultiPoly, ScalarLike, to_scalar, to_vector
from tangentcone.utils.exceptions import DimensionMismatchError, PreconditionError


@dataclass(frozen=True)
class OrderResult:
    """Order of vanishing at t=0, or ``above_truncation`` when every
    coefficient up to ``trunc`` is zero."""

    value: Optional[int]
    trunc: int

    @classmethod
    def exact(cls, value: int, trunc: int) -> 'OrderResult':
        return cls(value, trunc)

    @classmethod
    def above(cls, trunc: int) -> 'OrderResult':
        return cls(None, trunc)

    @property
    def above_truncation(self) -> bool:
        return self.value is None

    @property
    def lower_bound(self) -> int:
        return self.trunc + 1 if self.value is None else self.value

    def at_least(self, m: int) -> bool:
        return self.lower_bound >= m

    def __str__(self):
        if self.value is None:
            return f"≥ {self.trunc + 1} (above truncation)"
        return str(self.value)


def min_order(results: Iterable[OrderResult]) -> OrderResult:
    results = list(results)
    if not results:
        raise ValueError("no orders to compare")
    exact = [r for r in results if not r.above_truncation]
    if exact:
        return min(exact, key=lambda r: r.value)
    return OrderResult.above(min(r.trunc for r in results))


class Jet:
    """Truncated power series c_0 + c_1 t + ... + c_D t^D."""

    __slots__ = ('trunc', 'coeffs')

    def __init__(self, coeffs: Sequence[ScalarLike], trunc: int):
        if trunc < 0:
            raise ValueError("truncation order must be nonnegative")
        values = list(to_vector(coeffs))[:trunc + 1]
        values += [Fraction(0)] * (trunc + 1 - len(values))
        self.trunc = trunc
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: ScalarLike, trunc: int) -> 'Jet':
        return cls([value], trunc)

    @classmethod
    def zero(cls, trunc: int) -> 'Jet':
        return cls([], trunc)

    @classmethod
    def parameter(cls, trunc: int) -> 'Jet':
        """The jet of t itself."""
        return cls([0, 1], trunc)

    @classmethod
    def from_polynomial(cls, poly: MultiPoly, trunc: int) -> 'Jet':
        if poly.nvars != 1:
            raise DimensionMismatchError("a jet is built from a polynomial in one variable")
        coeffs = [Fraction(0)] * (trunc + 1)
        for (e,), c in poly.terms():
            if e <= trunc:
                coeffs[e] = c
        return cls(coeffs, trunc)

    def to_polynomial(self) -> MultiPoly:
        return MultiPoly(1, {(k,): c for k, c in enumerate(self.coeffs)})

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def _check(self, other: 'Jet'):
        if other.trunc != self.trunc:
            raise DimensionMismatchError(
                f"jets truncated at {self.trunc} and {other.trunc}"
            )

    def __add__(self, other):
        if not isinstance(other, Jet):
            other = Jet.constant(other, self.trunc)
        self._check(other)
        return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)], self.trunc)

    __radd__ = __add__

    def __neg__(self):
        return Jet([-a for a in self.coeffs], self.trunc)

    def __sub__(self, other):
        if not isinstance(other, Jet):
            other = Jet.constant(other, self.trunc)
        return self + (-other)

    def scale(self, factor: ScalarLike) -> 'Jet':
        factor = to_scalar(factor)
        return Jet([a * factor for a in self.coeffs], self.trunc)

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return self.scale(other)
        self._check(other)
        D = self.trunc
        out = [Fraction(0)] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(D + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return Jet(out, D)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = Jet.constant(1, self.trunc)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def substitute(self, inner: 'Jet') -> 'Jet':
        """Compose h(s(t)) for a jet s with s(0) = 0."""
        self._check(inner)
        if inner.coeffs[0]:
            raise PreconditionError("substituted series must vanish at t=0")
        result = Jet.zero(self.trunc)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def order(self) -> OrderResult:
        for k, c in enumerate(self.coeffs):
            if c:
                return OrderResult.exact(k, self.trunc)
        return OrderResult.above(self.trunc)

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Jet):
            return NotImplemented
        return self.trunc == other.trunc and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.trunc, self.coeffs))

    def to_text(self) -> str:
        return self.to_polynomial().to_text(names=["t"])

    def __repr__(self):
        return f"Jet({self.to_text()!r}, trunc={self.trunc})"


class CurveGerm:
    """Parameterized germ G(t) = (G_1(t), ..., G_n(t)) with a shared truncation."""

    __slots__ = ('components',)

    def __init__(self, components: Sequence[Jet]):
        components = tuple(components)
        if not components:
            raise ValueError("a curve germ needs at least one coordinate")
        truncs = {c.trunc for c in components}
        if len(truncs) != 1:
            raise DimensionMismatchError(f"components truncated at different orders {sorted(truncs)}")
        self.components: Tuple[Jet, ...] = components

    @classmethod
    def from_taylor(cls, vectors: Sequence[Sequence[ScalarLike]], trunc: int) -> 'CurveGerm':
        """Build p + t*v_1 + t^2*v_2 + ... from the list [p, v_1, v_2, ...]."""
        vectors = [to_vector(v) for v in vectors]
        n = len(vectors[0])
        if any(len(v) != n for v in vectors):
            raise DimensionMismatchError("Taylor coefficient vectors differ in length")
        return cls([Jet([v[i] for v in vectors], trunc) for i in range(n)])

    @classmethod
    def line(cls, point: Sequence[ScalarLike], direction: Sequence[ScalarLike], trunc: int) -> 'CurveGerm':
        return cls.from_taylor([point, direction], trunc)

    @property
    def nvars(self) -> int:
        return len(self.components)

    @property
    def trunc(self) -> int:
        return self.components[0].trunc

    @property
    def base_point(self) -> Tuple[Fraction, ...]:
        return tuple(c.coeffs[0] for c in self.components)

    @property
    def velocity(self) -> Tuple[Fraction, ...]:
        if self.trunc < 1:
            return tuple(Fraction(0) for _ in self.components)
        return tuple(c.coeffs[1] for c in self.components)

    @property
    def is_smooth(self) -> bool:
        return any(self.velocity)

    def reparameterize(self, unit: Jet) -> 'CurveGerm':
        """Substitute t -> t*u(t) for a unit u (u(0) != 0)."""
        if not unit.coeffs[0]:
            raise PreconditionError("reparameterization factor must be a unit (u(0) != 0)")
        inner = Jet.parameter(self.trunc) * unit
        return CurveGerm([c.substitute(inner) for c in self.components])

    def __eq__(self, other):
        if not isinstance(other, CurveGerm):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"CurveGerm({[c.to_text() for c in self.components]}, trunc={self.trunc})"
