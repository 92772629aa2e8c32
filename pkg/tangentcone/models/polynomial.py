from fractions import Fraction
from itertools import product
from math import comb
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from tangentcone.utils.exceptions import DimensionMismatchError

Monomial = Tuple[int, ...]
ScalarLike = Union[int, Fraction, str]


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or ``p/q`` string to an exact rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in '.eE'):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        # sympy Rational / Integer
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def to_vector(values: Iterable[ScalarLike]) -> Tuple[Fraction, ...]:
    return tuple(to_scalar(v) for v in values)


def _format_scalar(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _monomial_key(mono: Monomial):
    # graded, then lexicographic with x1 highest
    return (-sum(mono), tuple(-e for e in mono))


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables with rational coefficients.

    Values are immutable; all arithmetic returns new polynomials whose term
    maps never store a zero coefficient.
    """

    __slots__ = ('nvars', '_terms', '_hash')

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], ScalarLike]] = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: Dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != nvars:
                raise DimensionMismatchError(
                    f"monomial {mono} has length {len(mono)}, expected {nvars}"
                )
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, Fraction(0)) + to_scalar(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls, nvars: int) -> 'MultiPoly':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: ScalarLike) -> 'MultiPoly':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> 'MultiPoly':
        """The coordinate function x_{index+1} (index is 0-based)."""
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[index] = 1
        return cls(nvars, {tuple(mono): 1})

    @classmethod
    def linear_form(cls, coefficients: Sequence[ScalarLike]) -> 'MultiPoly':
        n = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            mono = [0] * n
            mono[i] = 1
            terms[tuple(mono)] = c
        return cls(n, terms)

    # inspection

    def terms(self) -> Iterator[Tuple[Monomial, Fraction]]:
        """Terms in a deterministic (graded lexicographic) order."""
        for mono in sorted(self._terms, key=_monomial_key):
            yield mono, self._terms[mono]

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def __len__(self):
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    @property
    def min_degree(self) -> int:
        if not self._terms:
            return -1
        return min(sum(m) for m in self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def linear_coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients (l_1, ..., l_n) of the degree-1 part."""
        coeffs = []
        for i in range(self.nvars):
            mono = [0] * self.nvars
            mono[i] = 1
            coeffs.append(self.coefficient(mono))
        return tuple(coeffs)

    # arithmetic

    def _check(self, other: 'MultiPoly'):
        if not isinstance(other, MultiPoly):
            raise TypeError(f"expected MultiPoly, got {type(other).__name__}")
        if other.nvars != self.nvars:
            raise DimensionMismatchError(
                f"polynomials live in {self.nvars} and {other.nvars} variables"
            )

    def _coerce(self, other) -> 'MultiPoly':
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return MultiPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor: ScalarLike) -> 'MultiPoly':
        factor = to_scalar(factor)
        return MultiPoly(self.nvars, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        terms: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return MultiPoly(self.nvars, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # evaluation and coordinate operations

    def __call__(self, point: Sequence[ScalarLike]) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[ScalarLike]) -> Fraction:
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        values = to_vector(point)
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term *= v ** e
            total += term
        return total

    def homogeneous_component(self, degree: int) -> 'MultiPoly':
        return MultiPoly(self.nvars, {m: c for m, c in self._terms.items() if sum(m) == degree})

    def translate(self, point: Sequence[ScalarLike]) -> 'MultiPoly':
        """Return g with g(x) = f(x + point)."""
        if len(point) != self.nvars:
            raise DimensionMismatchError(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        shift = to_vector(point)
        terms: Dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            # expand prod (x_i + p_i)^e_i binomially
            factors = []
            for i, e in enumerate(mono):
                factors.append([(k, comb(e, k) * shift[i] ** (e - k)) for k in range(e + 1)])
            for choice in product(*factors):
                coeff = c
                for _, weight in choice:
                    coeff *= weight
                if coeff:
                    new_mono = tuple(k for k, _ in choice)
                    terms[new_mono] = terms.get(new_mono, Fraction(0)) + coeff
        return MultiPoly(self.nvars, terms)

    def partial_derivative(self, index: int) -> 'MultiPoly':
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range")
        terms = {}
        for mono, c in self._terms.items():
            e = mono[index]
            if e:
                new_mono = list(mono)
                new_mono[index] = e - 1
                terms[tuple(new_mono)] = c * e
        return MultiPoly(self.nvars, terms)

    # comparison and display

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self.terms():
            factors = []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(c)
            if not factors:
                body = _format_scalar(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = _format_scalar(magnitude) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self.to_text()!r})"
