from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from tangentcone.models.polynomial import to_scalar


def format_scalar(value) -> str:
    c = to_scalar(value)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_vector(values: Sequence) -> str:
    return '(' + ', '.join(format_scalar(v) for v in values) + ')'


def _format_bool(flag: bool) -> str:
    return 'yes' if flag else 'no'


def format_report(items: Iterable[Tuple[str, Union[str, int, bool, Fraction]]]) -> str:
    """Render ``key: value`` lines, one per item."""
    lines = []
    for key, value in items:
        if isinstance(value, bool):
            value = _format_bool(value)
        elif isinstance(value, Fraction):
            value = format_scalar(value)
        lines.append(f"{key}: {value}")
    return '\n'.join(lines)


def format_basis(vectors: Sequence[Sequence]) -> str:
    if not vectors:
        return '{}'
    return '{' + ', '.join(format_vector(v) for v in vectors) + '}'
