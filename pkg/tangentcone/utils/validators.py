import re
from fractions import Fraction
from typing import List, Tuple

from marshmallow import ValidationError

RATIONAL_PATTERN = re.compile(r'^[+-]?\d+(/\d+)?$')
PAIR_PATTERN = re.compile(r'^\s*(\d+)\s*[:-]\s*(\d+)\s*$')


class ValidationUtils:
    """Utility class for common validation operations"""

    @staticmethod
    def parse_rational(text: str) -> Fraction:
        """Parse an exact rational 'p' or 'p/q'; decimals are rejected."""
        text = text.strip()
        if not RATIONAL_PATTERN.match(text):
            raise ValidationError(f"not an exact rational: {text!r} (use p or p/q)")
        value = Fraction(text)
        return value

    @staticmethod
    def parse_vector(text: str, separator: str = ',') -> Tuple[Fraction, ...]:
        tokens = text.split(separator) if separator else text.split()
        tokens = [t for t in tokens if t.strip()]
        if not tokens:
            raise ValidationError("empty vector")
        return tuple(ValidationUtils.parse_rational(t) for t in tokens)

    @staticmethod
    def parse_pairs(text: str) -> List[Tuple[int, int]]:
        """Parse '1:2,2:1,3:4' into [(1, 2), (2, 1), (3, 4)]."""
        pairs = []
        for chunk in text.split(','):
            if not chunk.strip():
                continue
            match = PAIR_PATTERN.match(chunk)
            if not match:
                raise ValidationError(f"malformed generator pair {chunk.strip()!r}; expected u:v")
            pairs.append((int(match.group(1)), int(match.group(2))))
        if not pairs:
            raise ValidationError("no generator pairs given")
        return pairs

    @staticmethod
    def parse_index(text: str, lower: int, upper: int, what: str) -> int:
        if not text.strip().isdigit():
            raise ValidationError(f"{what} must be a positive integer, got {text!r}")
        value = int(text)
        if not lower <= value <= upper:
            raise ValidationError(f"{what} {value} is outside {lower}..{upper}")
        return value
