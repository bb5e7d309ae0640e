"""Exact rational serialization shared by the report records."""

from fractions import Fraction
from typing import Any, Dict, Union

Rational = Union[int, Fraction]


def rational_to_dict(value: Rational) -> Dict[str, Any]:
    """Serialize an exact rational as {num, den, float}."""
    value = Fraction(value)
    return {'num': value.numerator, 'den': value.denominator, 'float': float(value)}


def rational_from_dict(data: Any) -> Fraction:
    """Inverse of rational_to_dict; also accepts ints and "a/b" strings."""
    if isinstance(data, dict):
        return Fraction(data['num'], data['den'])
    return Fraction(data)
