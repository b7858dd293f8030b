"""Parsing and formatting of exact rationals.

Rationals travel as ``"p/q"`` strings (``"p"`` when integral) so nothing is
ever rounded through a float.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable

from .errors import ValidationError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class RationalParseError(ValidationError):
    code = "bad_rational"


def parse_rational(text: str | int | Fraction) -> Fraction:
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise RationalParseError(f"expected a rational, got {type(text).__name__}")
    match = _RATIONAL.match(text)
    if match is None:
        raise RationalParseError(f"malformed rational {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise RationalParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_vector(text: str) -> tuple[Fraction, ...]:
    """Parse ``"1/2,0,-1/3"``; the empty string is the empty vector."""
    if not text.strip():
        return ()
    return tuple(parse_rational(part) for part in text.split(","))


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vector(values: Iterable[Fraction | int]) -> str:
    return ",".join(format_rational(v) for v in values)


def is_integral(value: Fraction | int) -> bool:
    return Fraction(value).denominator == 1


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, Fraction(v).denominator)
    return result


def solve(matrix, rhs) -> tuple[Fraction, ...]:
    """Solve the square system ``matrix @ x = rhs`` exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("singular system")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)
