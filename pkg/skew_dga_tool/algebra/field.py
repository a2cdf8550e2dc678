"""
Exact ground fields.

Wraps the sympy polys domains QQ and GF(p) behind the small interface the ring,
linear algebra and reporting layers need: conversion from text, canonical
printing, integer powers and binomial coefficients mapped into the field.
"""

import re
from fractions import Fraction
from math import comb
from typing import Any, Union

from sympy import isprime
from sympy.polys.domains import GF, QQ

from skew_dga_tool.core.exceptions import ConfigurationError

Scalar = Any

_SCALAR_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ScalarField:
    """
    Exact scalar field: the rationals or a prime field F_p with p > 2.

    Elements are native sympy domain elements, so they hash, compare and
    support field arithmetic without any floating point.
    """

    def __init__(self, characteristic: int = 0):
        """
        Initialize the field.

        Args:
            characteristic: 0 for the rationals, otherwise an odd prime p

        Raises:
            ConfigurationError: If the characteristic is not 0 or an odd prime
        """
        if characteristic == 0:
            self.domain = QQ
        elif characteristic > 2 and isprime(characteristic):
            self.domain = GF(characteristic)
        else:
            raise ConfigurationError(
                f"characteristic must be 0 or an odd prime, got {characteristic}",
                config_key="field"
            )
        self.characteristic = characteristic
        self.zero = self.domain.zero
        self.one = self.domain.one

    def __call__(self, value: Union[int, Fraction, str, Scalar]) -> Scalar:
        """Convert an integer, fraction or scalar text into a field element."""
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return self.fraction(value.numerator, value.denominator)
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScalarField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("ScalarField", self.characteristic))

    def __repr__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def fraction(self, numerator: int, denominator: int = 1) -> Scalar:
        """Return numerator/denominator as a field element."""
        if denominator == 0:
            raise ZeroDivisionError("zero denominator")
        den = self.domain(denominator)
        if not den:
            raise ZeroDivisionError(f"denominator {denominator} vanishes in {self!r}")
        return self.domain(numerator) / den

    def parse(self, text: str) -> Scalar:
        """
        Parse an integer or rational literal such as '-3' or '2/5'.

        Raises:
            ValueError: If the text is not a scalar literal
        """
        match = _SCALAR_PATTERN.match(text)
        if not match:
            raise ValueError(f"not a scalar literal: '{text}'")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) else 1
        return self.fraction(numerator, denominator)

    def format(self, value: Scalar) -> str:
        """Print a scalar canonically: 'a' or 'a/b' for rationals, 0..p-1 for F_p."""
        if self.characteristic == 0:
            numerator = int(self.domain.numer(value))
            denominator = int(self.domain.denom(value))
            return str(numerator) if denominator == 1 else f"{numerator}/{denominator}"
        return str(int(value) % self.characteristic)

    def power(self, value: Scalar, exponent: int) -> Scalar:
        """Integer power, negative exponents allowed for nonzero values."""
        if exponent == 0:
            return self.one
        if exponent < 0:
            if not value:
                raise ZeroDivisionError("negative power of zero")
            return (self.one / value) ** (-exponent)
        return value ** exponent

    def binomial(self, n: int, k: int) -> Scalar:
        """Binomial coefficient computed in Z and mapped into the field."""
        if k < 0 or n < 0 or k > n:
            return self.zero
        return self.domain(comb(n, k))

    def sign(self, exponent: int) -> Scalar:
        """Return (-1)^exponent."""
        return self.one if exponent % 2 == 0 else -self.one
