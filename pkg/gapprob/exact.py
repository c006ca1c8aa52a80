"""Exact integer and rational substrate.

Counts are plain Python ints (arbitrary precision, so C(10000, 500) and
beyond are representable). Probabilities are `ExactProb`, a reduced
`fractions.Fraction` constrained to [0, 1]. Floats never enter this module
except through `ExactProb.__float__`.
"""
import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from gapprob import constants
from gapprob.errors import GapProbError


class ExactError(GapProbError):
    pass


class ZeroDenominator(ExactError):
    def __init__(self):
        super().__init__('Denominator must be positive')


class OutOfRange(ExactError):
    def __init__(self, num, den):
        super().__init__(f'{num}/{den} is not a probability')
        self.num = num
        self.den = den


def binom(a, b):
    """C(a, b), extended by zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or a < b:
        return 0
    return math.comb(a, b)


def round_half_even(value, digits):
    """Return ``value`` rounded half-even to ``digits`` decimals as a `Decimal`.

    `Fraction.__round__` rounds the exact rational, so no precision is lost
    before the conversion.
    """
    if digits < 0:
        raise ValueError('digits must be non-negative')
    scaled = round(Fraction(value), digits) * 10 ** digits
    return Decimal(f'{int(scaled)}E-{digits}')


def decimal_string(value, digits=None, *, trim=True):
    """Render an exact rational as a decimal string.

    With ``trim`` trailing zeros are dropped, so 0.998060 renders as
    ``0.99806`` and 1.000000 as ``1``.
    """
    if digits is None:
        digits = constants.DEFAULT_DIGITS
    rounded = round_half_even(value, digits)
    text = f'{rounded:.{digits}f}'
    if trim and '.' in text:
        text = text.rstrip('0').rstrip('.')
    if text in ('-0', ''):
        text = '0'
    return text


@dataclass(frozen=True, order=True)
class ExactProb:
    value: Fraction

    def __post_init__(self):
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, 'value', Fraction(self.value))
        if not 0 <= self.value <= 1:
            raise OutOfRange(self.value.numerator, self.value.denominator)

    @property
    def num(self):
        return self.value.numerator

    @property
    def den(self):
        return self.value.denominator

    def complement(self):
        return ExactProb(1 - self.value)

    def render(self, digits=None, *, trim=True):
        return decimal_string(self.value, digits, trim=trim)

    def fraction_string(self):
        return f'{self.num}/{self.den}'

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return self.fraction_string()


def prob_ratio(num, den):
    """Build the reduced probability num/den."""
    if den == 0:
        raise ZeroDenominator()
    if den < 0 or num < 0 or num > den:
        raise OutOfRange(num, den)
    return ExactProb(Fraction(num, den))
