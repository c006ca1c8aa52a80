"""Closed-form gap counts and probabilities on the line and on the ring.

f_k(n, m) = C(n - (k-1)(m-1), m) counts m-subsets of 1..n whose smallest
difference between neighbours is at least k. The ring count g_k adds the
wraparound pair (n, 1) and is computed from the line count by conditioning
on whether one of 1..k-1 is drawn.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction

from gapprob.errors import GapProbError
from gapprob.exact import ExactProb, binom

logger = logging.getLogger(__name__)


class GapCountError(GapProbError):
    pass


class InvalidDrawSpec(GapCountError):
    def __init__(self, n, m):
        super().__init__(f'Invalid draw: need n >= 1 and 0 <= m <= n, got n={n}, m={m}')


class InvalidSubset(GapCountError):
    pass


class InvalidK(GapCountError):
    def __init__(self, k):
        super().__init__(f'k must be a positive integer, got {k}')
        self.k = k


class GapTooSmall(GapCountError):
    def __init__(self, values, k):
        super().__init__(f'{list(values)} has two numbers closer than {k}')


class SubsetOutOfRange(GapCountError):
    def __init__(self, value, limit):
        super().__init__(f'{value} exceeds the compressed range 1..{limit}')


class Topology(enum.Enum):
    LINE = 'line'
    CYCLE = 'cycle'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DrawSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.m <= self.n:
            raise InvalidDrawSpec(self.n, self.m)

    @property
    def total(self):
        return binom(self.n, self.m)

    def __str__(self):
        return f'{self.m} of {self.n}'


@dataclass(frozen=True)
class Subset:
    """A draw outcome: strictly increasing values in 1..n."""
    values: tuple
    n: int

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, 'values', values)
        if any(b <= a for a, b in zip(values, values[1:])):
            raise InvalidSubset(f'{list(values)} is not strictly increasing')
        if values and (values[0] < 1 or values[-1] > self.n):
            raise InvalidSubset(f'{list(values)} leaves the range 1..{self.n}')

    @property
    def spec(self):
        return DrawSpec(self.n, len(self.values))

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, index):
        return self.values[index]

    def __str__(self):
        return '{' + ','.join(map(str, self.values)) + '}'


def _check_k(k):
    if not isinstance(k, int) or k < 1:
        raise InvalidK(k)


def line_count(n, m, k):
    """f_k(n, m) for any integers; zero wherever no subset can exist."""
    if m == 0:
        return 1 if n >= 0 else 0
    return binom(n - (k - 1) * (m - 1), m)


def cycle_count(n, m, k):
    """g_k(n, m) for any integers, from the conditioning recurrence."""
    if n < 0:
        return 0
    if m == 0:
        return 1
    if m == 1:
        return max(n, 0)
    if k == 1:
        return binom(n, m)
    return (k - 1) * line_count(n - 2 * k + 1, m - 1, k) + line_count(n - k + 1, m, k)


def count_line(spec, k):
    _check_k(k)
    return line_count(spec.n, spec.m, k)


def count_cycle(spec, k):
    _check_k(k)
    return cycle_count(spec.n, spec.m, k)


def count(spec, k, topo):
    return count_line(spec, k) if topo is Topology.LINE else count_cycle(spec, k)


def cycle_count_printed(spec, k):
    """The displayed ring formula, which drops the (k-1) factor.

    Agrees with `count_cycle` only for k <= 2. Kept so the printed circle
    column can be reproduced and compared.
    """
    _check_k(k)
    n, m = spec.n, spec.m
    if m < 2 or k == 1:
        return count_cycle(spec, k)
    return binom(n - k + 1 - (k - 1) * (m - 1), m) + binom(n - 2 * k + 1 - (k - 1) * (m - 2), m - 1)


@dataclass(frozen=True)
class GapProbability:
    """p_k (two drawn numbers at distance < k) with its complement q_k."""
    spec: DrawSpec
    k: int
    topo: Topology
    favourable: int
    total: int
    p: ExactProb
    q: ExactProb
    degenerate: bool


def _probability(spec, k, topo, far_apart):
    total = spec.total
    q = ExactProb(Fraction(far_apart, total))
    return GapProbability(spec=spec, k=k, topo=topo, favourable=total - far_apart, total=total,
                          p=q.complement(), q=q, degenerate=spec.m < 2)


def gap_probability(spec, k, topo=Topology.LINE):
    """Probability that a uniform m-subset has two numbers at distance < k.

    Draws of fewer than two numbers have no pair; they get p = 0 and are
    flagged ``degenerate``.
    """
    _check_k(k)
    return _probability(spec, k, topo, count(spec, k, topo))


def gap_probability_printed(spec, k):
    """Ring probability from `cycle_count_printed`."""
    return _probability(spec, k, Topology.CYCLE, cycle_count_printed(spec, k))


def consecutive_probability(spec, topo=Topology.LINE):
    return gap_probability(spec, 2, topo)


def compress(subset, k):
    """Map a subset with min line gap >= k onto an unconstrained one.

    The i-th smallest value (from 0) loses i*(k-1); the result lives in
    1..n-(k-1)(m-1).
    """
    _check_k(k)
    values = subset.values
    if any(b - a < k for a, b in zip(values, values[1:])):
        raise GapTooSmall(values, k)
    m = len(values)
    target = subset.n - (k - 1) * (m - 1) if m else subset.n
    return Subset(tuple(v - i * (k - 1) for i, v in enumerate(values)), target)


def expand(subset, k, target_n):
    """Inverse of `compress`: spread a subset back out into 1..target_n."""
    _check_k(k)
    values = subset.values
    m = len(values)
    limit = target_n - (k - 1) * (m - 1) if m else target_n
    for v in values:
        if v > limit:
            raise SubsetOutOfRange(v, limit)
    return Subset(tuple(v + i * (k - 1) for i, v in enumerate(values)), target_n)
