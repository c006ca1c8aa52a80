"""Brute-force ground truth: visit every m-subset of 1..n and tally its
minimum gap.

Subsets are visited in lexicographic order. The work is split by smallest
element, so each worker handles a contiguous lexicographic range and the
per-range tallies are summed; the result does not depend on the worker
count.
"""
import datetime as dt
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from gapprob import constants
from gapprob.errors import RefusedComputation
from gapprob.exact import ExactProb
from gapprob.gapcount import (DrawSpec, Topology, count, count_cycle, cycle_count_printed,
                              gap_probability_printed)
from gapprob.util.partition import batched
from gapprob.util.timefmt import timed

logger = logging.getLogger(__name__)

NO_PAIR = None
_BLOCK_ROWS = 1 << 18


class BudgetExceeded(RefusedComputation):
    def __init__(self, subsets, budget):
        super().__init__(f'Enumerating {subsets} subsets exceeds the budget of {budget}')
        self.subsets = subsets
        self.budget = budget


@dataclass(frozen=True)
class GapDistribution:
    """Subsets of a draw tallied by exact minimum gap.

    ``counts`` maps k to the number of subsets whose minimum gap is exactly
    k (zero entries omitted); draws of fewer than two numbers are counted
    in ``no_pair``.
    """
    spec: DrawSpec
    topo: Topology
    counts: dict = field(default_factory=dict)
    no_pair: int = 0
    total: int = 0

    def tail(self, k):
        """Number of subsets whose minimum gap is at least k (pairless ones included)."""
        return sum(c for j, c in self.counts.items() if j >= k) + self.no_pair

    def probability_close(self, k):
        """Fraction of subsets with two numbers at distance less than k."""
        return ExactProb(1 - Fraction(self.tail(k), self.total))

    def to_json(self):
        return {
            'n': self.spec.n,
            'm': self.spec.m,
            'topo': self.topo.value,
            'counts': {str(k): c for k, c in sorted(self.counts.items())},
            'no_pair': self.no_pair,
            'total': self.total,
        }

    @classmethod
    def from_json(cls, data):
        return cls(spec=DrawSpec(data['n'], data['m']),
                   topo=Topology(data['topo']),
                   counts={int(k): c for k, c in data['counts'].items()},
                   no_pair=data['no_pair'],
                   total=data['total'])


def min_gap(subset, n=None, topo=Topology.LINE):
    """Smallest distance between neighbouring chosen numbers.

    On the ring the wraparound distance n - (max - min) also counts.
    Returns `NO_PAIR` for fewer than two numbers.
    """
    n = subset.n if n is None else n
    values = subset.values
    if len(values) < 2:
        return NO_PAIR
    gap = min(b - a for a, b in zip(values, values[1:]))
    if topo is Topology.CYCLE:
        gap = min(gap, n - (values[-1] - values[0]))
    return gap


def iter_subsets(n, m, first=None):
    """Increasing m-tuples of 1..n in lexicographic order.

    With ``first`` only the contiguous range starting with that element is
    yielded; concatenating the ranges for first = 1, 2, ... gives the full
    order.
    """
    if first is None:
        yield from itertools.combinations(range(1, n + 1), m)
    elif m >= 1 and 1 <= first <= n:
        for tail in itertools.combinations(range(first + 1, n + 1), m - 1):
            yield (first,) + tail


def _tally_range(task):
    n, m, cyclic, first = task
    counts = np.zeros(n + 1, dtype=np.int64)
    for block in batched(iter_subsets(n, m, first), _BLOCK_ROWS):
        draws = np.array(block, dtype=np.int64)
        gaps = np.diff(draws, axis=1).min(axis=1)
        if cyclic:
            gaps = np.minimum(gaps, n - (draws[:, -1] - draws[:, 0]))
        counts += np.bincount(gaps, minlength=n + 1)
    return counts


def enumerate_distribution(spec, topo=Topology.LINE, *, budget=None, workers=None):
    budget = constants.ENUMERATION_BUDGET if budget is None else budget
    workers = constants.THREADS if workers is None else workers
    total = spec.total
    if total > budget:
        logger.warning(f'Refusing to enumerate {total} subsets of {spec} (budget {budget})')
        raise BudgetExceeded(total, budget)
    if spec.m < 2:
        return GapDistribution(spec=spec, topo=topo, counts={}, no_pair=total, total=total)

    tasks = [(spec.n, spec.m, topo is Topology.CYCLE, first) for first in range(1, spec.n - spec.m + 2)]
    with timed(logger, f'Enumerating {total} subsets of {spec} on the {topo} with {workers} worker(s)'):
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                tallies = list(pool.map(_tally_range, tasks))
        else:
            tallies = [_tally_range(task) for task in tasks]
    counts = np.sum(tallies, axis=0)
    distribution = GapDistribution(spec=spec, topo=topo,
                                   counts={k: int(c) for k, c in enumerate(counts) if k >= 1 and c},
                                   total=total)
    if sum(distribution.counts.values()) != total:
        raise AssertionError(f'Enumeration visited {sum(distribution.counts.values())} of {total} subsets')
    return distribution


def closed_form_distribution(spec, topo=Topology.LINE):
    """The min-gap distribution from differences of closed-form tail counts."""
    if spec.m < 2:
        return GapDistribution(spec=spec, topo=topo, counts={}, no_pair=spec.total, total=spec.total)
    counts = {}
    k = 1
    tail = count(spec, 1, topo)
    while tail:
        next_tail = count(spec, k + 1, topo)
        if tail != next_tail:
            counts[k] = tail - next_tail
        tail = next_tail
        k += 1
    return GapDistribution(spec=spec, topo=topo, counts=counts, total=spec.total)


def _cache_key(spec, topo):
    return f'{spec.n},{spec.m},{topo.value}'


def _load_cache(path):
    try:
        with path.open() as f:
            return json.load(f)
    except (OSError, ValueError):
        return {}


def cached_distribution(spec, topo=Topology.LINE, *, forced=False, path=None, **kwargs):
    """`enumerate_distribution` backed by a JSON file of earlier results."""
    path = Path(path or constants.DISTRIBUTION_CACHE_PATH)
    db = _load_cache(path)
    key = _cache_key(spec, topo)
    if not forced and key in db:
        logger.info(f'Using cached distribution for {spec} on the {topo}')
        return GapDistribution.from_json(db[key])

    distribution = enumerate_distribution(spec, topo, **kwargs)
    db[key] = dict(distribution.to_json(), computed=dt.datetime.now(dt.timezone.utc).isoformat())
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w') as f:
        json.dump(db, f, indent=1)
    return distribution


@dataclass(frozen=True)
class AdjudicationRow:
    k: int
    oracle: int
    recurrence: int
    printed: int
    oracle_prob: ExactProb
    printed_prob: ExactProb
    published: str = None

    @property
    def recurrence_confirmed(self):
        return self.oracle == self.recurrence

    @property
    def printed_formula_confirmed(self):
        return self.oracle == self.printed

    @property
    def published_reproduced(self):
        """Whether the oracle value rounds to the published decimal; None when nothing was published."""
        if self.published is None:
            return None
        return self.oracle_prob.render(6) == self.published


def published_cycle_value(spec, k):
    if (spec.n, spec.m) != (49, 6):
        return None
    return constants.PUBLISHED_CYCLE_TABLE_49_6.get(min(k, 10))


def adjudicate_cycle(spec, k_max, *, distribution=None, **kwargs):
    """Settle the ring counts for k = 1..k_max by exhaustive enumeration.

    Each row sets the oracle's tail count against the g_k recurrence and
    against the displayed formula without the (k-1) factor, and, for the
    standard 6-of-49 draw, against the published circle column.
    """
    if distribution is None:
        distribution = enumerate_distribution(spec, Topology.CYCLE, **kwargs)
    rows = []
    for k in range(1, k_max + 1):
        row = AdjudicationRow(k=k,
                              oracle=distribution.tail(k),
                              recurrence=count_cycle(spec, k),
                              printed=cycle_count_printed(spec, k),
                              oracle_prob=distribution.probability_close(k),
                              printed_prob=gap_probability_printed(spec, k).p,
                              published=published_cycle_value(spec, k))
        if not row.recurrence_confirmed:
            logger.error(f'k={k}: enumeration gives {row.oracle}, recurrence gives {row.recurrence}')
        if row.published_reproduced is False:
            logger.warning(f'k={k}: published {row.published} is not reproduced; '
                           f'enumeration gives {row.oracle_prob.render(6)}')
        rows.append(row)
    return rows


def check_against_closed_forms(distribution, k_max=None):
    """List of k where the oracle tail disagrees with the closed-form count."""
    spec, topo = distribution.spec, distribution.topo
    k_max = spec.n if k_max is None else k_max
    return [k for k in range(1, k_max + 1) if distribution.tail(k) != count(spec, k, topo)]
