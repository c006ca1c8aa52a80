"""Seeded Monte Carlo estimates of gap probabilities.

RNG contract: trials are cut into blocks of `constants.SIMULATION_BLOCK_SIZE`.
Block b draws from ``numpy.random.Generator(PCG64(SeedSequence(seed,
spawn_key=(b,))))``. A draw takes the m smallest of n uniform keys, which
picks an m-subset uniformly; the keys of a block are consumed row by row in
fixed-memory chunks, which leaves the stream unchanged. Blocks are independent of how they are spread
over workers, so a report depends only on the SimConfig.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from gapprob import constants
from gapprob.errors import GapProbError
from gapprob.gapcount import DrawSpec, InvalidK, Subset, Topology
from gapprob.util.stats import wilson_interval
from gapprob.util.timefmt import timed

logger = logging.getLogger(__name__)

MAX_SEED = (1 << 64) - 1
_KEYS_PER_CHUNK = 1 << 22


class InvalidSimConfig(GapProbError):
    pass


@dataclass(frozen=True)
class SimConfig:
    spec: DrawSpec
    k: int
    topo: Topology = Topology.LINE
    trials: int = 1_000_000
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidK(self.k)
        if self.trials < 1:
            raise InvalidSimConfig(f'trials must be at least 1, got {self.trials}')
        if not 0 <= self.seed <= MAX_SEED:
            raise InvalidSimConfig(f'seed must be a 64-bit unsigned integer, got {self.seed}')


@dataclass(frozen=True)
class SimReport:
    config: SimConfig
    hits: int
    trials: int
    ci_low: float
    ci_high: float
    workers: int = field(default=1, compare=False)
    blocks: int = field(default=1, compare=False)

    @property
    def estimate(self):
        return self.hits / self.trials

    @property
    def seed(self):
        return self.config.seed

    def standard_error(self, p):
        return math.sqrt(p * (1 - p) / self.trials)


def make_rng(seed, block=0):
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(block,))))


def sample_draws(spec, rng, count):
    """``count`` sorted uniform draws as a (count, m) array of values in 1..n.

    Keys are drawn a few rows at a time so that at most `_KEYS_PER_CHUNK`
    floats are live; consecutive row chunks consume the stream exactly as
    one (count, n) request would.
    """
    draws = np.empty((count, spec.m), dtype=np.int64)
    if spec.m == 0:
        return draws
    rows = max(1, _KEYS_PER_CHUNK // spec.n)
    for start in range(0, count, rows):
        stop = min(start + rows, count)
        keys = rng.random((stop - start, spec.n))
        chosen = np.argpartition(keys, spec.m - 1, axis=1)[:, :spec.m]
        draws[start:stop] = np.sort(chosen, axis=1) + 1
    return draws


def sample_draw(spec, rng):
    return Subset(tuple(int(v) for v in sample_draws(spec, rng, 1)[0]), spec.n)


def sample_history(spec, draws, seed):
    """``draws`` independent uniform subsets, reproducible from ``seed``."""
    rng = make_rng(seed)
    return [Subset(tuple(int(v) for v in row), spec.n) for row in sample_draws(spec, rng, draws)]


def min_gaps(draws, n, topo):
    """Vectorised minimum gap per row; rows need at least two columns."""
    gaps = np.diff(draws, axis=1).min(axis=1)
    if topo is Topology.CYCLE:
        gaps = np.minimum(gaps, n - (draws[:, -1] - draws[:, 0]))
    return gaps


def _block_hits(task):
    config, block, size = task
    if config.spec.m < 2:
        return 0
    draws = sample_draws(config.spec, make_rng(config.seed, block), size)
    return int(np.count_nonzero(min_gaps(draws, config.spec.n, config.topo) < config.k))


def _blocks(trials):
    block_size = constants.SIMULATION_BLOCK_SIZE
    full, rest = divmod(trials, block_size)
    return [block_size] * full + ([rest] if rest else [])


def simulate(config, *, workers=None):
    workers = constants.THREADS if workers is None else workers
    tasks = [(config, block, size) for block, size in enumerate(_blocks(config.trials))]
    with timed(logger, f'Simulating {config.trials} draws of {config.spec} (k={config.k}, {config.topo})'):
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                hits = sum(pool.map(_block_hits, tasks))
        else:
            hits = sum(map(_block_hits, tasks))
    ci_low, ci_high = wilson_interval(hits, config.trials, constants.CONFIDENCE_LEVEL)
    return SimReport(config=config, hits=hits, trials=config.trials, ci_low=ci_low, ci_high=ci_high,
                     workers=workers, blocks=len(tasks))
