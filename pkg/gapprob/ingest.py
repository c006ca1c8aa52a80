"""Draw-history files and their audit against the exact gap probabilities.

File format (UTF-8, comma-separated, no quoting), one draw per line::

    # comment
    2004-11-06,3,7,12,19,25,31

The label holds no comma and is kept verbatim; the numbers are ASCII
digit strings and may come in any order. Blank lines
and lines starting with ``#`` are skipped.
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path

from gapprob import constants
from gapprob.errors import GapProbError
from gapprob.exact import ExactProb
from gapprob.gapcount import DrawSpec, Subset, Topology, gap_probability
from gapprob.oracle import NO_PAIR, min_gap
from gapprob.util.stats import wilson_interval

logger = logging.getLogger(__name__)


class DrawParseError(GapProbError):
    def __init__(self, line_number, reason):
        super().__init__(f'line {line_number}: {reason}')
        self.line_number = line_number
        self.reason = reason


class MalformedLine(DrawParseError):
    pass


class OutOfRangeNumber(DrawParseError):
    pass


class DuplicateNumber(DrawParseError):
    pass


class WrongCount(DrawParseError):
    pass


class UndecodableLine(DrawParseError):
    pass


class UnreadableHistory(GapProbError):
    def __init__(self, path, reason):
        super().__init__(f'Cannot read {path}: {reason}')
        self.path = path


class EmptyHistory(GapProbError):
    def __init__(self):
        super().__init__('No draws to audit')


class InconsistentHistory(GapProbError):
    pass


@dataclass(frozen=True)
class DrawRecord:
    label: str
    numbers: Subset
    line_number: int = field(default=0, compare=False)

    def __str__(self):
        return f'({self.label}: {self.numbers})'


def _is_decimal(text):
    return text.isascii() and text.isdigit()


def _parse_line(line_number, line, spec):
    label, *raw_numbers = line.split(',')
    raw_numbers = [value.strip() for value in raw_numbers]
    if not label.strip():
        raise MalformedLine(line_number, 'missing label')
    if len(raw_numbers) != spec.m:
        raise WrongCount(line_number, f'expected {spec.m} numbers, found {len(raw_numbers)}')
    for value in raw_numbers:
        if not _is_decimal(value):
            raise MalformedLine(line_number, f'{value!r} is not a base-10 integer')
    numbers = sorted(int(value) for value in raw_numbers)
    for value in numbers:
        if not 1 <= value <= spec.n:
            raise OutOfRangeNumber(line_number, f'{value} is outside 1..{spec.n}')
    for a, b in zip(numbers, numbers[1:]):
        if a == b:
            raise DuplicateNumber(line_number, f'{a} appears more than once')
    return DrawRecord(label=label, numbers=Subset(tuple(numbers), spec.n), line_number=line_number)


def iter_draws(stream, spec):
    """Parse a text stream, or a binary one decoded as UTF-8 line by line."""
    for line_number, line in enumerate(stream, start=1):
        if isinstance(line, bytes):
            try:
                line = line.decode('utf-8-sig' if line_number == 1 else 'utf-8')
            except UnicodeDecodeError as e:
                raise UndecodableLine(line_number, f'not valid UTF-8 ({e.reason} at byte {e.start})') from None
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        yield _parse_line(line_number, line, spec)


def parse_draws(stream, spec):
    return list(iter_draws(stream, spec))


def read_draws(path, spec):
    try:
        with Path(path).open('rb') as f:
            records = parse_draws(f, spec)
    except OSError as e:
        raise UnreadableHistory(path, e.strerror or e) from None
    logger.info(f'Read {len(records)} draws from {path}')
    return records


def serialize_draws(records):
    """Render records back to the file format, numbers ascending."""
    return ''.join(f'{record.label},{",".join(map(str, record.numbers))}\n' for record in records)


@dataclass(frozen=True)
class AuditRow:
    k: int
    hits: int
    draws: int
    exact: ExactProb
    ci_low: float
    ci_high: float

    @property
    def empirical_freq(self):
        return self.hits / self.draws

    @property
    def deviation(self):
        return abs(self.empirical_freq - float(self.exact))

    @property
    def covered(self):
        return self.ci_low <= float(self.exact) <= self.ci_high


@dataclass(frozen=True)
class AuditReport:
    spec: DrawSpec
    topo: Topology
    draws: int
    rows: tuple

    @property
    def all_covered(self):
        return all(row.covered for row in self.rows)

    def uncovered(self):
        return [row.k for row in self.rows if not row.covered]


def audit(records, topo=Topology.LINE, k_max=8):
    """Compare how often real draws hold two numbers closer than k with p_k."""
    if not records:
        raise EmptyHistory()
    spec = records[0].numbers.spec
    if any(record.numbers.spec != spec for record in records):
        raise InconsistentHistory('All draws in a history must share pool and draw size')

    gaps = [min_gap(record.numbers, spec.n, topo) for record in records]
    rows = []
    for k in range(1, k_max + 1):
        hits = sum(1 for gap in gaps if gap is not NO_PAIR and gap < k)
        ci_low, ci_high = wilson_interval(hits, len(records), constants.CONFIDENCE_LEVEL)
        rows.append(AuditRow(k=k, hits=hits, draws=len(records), exact=gap_probability(spec, k, topo).p,
                             ci_low=ci_low, ci_high=ci_high))
    report = AuditReport(spec=spec, topo=topo, draws=len(records), rows=tuple(rows))
    if not report.all_covered:
        logger.warning(f'Exact probability outside the {constants.CONFIDENCE_LEVEL:.0%} interval '
                       f'for k in {report.uncovered()}')
    return report
