"""Two independent routes to f(n, m), the count of m-subsets of 1..n with no
two consecutive numbers.

`dp_f` runs the inclusion-exclusion recurrence

    f(n, m) = f(n-2, m) + 2 f(n-2, m-1) - f(n-4, m-2)

from its boundary values. `series_f` expands (1 + zw) / (1 - z - w z^2) as a
bivariate power series. Neither consults the binomial closed form; they exist
to be compared against it.
"""
import logging
from dataclasses import dataclass

from gapprob.gapcount import line_count

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CountTable:
    max_n: int
    max_m: int
    values: tuple

    def __getitem__(self, index):
        n, m = index
        return self.values[n][m]

    def rows(self):
        for n, row in enumerate(self.values):
            yield n, row


class DpTable(CountTable):
    pass


class SeriesTable(CountTable):
    pass


def _vanishes(n, m):
    # f(n, m) = 0 once m >= ceil(n/2) + 1
    return m >= (n + 1) // 2 + 1


def _check_bounds(max_n, max_m):
    if max_n < 0 or max_m < 0:
        raise ValueError(f'Table bounds must be non-negative, got ({max_n}, {max_m})')


def dp_f(max_n, max_m):
    _check_bounds(max_n, max_m)
    table = [[0] * (max_m + 1) for _ in range(max_n + 1)]

    def f(n, m):
        if n < 0 or m < 0:
            return 0
        return table[n][m]

    for n in range(max_n + 1):
        for m in range(max_m + 1):
            if m == 0:
                table[n][m] = 1
            elif m == 1:
                table[n][m] = n
            elif _vanishes(n, m):
                table[n][m] = 0
            elif (n, m) == (3, 2):
                table[n][m] = 1
            elif n >= 4:
                table[n][m] = f(n - 2, m) + 2 * f(n - 2, m - 1) - f(n - 4, m - 2)
    logger.debug(f'Recurrence table filled up to ({max_n}, {max_m})')
    return DpTable(max_n, max_m, tuple(map(tuple, table)))


def series_f(max_n, max_m):
    """Coefficients c(n, m) of z^n w^m in (1 + zw) / (1 - z - w z^2).

    Multiplying through by the denominator gives
    c(n, m) = c(n-1, m) + c(n-2, m-1) + [n = m = 0] + [n = m = 1].
    """
    _check_bounds(max_n, max_m)
    table = [[0] * (max_m + 1) for _ in range(max_n + 1)]

    def c(n, m):
        if n < 0 or m < 0:
            return 0
        return table[n][m]

    for n in range(max_n + 1):
        for m in range(max_m + 1):
            numerator = 1 if (n, m) in ((0, 0), (1, 1)) else 0
            table[n][m] = c(n - 1, m) + c(n - 2, m - 1) + numerator
    logger.debug(f'Series coefficients computed up to z^{max_n} w^{max_m}')
    return SeriesTable(max_n, max_m, tuple(map(tuple, table)))


@dataclass(frozen=True)
class CrossCheck:
    max_n: int
    max_m: int
    cells: int
    mismatch: tuple = None

    @property
    def passed(self):
        return self.mismatch is None


def crosscheck(max_n, max_m):
    """Compare recurrence, series and closed form cell by cell.

    ``mismatch`` holds ``(n, m, dp, series, closed)`` for the first
    disagreeing cell in row-major order.
    """
    dp = dp_f(max_n, max_m)
    series = series_f(max_n, max_m)
    cells = 0
    for n in range(max_n + 1):
        for m in range(max_m + 1):
            cells += 1
            closed = line_count(n, m, 2)
            if not dp[n, m] == series[n, m] == closed:
                logger.warning(f'Mismatch at f({n}, {m}): dp={dp[n, m]} series={series[n, m]} closed={closed}')
                return CrossCheck(max_n, max_m, cells, (n, m, dp[n, m], series[n, m], closed))
    logger.info(f'Three-way agreement over {cells} cells')
    return CrossCheck(max_n, max_m, cells)
