import math

from scipy import stats


def z_score(confidence):
    """Two-sided standard normal quantile for ``confidence``."""
    return float(stats.norm.ppf(0.5 + confidence / 2))


def wilson_interval(hits, trials, confidence=0.95):
    """Wilson score interval for hits out of trials.

    The bounds are clamped so that lower <= hits/trials <= upper also holds
    after rounding, which matters at 0 and 1.
    """
    if trials <= 0:
        return 0.0, 1.0
    p = hits / trials
    z = z_score(confidence)
    denom = 1.0 + z ** 2 / trials
    center = (p + z ** 2 / (2.0 * trials)) / denom
    margin = z * math.sqrt(p * (1.0 - p) / trials + z ** 2 / (4.0 * trials ** 2)) / denom
    lower = min(max(0.0, center - margin), p)
    upper = max(min(1.0, center + margin), p)
    return lower, upper
