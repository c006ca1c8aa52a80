import itertools


def batched(iterable, size):
    """Yield lists of up to ``size`` items drawn from ``iterable``."""
    iterator = iter(iterable)
    while True:
        batch = list(itertools.islice(iterator, size))
        if not batch:
            return
        yield batch
