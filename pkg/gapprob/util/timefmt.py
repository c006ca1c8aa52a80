import contextlib
import time


def time_format(seconds):
    whole = int(seconds)
    hours, whole = divmod(whole, 3600)
    minutes, whole = divmod(whole, 60)
    return hours, minutes, whole + (seconds - int(seconds))


def pretty_time_format(seconds, *, shorten=True):
    """Render a duration such as ``1h 2m 3.4s`` (or ``1 hour 2 minutes 3.4 seconds``)."""
    hours, minutes, secs = time_format(seconds)
    timespec = [(hours, 'hour', 'hours'), (minutes, 'minute', 'minutes')]
    timeprint = [(f'{cnt}', singular, plural) for cnt, singular, plural in timespec if cnt]
    timeprint.append((f'{secs:.1f}' if secs < 10 else f'{secs:.0f}', 'second', 'seconds'))

    def format_(triple):
        cnt, singular, plural = triple
        return f'{cnt}{singular[0]}' if shorten else f'{cnt} {singular if cnt == "1" else plural}'

    return ' '.join(map(format_, timeprint))


@contextlib.contextmanager
def timed(logger, what):
    """Log how long the body took at INFO level."""
    start = time.perf_counter()
    yield
    logger.info(f'{what} took {pretty_time_format(time.perf_counter() - start)}')
