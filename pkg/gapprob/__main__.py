import logging
import os
import sys
from logging.handlers import TimedRotatingFileHandler

from dotenv import load_dotenv

from gapprob import cli
from gapprob import constants


def setup():
    class CustomFormatter(logging.Formatter):
        # Colours only when standard error is a terminal.
        colour = sys.stderr.isatty()
        grey = "\x1b[38;20m"
        cyan = "\x1b[36;20m"
        yellow = "\x1b[33;20m"
        red = "\x1b[31;20m"
        bold_red = "\x1b[31;1m"
        reset = "\x1b[0m"
        format = "%(asctime)s - %(levelname)s - %(name)s - %(message)s (%(filename)s:%(lineno)d)"
        format_plain = format

        FORMATS = {
            logging.DEBUG: cyan + format + reset,
            logging.INFO: grey + format + reset,
            logging.WARNING: yellow + format + reset,
            logging.ERROR: red + format + reset,
            logging.CRITICAL: bold_red + format + reset
        }

        def format(self, record):
            log_fmt = self.FORMATS.get(record.levelno) if self.colour else self.format_plain
            formatter = logging.Formatter(log_fmt)
            return formatter.format(record)

    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(CustomFormatter())
    handlers = [ch]
    if constants.LOG_TO_FILE:
        os.makedirs(constants.LOGS_DIR, exist_ok=True)
        handlers.append(TimedRotatingFileHandler(constants.LOG_FILE_PATH, when='D', backupCount=3, utc=True))
    logging.basicConfig(format='{asctime}:{levelname}:{name}:{message}',
                        style='{',
                        datefmt='%d-%m-%Y %H:%M:%S',
                        level=constants.LOG_LEVEL,
                        handlers=handlers)


def _int_setting(name, minimum):
    raw = os.getenv(name)
    if raw is None or raw == '':
        return None
    try:
        value = int(raw)
    except ValueError:
        value = None
    if value is None or value < minimum:
        raise ValueError(f'{name} must be an integer >= {minimum}, got {raw!r}')
    return value


def _flag_setting(name):
    return os.getenv(name, '').strip().lower() in ('1', 'true', 'yes', 'on')


def configure():
    """Override `constants` from the environment (and a .env file, if any)."""
    load_dotenv()

    for name, attribute, minimum in (('GAPPROB_DIGITS', 'DEFAULT_DIGITS', 0),
                                     ('GAPPROB_ENUM_BUDGET', 'ENUMERATION_BUDGET', 1),
                                     ('GAPPROB_THREADS', 'THREADS', 1)):
        value = _int_setting(name, minimum)
        if value is not None:
            setattr(constants, attribute, value)

    log_level = os.getenv('GAPPROB_LOG_LEVEL')
    if log_level:
        constants.LOG_LEVEL = log_level.upper()
    constants.LOG_TO_FILE = _flag_setting('GAPPROB_LOG_FILE')
    constants.USE_DISTRIBUTION_CACHE = _flag_setting('GAPPROB_CACHE')


def main(argv=None):
    try:
        configure()
    except ValueError as e:
        logging.error(e)
        return 1
    setup()
    return cli.main(argv)


if __name__ == '__main__':
    sys.exit(main())
