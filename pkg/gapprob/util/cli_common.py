import argparse
import csv
import enum
import functools
import io
import json
import logging
import sys

from gapprob import constants
from gapprob.errors import GapProbError, RefusedComputation
from gapprob.exact import decimal_string
from gapprob.gapcount import DrawSpec, InvalidDrawSpec, Topology

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUSED = 2


class OutputFormat(enum.Enum):
    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'

    def __str__(self):
        return self.value


class Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with status 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f'{self.prog}: error: {message}\n')


def positive_int(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer') from None
    if value < 1:
        raise argparse.ArgumentTypeError(f'{value} is not positive')
    return value


def non_negative_int(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer') from None
    if value < 0:
        raise argparse.ArgumentTypeError(f'{value} is negative')
    return value


def add_draw_arguments(parser, *, k=True, topo=True):
    parser.add_argument('-n', type=positive_int, required=True, help='pool size')
    parser.add_argument('-m', type=non_negative_int, required=True, help='draw size')
    if k:
        parser.add_argument('-k', type=positive_int, default=2, help='distance threshold (default 2)')
    if topo:
        parser.add_argument('--topo', type=Topology, choices=list(Topology), default=Topology.LINE)
    add_output_arguments(parser)


def add_output_arguments(parser):
    parser.add_argument('--format', type=OutputFormat, choices=list(OutputFormat), default=OutputFormat.TEXT)
    parser.add_argument('--digits', type=non_negative_int, default=None,
                        help=f'decimal digits (default {constants.DEFAULT_DIGITS})')


def spec_from_args(parser, args):
    if args.m > args.n:
        parser.error(f'argument -m: {args.m} exceeds -n {args.n}')
    try:
        return DrawSpec(args.n, args.m)
    except InvalidDrawSpec as e:
        parser.error(f'argument -n/-m: {e}')


def digits_of(args):
    return constants.DEFAULT_DIGITS if args.digits is None else args.digits


def prob_json(prob, digits):
    return {'num': str(prob.num), 'den': str(prob.den), 'decimal': prob.render(digits)}


def rational_json(value, digits):
    return {'num': str(value.numerator), 'den': str(value.denominator), 'decimal': decimal_string(value, digits)}


def format_table(headers, rows):
    cells = [list(map(str, headers))] + [[str(cell) for cell in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    return '\n'.join('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
                     for row in cells)


def emit(fmt, *, payload, headers=None, rows=None, text=None, out=None):
    """Write a result to standard output in the requested format.

    ``payload`` is the JSON document; CSV uses ``headers``/``rows``; text
    uses ``text`` when given, otherwise an aligned table.
    """
    out = out or sys.stdout
    if fmt is OutputFormat.JSON:
        out.write(json.dumps(payload, indent=2) + '\n')
    elif fmt is OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(headers)
        writer.writerows(rows)
        out.write(buffer.getvalue())
    else:
        out.write((text if text is not None else format_table(headers, rows)) + '\n')


def alert(message):
    sys.stderr.write(f'error: {message}\n')


def exit_on_error(func):
    """Decorator mapping gapprob errors to exit codes.

    Refused computations exit with 2, every other gapprob error with 1.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except RefusedComputation as e:
            alert(e)
            return EXIT_REFUSED
        except GapProbError as e:
            alert(e)
            logger.debug('Command failed', exc_info=True)
            return EXIT_USAGE

    return wrapper


def add_threads_argument(parser):
    parser.add_argument('--threads', type=positive_int, default=None,
                        help=f'worker processes (default {constants.THREADS})')
