import importlib
import logging
from pathlib import Path

from gapprob.util import cli_common

logger = logging.getLogger(__name__)

_COMMANDS_DIR = Path(__file__).parent / 'commands'


def build_parser():
    parser = cli_common.Parser(
        prog='gapprob',
        description='Exact probabilities that drawn numbers fall close together, with cross-checks.')
    subparsers = parser.add_subparsers(dest='command', metavar='command', required=True)
    extensions = sorted(file.stem for file in _COMMANDS_DIR.glob('*.py') if file.stem != '__init__')
    for extension in extensions:
        importlib.import_module(f'gapprob.commands.{extension}').setup(subparsers)
    logger.debug(f'Commands loaded: {", ".join(subparsers.choices)}')
    return parser


@cli_common.exit_on_error
def run(args):
    return args.handler(args)


def main(argv=None):
    """Parse ``argv`` and run the chosen command; returns the exit status."""
    args = build_parser().parse_args(argv)
    return run(args)
