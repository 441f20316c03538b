import argparse
import sys

from .. import __version__
from . import criteria, k2, run, strip, viscous
from .commons import (
    EXIT_OK,
    EXIT_VALIDATION,
    UsageError,
    add_common_arguments,
    get_basic_arg_parser,
    run_command,
)


def _version_runner(args):
    print(__version__)


SUBCOMMANDS = [
    ('run', run.extend_arguments, run._runner,
     "run an incremental evolution from a scenario file"),
    ('strip-test', strip.extend_arguments, strip._runner,
     "compare the measured and predicted crack time of strips"),
    ('k2', k2.extend_arguments, k2._runner,
     "energy release rate of a crack tip in a displacement field"),
    ('criteria', criteria.extend_arguments, criteria._runner,
     "crack appearance criteria of a stress state"),
    ('viscous', viscous.extend_arguments, viscous._runner,
     "run the viscous evolution of a scenario"),
    ('version', lambda parser: parser, _version_runner,
     "print the version"),
]


def get_arg_parser():

    parser = get_basic_arg_parser()
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    for name, extend, runner, help in SUBCOMMANDS:
        subparser = subparsers.add_parser(
            name, help=help, description=help,
            formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        add_common_arguments(subparser)
        extend(subparser)
        subparser.set_defaults(runner=runner)

    return parser


def run_cli(argv=None):
    '''Run the command line with ``argv`` and return the exit code.'''

    parser = get_arg_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError:
        return EXIT_VALIDATION
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_OK

    return run_command(args.runner, args)


def main():
    sys.exit(run_cli())
