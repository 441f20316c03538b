import argparse
import logging
import sys

from colorlog import ColoredFormatter

from ..exceptions import SolverError, ValidationError

logging.captureWarnings(True)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SOLVER = 2

LOGGER_NAME = 'fracmove'


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    '''Argument parser reporting usage errors by exception instead of
    exiting, so that they map to the validation exit code.'''

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write('{}: error: {}\n'.format(self.prog, message))
        raise UsageError(message)


def get_basic_arg_parser():

    parser = ArgumentParser(
        prog='fracmove',
        description="Quasi-static brittle fracture by incremental energy "
                    "minimization",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter
    )
    return parser


def add_common_arguments(parser):

    parser.add_argument(
        "-v", "--verbose", dest="verbose",
        action='store_true',
        help="verbose mode")

    return parser


def add_material_arguments(parser, G=1.0):

    parser.add_argument(
        "--mu", dest="mu", type=float, default=1.0,
        help="shear modulus")

    parser.add_argument(
        "--G", dest="G", type=float, default=G,
        help="Griffith constant")

    parser.add_argument(
        "--Sigma", dest="Sigma", type=float,
        help="stress power threshold, defaults to mu/2")

    parser.add_argument(
        "--cap-C", dest="cap_C", type=float,
        help="surcharge of the improved model, defaults to 100*G")

    return parser


def run_command(runner, args):
    '''Run a subcommand and map its failure to an exit code.'''

    level = logging.DEBUG if getattr(args, 'verbose', False) else logging.INFO
    configure_color_logging(level=level, logger_name=LOGGER_NAME)

    try:
        code = runner(args)
    except ValidationError as e:
        log.error(e, exc_info=args.verbose)
        return EXIT_VALIDATION
    except SolverError as e:
        log.error(e, exc_info=args.verbose)
        return EXIT_SOLVER

    return code or EXIT_OK


CONSOLE_FORMATS = {
    logging.DEBUG: "%(asctime)s %(log_color)s%(levelname).1s%(reset)s "
                   "%(name)s: %(message)s",
    logging.INFO: "%(asctime)s %(log_color)s%(levelname).1s%(reset)s "
                  "%(message)s",
}

LEVEL_COLORS = dict(DEBUG='cyan', INFO='green', WARNING='yellow',
                    ERROR='red', CRITICAL='bold_red')


def configure_color_logging(level, logger_name=None):
    '''Attach a colored stderr handler to ``logger_name``.

    Handlers attached by an earlier call are replaced, so repeated runs in
    one process log every record once.
    '''
    logger = logging.getLogger(logger_name)
    logger.setLevel(level)

    for handler in [h for h in logger.handlers
                    if getattr(h, 'fracmove_cli', False)]:
        logger.removeHandler(handler)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColoredFormatter(
        CONSOLE_FORMATS.get(level, CONSOLE_FORMATS[logging.INFO]),
        datefmt='%H:%M:%S', log_colors=LEVEL_COLORS))
    handler.fracmove_cli = True
    logger.addHandler(handler)
