from .. import constants as const
from ..config import parse_scenario
from .run import execute


def extend_arguments(parser):

    parser.add_argument(
        "config",
        help="scenario file")

    parser.add_argument(
        "-o", "--output", dest="output",
        help="output directory, overrides output.dir of the scenario")

    parser.add_argument(
        "--lambda", dest="lam", type=float,
        help="viscosity, overrides model.lambda")

    parser.add_argument(
        "--s", dest="s", type=int,
        help="steps per unit time, overrides load.s")

    parser.add_argument(
        "--T", dest="T", type=float,
        help="time horizon, overrides load.T")

    parser.add_argument(
        "--perturbation", dest="perturbation", type=float,
        help="amplitude of the bump added to the initial equilibrium")

    return parser


def _runner(args):
    config = parse_scenario(args.config)

    config['model']['name'] = const.MODEL_VISCOUS
    if args.lam is not None:
        config['model']['lambda'] = args.lam
    if args.s is not None:
        config['load']['s'] = args.s
    if args.T is not None:
        config['load']['T'] = args.T
    if args.perturbation is not None:
        config['model']['perturbation'] = args.perturbation

    execute(config, args.output)
