import logging
import math
import sys

from ..converters import read_field, write_k2_table
from ..entities import ContourSpec, Material
from ..exceptions import IoError
from ..k2 import k2_contour, k2_volume, plateau_velocity, tip_crack_cells

log = logging.getLogger(__name__)


def extend_arguments(parser):

    parser.add_argument(
        "field",
        help="displacement field file")

    parser.add_argument(
        "--tip", dest="tip", type=float, nargs=2, required=True,
        metavar=('X', 'Y'),
        help="crack tip position")

    parser.add_argument(
        "--radii", dest="radii", type=float, nargs='+', required=True,
        help="contour radii, in decreasing order")

    parser.add_argument(
        "--samples", dest="samples", type=int, default=720,
        help="quadrature points per circle")

    parser.add_argument(
        "--direction", dest="direction", type=float, nargs=2,
        default=[1.0, 0.0], metavar=('EX', 'EY'),
        help="tip velocity direction")

    parser.add_argument(
        "--crack-angle", dest="crack_angle", type=float,
        help="propagation direction of the straight crack ending at the "
             "tip, in degrees")

    parser.add_argument(
        "--eta-radii", dest="eta_radii", type=float, nargs=2,
        metavar=('R_IN', 'R_OUT'),
        help="also evaluate the volume form with a plateau velocity")

    parser.add_argument(
        "--mu", dest="mu", type=float, default=1.0,
        help="shear modulus")

    return parser


def _runner(args):
    try:
        with open(args.field, 'r') as f:
            u = read_field(f)
    except (IOError, OSError) as e:
        raise IoError(args.field, e.strerror or str(e))

    # Only mu enters the release rate
    mat = Material(mu=args.mu, G=1.0, eps=u.grid.h)
    spec = ContourSpec(args.tip, args.radii, samples=args.samples)

    norm = math.hypot(*args.direction)
    direction = [c / norm for c in args.direction]

    angle = None
    if args.crack_angle is not None:
        angle = math.radians(args.crack_angle)

    table = k2_contour(u, direction, spec, mat, crack_angle=angle)
    write_k2_table(table, sys.stdout)

    if args.eta_radii:
        eta = plateau_velocity(u.grid, spec.tip, direction, *args.eta_radii)
        crack = None
        if angle is not None:
            crack = tip_crack_cells(u.grid, spec.tip, angle)
        log.info('Volume form: %s', k2_volume(u, eta, mat, crack=crack))
