import math

import numpy as np

from .. import constants as const
from ..converters import read_field
from ..criteria import (
    antiplane_la_field,
    antiplane_la_threshold,
    critical_uniaxial_stress,
    f_c,
    f_infinity,
    la_sup,
    surface_density_field,
    uniaxial_state,
)
from ..entities import DamageField, Material, TensorState
from ..exceptions import IoError, ValidationError
from ..utils import format_row


def extend_arguments(parser):

    parser.add_argument(
        "--sigma", dest="sigma", type=float, nargs='+',
        help="stress tensor, 4 or 9 entries row by row")

    parser.add_argument(
        "--F", dest="F", type=float, nargs='+',
        help="displacement gradient, 4 or 9 entries row by row")

    parser.add_argument(
        "--normal", dest="normal", type=float, nargs='+',
        help="crack normal, 2 or 3 entries, normalized before use")

    parser.add_argument(
        "--uniaxial", dest="uniaxial", type=float, nargs=2,
        metavar=('STRESS', 'ALPHA'),
        help="uniaxial traction along x3 with the normal at ALPHA degrees "
             "from x3, replaces --sigma, --F and --normal")

    parser.add_argument(
        "--E", dest="E", type=float, default=1.0,
        help="Young modulus")

    parser.add_argument(
        "--Sigma", dest="Sigma", type=float, default=0.5,
        help="stress power threshold")

    parser.add_argument(
        "--G", dest="G", type=float, default=1.0,
        help="Griffith constant")

    parser.add_argument(
        "--cap-C", dest="cap_C", type=float,
        help="surcharge, defaults to 100*G")

    parser.add_argument(
        "--mu", dest="mu", type=float,
        help="shear modulus, adds the anti-plane threshold gradient")

    parser.add_argument(
        "--field", dest="field", metavar="FILE",
        help="anti-plane displacement CSV, adds its largest cell la_sup "
             "and the range of f_C over the cells (mu defaults to 1)")

    return parser


def _square(values, name):
    size = int(round(math.sqrt(len(values))))
    if size not in (2, 3) or size * size != len(values):
        raise ValidationError('{} needs 4 or 9 entries'.format(name))
    return np.array(values).reshape(size, size)


def build_state(args):
    if args.uniaxial:
        stress, alpha = args.uniaxial
        return uniaxial_state(stress, args.E, math.radians(alpha))

    if not (args.sigma and args.F and args.normal):
        raise ValidationError(
            'Either --uniaxial or all of --sigma, --F and --normal are needed')

    return TensorState(_square(args.sigma, 'sigma'), _square(args.F, 'F'),
                       args.normal, normalize=True)


def state_rows(args, cap_C):
    state = build_state(args)
    rows = [
        ('la_sup', la_sup(state)),
        ('f_inf', f_infinity(state, args.Sigma, args.G)),
        ('f_C', f_c(state, args.Sigma, args.G, cap_C)),
        ('sigma_cr', critical_uniaxial_stress(args.E, args.Sigma)),
        ('critical_angle', const.CRITICAL_NORMAL_ANGLE),
    ]
    if args.mu is not None:
        rows.append(('antiplane_threshold',
                     antiplane_la_threshold(args.mu, args.Sigma)))
    return rows


def field_rows(args, cap_C):
    try:
        with open(args.field, 'r') as f:
            u = read_field(f)
    except (IOError, OSError) as e:
        raise IoError(args.field, e.strerror or str(e))

    mu = args.mu if args.mu is not None else 1.0
    mat = Material(mu=mu, G=args.G, eps=u.grid.h, Sigma=args.Sigma,
                   cap_C=cap_C)
    density = surface_density_field(u, DamageField.intact(u.grid), mat)

    return [
        ('la_sup_max', float(antiplane_la_field(u, mat).max())),
        ('f_C_min', float(density.values.min())),
        ('f_C_max', float(density.values.max())),
    ]


def _runner(args):
    cap_C = args.cap_C if args.cap_C is not None else \
        const.DEFAULT_CAP_FACTOR * args.G

    rows = []
    if not args.field or args.uniaxial or args.sigma or args.F or args.normal:
        rows.extend(state_rows(args, cap_C))
    if args.field:
        rows.extend(field_rows(args, cap_C))

    for name, value in rows:
        print(format_row([name, value]))
