import logging
from concurrent.futures import ProcessPoolExecutor

from .. import constants as const
from ..entities import Material
from ..evolution import (
    critical_time_prediction,
    onset_step,
    regularized_time_prediction,
    run_incremental,
    strip_scenario,
)
from ..utils import format_row
from .commons import add_material_arguments

log = logging.getLogger(__name__)

HEADER = ['L', 'predicted', 'regularized', 'onset_step', 'onset_time',
          'onset_stress']


def extend_arguments(parser):

    parser.add_argument(
        "--L", dest="lengths", type=float, action='append',
        help="strip height, may be given several times (default 1)")

    parser.add_argument(
        "--a", dest="a", type=float, default=1.0 / 16,
        help="strip width, a multiple of the grid spacing")

    parser.add_argument(
        "--rows", dest="rows", type=int, default=129,
        help="node count along the height")

    parser.add_argument(
        "--s", dest="s", type=int, default=50,
        help="steps per unit time")

    parser.add_argument(
        "--T", dest="T", type=float,
        help="time horizon, defaults to 1.5 times the predicted time")

    parser.add_argument(
        "--delta", dest="delta", type=float, default=1.0,
        help="displacement rate of the top edge")

    parser.add_argument(
        "--eps-factor", dest="eps_factor", type=float,
        default=const.DEFAULT_EPS_FACTOR,
        help="regularization length in grid spacings")

    parser.add_argument(
        "--k-eps", dest="k_eps", type=float, default=const.DEFAULT_K_EPS,
        help="residual stiffness")

    parser.add_argument(
        "--model", dest="model",
        choices=[const.MODEL_FIRST, const.MODEL_IMPROVED],
        default=const.MODEL_FIRST,
        help="incremental model")

    parser.add_argument(
        "--no-multistart", dest="multistart",
        action='store_false',
        help="skip the pre-cracked start")

    parser.add_argument(
        "--jobs", dest="jobs", type=int, default=1,
        help="strips run in parallel")

    add_material_arguments(parser)

    return parser


def run_strip(params):
    '''Run one strip and return its result row.'''
    L = params['L']
    h = L / (params['rows'] - 1)
    mat = Material(mu=params['mu'], G=params['G'],
                   eps=params['eps_factor'] * h, Sigma=params['Sigma'],
                   cap_C=params['cap_C'], k_eps=params['k_eps'])

    predicted = critical_time_prediction(params['a'], L, mat) / params['delta']
    regularized = regularized_time_prediction(L, mat, h) / params['delta']
    T = params['T'] or 1.5 * predicted

    scenario = strip_scenario(
        params['a'], L, mat, params['rows'], params['s'], T,
        delta=params['delta'], model=params['model'],
        multistart=params['multistart'], stop_at_separation=True)
    onset = onset_step(run_incremental(scenario))

    if onset is None:
        log.warning('Strip L=%s did not separate up to t=%s', L, T)
        return [L, predicted, regularized, -1, float('nan'), float('nan')]

    stress = mat.mu * onset.time * params['delta'] / L
    return [L, predicted, regularized, onset.k, onset.time, stress]


def _runner(args):
    lengths = args.lengths or [1.0]
    params = [dict(L=L, a=args.a, rows=args.rows, s=args.s, T=args.T,
                   delta=args.delta, eps_factor=args.eps_factor,
                   k_eps=args.k_eps, model=args.model,
                   multistart=args.multistart, mu=args.mu, G=args.G,
                   Sigma=args.Sigma, cap_C=args.cap_C)
              for L in lengths]

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as executor:
            rows = list(executor.map(run_strip, params))
    else:
        rows = [run_strip(p) for p in params]

    print(','.join(HEADER))
    for row in rows:
        print(format_row(row))
