import logging
import os

from .. import create_model
from .. import constants as const
from ..config import parse_scenario, to_scenario
from ..converters import (
    write_energy_trace,
    write_field,
    write_iteration_log,
    write_viscous_trace,
    write_vtk,
)
from ..evolution import onset_step
from ..exceptions import IoError

log = logging.getLogger(__name__)


def extend_arguments(parser):

    parser.add_argument(
        "config",
        help="scenario file")

    parser.add_argument(
        "-o", "--output", dest="output",
        help="output directory, overrides output.dir of the scenario")

    parser.add_argument(
        "--iterations", dest="iterations",
        action='store_true',
        help="also write the energy of every alternate minimization "
             "iteration to iterations.csv")

    return parser


def prepare_output(path):
    try:
        if not os.path.isdir(path):
            os.makedirs(path)
    except OSError as e:
        raise IoError(path, e.strerror or str(e))
    return path


def write_snapshots(trace, directory, stride):
    if not stride:
        return
    for step in trace.steps:
        if step.k % stride:
            continue
        name = '{:05d}'.format(step.k)
        with open(os.path.join(directory, 'u_{}.csv'.format(name)), 'w') as f:
            write_field(step.u, f)
        with open(os.path.join(directory, 'v_{}.csv'.format(name)), 'w') as f:
            write_field(step.v, f)
        write_vtk(step.u.grid, {'u': step.u.values, 'v': step.v.values},
                  os.path.join(directory, 'fields_{}.vtk'.format(name)))


def execute(config, output, iterations=False):
    '''Run a parsed scenario and write its results to ``output``.'''

    scenario = to_scenario(config)
    directory = prepare_output(output or config['output']['dir'])

    history = [] if iterations else None
    trace = create_model(scenario.model).run(scenario, history=history)

    with open(os.path.join(directory, 'trace.csv'), 'w') as f:
        if scenario.model == const.MODEL_VISCOUS:
            write_viscous_trace(trace, f)
        else:
            write_energy_trace(trace, f)

    if history is not None:
        with open(os.path.join(directory, 'iterations.csv'), 'w') as f:
            write_iteration_log(history, f)

    write_snapshots(trace, directory, config['output']['snapshot_stride'])

    if scenario.model != const.MODEL_VISCOUS:
        onset = onset_step(trace)
        if onset is None:
            log.info('No separating crack up to t=%s', trace[-1].time)
        else:
            log.info('Separating crack at step %d (t=%s)', onset.k,
                     onset.time)

    log.info('Results written to %s', directory)
    return trace


def _runner(args):
    execute(parse_scenario(args.config), args.output,
            iterations=args.iterations)
