'''
Quasi-static incremental models and the energy ledgers of their traces.
'''
import logging
import math

from . import constants as const
from .abstract import AbstractModel
from .criteria import surface_density_field
from .entities import LedgerVerdict, LoadProgram, Scenario
from .grid import build_grid, partition_boundary
from .regularization import constant_density


log = logging.getLogger(__name__)


class FirstModel(AbstractModel):
    '''Griffith model: the surface density is ``G`` everywhere.'''

    name = const.MODEL_FIRST

    def surface_density(self, scenario, u, v):
        return constant_density(scenario.grid, scenario.material.G)


class ImprovedModel(AbstractModel):
    '''Model with a surcharge for cracks the stress state does not admit.

    The density of a step is computed from the state of the previous step;
    with no stress it equals ``cap_C`` everywhere.
    '''

    name = const.MODEL_IMPROVED

    def surface_density(self, scenario, u, v):
        return surface_density_field(u, v, scenario.material)


def run_incremental(scenario, history=None):
    '''Run ``scenario`` with the model it names.'''
    from . import create_model
    return create_model(scenario.model).run(scenario, history=history)


def _slack(step, mat, length, slack):
    if slack is not None:
        return slack
    return const.LEDGER_SLACK_FACTOR * (step.total + mat.G * length)


def griffith_ledger_check(trace, slack=None):
    '''Incremental Griffith inequality at every step.

    At step ``k`` the elastic energy of the no-growth competitor must be at
    least the elastic energy reached plus the surface energy added.

    :param trace: :py:class:`fracmove.entities.IncrementTrace`
    :param float slack: absolute slack, defaults to
           ``1e-6 * (total + G * a)``

    :return: list of :py:class:`fracmove.entities.LedgerVerdict`, the first
             one for the initial state
    '''
    mat = trace.scenario.material
    length = trace.scenario.reference_length

    verdicts = []
    for step in trace.steps:
        lhs = step.elastic_star
        rhs = step.elastic + step.surface_increment
        ok = lhs >= rhs - _slack(step, mat, length, slack)
        if not ok:
            log.debug('Griffith inequality fails at step %d: %s < %s',
                      step.k, lhs, rhs)
        verdicts.append(LedgerVerdict(step.k, ok, lhs, rhs, step.work))
    return verdicts


def power_bound_check(trace, s=None, slack=None):
    '''Compare the energy at every step with the estimated power.

    :return: ``(P_est, ok)`` with ``P_est = s * max_k p_k`` and ``ok`` true
             when ``total_k <= P_est * k / s`` plus slack at every step
    '''
    s = s or trace.s
    mat = trace.scenario.material
    length = trace.scenario.reference_length

    works = [step.work for step in trace.steps[1:]]
    power = s * max(works) if works else 0.0
    power = max(power, 0.0)

    ok = all(step.total <= power * step.k / float(s) +
             _slack(step, mat, length, slack)
             for step in trace.steps)
    return power, ok


def critical_time_prediction(a, L, mat):
    '''Time of the brutal crack in the strip loaded by ``t*delta`` with
    ``delta = 1``, ``sqrt(G L / mu)``. The width ``a`` cancels out.'''
    return math.sqrt(mat.G * L / mat.mu)


def crack_band_factor(h, mat):
    '''Cost of a one-cell crack band relative to ``G``, ``1 + h/(4 eps)``.'''
    return 1.0 + h / (4.0 * mat.eps)


def regularized_time_prediction(L, mat, h):
    '''Onset time of the regularized strip with grid spacing ``h``.

    The uniformly softened state, damage ``1/(1 + 4 eps mu g**2/G)`` at the
    gradient ``g = t/L``, stores ``L x / (1 + 4 eps x/G)`` per unit width
    with ``x = mu g**2``. The crack band costs ``c G`` per unit width with
    ``c`` from :py:func:`crack_band_factor`. Equating both gives
    ``x = c G / (L - 4 eps c)``. Returns ``inf`` when the band never wins.
    '''
    c = crack_band_factor(h, mat)
    margin = L - 4.0 * mat.eps * c
    if margin <= 0:
        return math.inf
    return L * math.sqrt(c * mat.G / (margin * mat.mu))


def onset_step(trace):
    '''First step whose damage separates GammaU1 from GammaU2.'''
    for step in trace.steps:
        if step.separated:
            return step
    return None


def transition_steps(trace, low=0.2, high=0.8):
    '''Steps whose elastic energy lies strictly between ``low`` and ``high``
    times the intact elastic energy at the same load.'''
    found = []
    for step in trace.steps:
        if not step.intact_elastic:
            continue
        ratio = step.elastic / step.intact_elastic
        if low < ratio < high:
            found.append(step.k)
    return found


def time_refinement_gap(first, second):
    '''Largest total energy difference of two traces at their shared
    times.'''
    totals = dict((round(step.time, 12), step.total) for step in first.steps)
    gaps = [abs(totals[round(step.time, 12)] - step.total)
            for step in second.steps if round(step.time, 12) in totals]
    return max(gaps) if gaps else 0.0


def strip_scenario(a, L, mat, rows, s, T, delta=1.0, model=const.MODEL_FIRST,
                   multistart=True, stop_at_separation=True):
    '''Strip ``(0,a)x(0,L)`` held at 0 on the bottom, pulled by ``t*delta``
    on the top and free on the sides.

    :param int rows: node count along the height; the width must be a
           multiple of the resulting spacing
    '''
    h = float(L) / (rows - 1)
    nx = int(round(a / h)) + 1
    grid = build_grid(nx, rows, a, L)
    part = partition_boundary(grid, {
        const.EDGE_BOTTOM: const.GAMMA_U1,
        const.EDGE_TOP: const.GAMMA_U2,
        const.EDGE_LEFT: const.GAMMA_F,
        const.EDGE_RIGHT: const.GAMMA_F,
    })
    return Scenario(grid, part, LoadProgram.strip(delta), mat, model=model,
                    T=T, s=s, multistart=multistart,
                    stop_at_separation=stop_at_separation, reference_length=a)
