'''
Viscous evolution: every step adds ``lambda * s`` times the squared L2
distance to the previous displacement to the regularized energy, under a
boundary displacement held at the trace of the initial datum.
'''
import logging
import math

import numpy as np
from scipy.spatial.distance import pdist

from . import constants as const
from . import grid as grd
from .abstract import AbstractModel
from .elastostatics import l2_norm, solve_equilibrium
from .entities import (
    DamageField,
    DirichletData,
    HolderEstimate,
    ScalarField,
    ViscousStep,
    ViscousTrace,
)
from .exceptions import NoConvergence, TraceTooShort, ValidationError
from .regularization import at_energy, constant_density, minimize_v
from .utils import check_same_grid


log = logging.getLogger(__name__)


def viscous_step(grid, part, bc, u_prev, v_prev, s, lam, g, mat, bound=None,
                 tol=const.DEFAULT_CG_TOL, rel_tol=const.DEFAULT_REL_TOL,
                 max_iters=const.DEFAULT_MAX_ITERS):
    '''One implicit step from ``(u_prev, v_prev)``.

    Alternates the penalized u-solve, clamped to ``[-bound, bound]``, with
    the damage solve bounded by ``v_prev``.

    :return: ``(u, v, energy, penalty, iterations)``

    :raises `fracmove.exceptions.NoConvergence`: if ``max_iters`` is
            reached first
    '''
    if s < 1 or not lam > 0:
        raise ValidationError('Expected s >= 1 and a positive viscosity')

    weight = lam * s
    u, v = u_prev, v_prev
    previous = at_energy(u_prev, v_prev, g, mat).total
    delta = None

    for iteration in range(1, max_iters + 1):
        u = solve_equilibrium(grid, part, bc, v, mat, tol=tol, x0=u,
                              reaction=(weight, u_prev))
        if bound is not None:
            u = ScalarField(grid, np.clip(u.values, -bound, bound))

        v = minimize_v(u, v_prev, g, mat, tol=tol, partition=part, x0=v)

        energy = at_energy(u, v, g, mat)
        penalty = weight * l2_norm(u.values - u_prev.values, grid) ** 2
        total = energy.total + penalty

        delta = abs(previous - total) / max(total, const.ENERGY_FLOOR)
        log.debug('Viscous iteration %d: total=%s, penalty=%s', iteration,
                  total, penalty)

        if delta <= rel_tol:
            return u, v, energy, penalty, iteration

        previous = total

    raise NoConvergence(max_iters, delta)


def run_viscous(u0, v0, s, lam, T, part, mat, g=None,
                tol=const.DEFAULT_CG_TOL, rel_tol=const.DEFAULT_REL_TOL,
                max_iters=const.DEFAULT_MAX_ITERS):
    '''Viscous evolution from ``(u0, v0)`` over ``ceil(s*T)`` steps.

    :param u0: :py:class:`fracmove.entities.ScalarField`, its values on the
               Dirichlet nodes stay imposed for the whole run
    :param v0: :py:class:`fracmove.entities.DamageField` or ``None``
    :param g: surface density, defaults to ``G`` everywhere

    :rtype: :py:class:`fracmove.entities.ViscousTrace`
    '''
    grid = u0.grid
    if v0 is None:
        v0 = DamageField.intact(grid)
    check_same_grid(u0, v0, part)
    if T < 0:
        raise ValidationError('Time horizon must not be negative')

    g = g or constant_density(grid, mat.G)
    bc = DirichletData.from_field(part, u0)
    bound = float(np.max(np.abs(u0.values)))

    steps = [ViscousStep(0, 0.0, u0, v0, at_energy(u0, v0, g, mat))]
    n_steps = int(math.ceil(s * T - 1e-9))

    for k in range(1, n_steps + 1):
        previous = steps[-1]
        try:
            u, v, energy, penalty, iterations = viscous_step(
                grid, part, bc, previous.u, previous.v, s, lam, g, mat,
                bound=bound, tol=tol, rel_tol=rel_tol, max_iters=max_iters)
        except NoConvergence as e:
            raise NoConvergence(e.iterations, e.delta, step=k)

        steps.append(ViscousStep(k, float(k) / s, u, v, energy,
                                 penalty=penalty, iterations=iterations))
        log.info('Viscous step %d: total=%s, penalty=%s', k, energy.total,
                 penalty)

    return ViscousTrace(steps, s, lam, bound)


def holder_bound(dt, s, lam):
    '''Right hand side of the continuity estimate without its constant,
    ``sqrt(dt + 1/(lam*s))``.'''
    return np.sqrt(np.asarray(dt) + 1.0 / (lam * s))


def holder_estimate_check(trace, s=None, lam=None, M=None):
    '''Fit the constant of the square-root continuity estimate.

    :param trace: :py:class:`fracmove.entities.ViscousTrace`
    :param float M: optional constant whose violations are reported

    :rtype: :py:class:`fracmove.entities.HolderEstimate`

    :raises `fracmove.exceptions.TraceTooShort`: for fewer than 3 steps
    '''
    if len(trace) < 3:
        raise TraceTooShort(len(trace))

    s = s or trace.s
    lam = lam or trace.lam
    grid = trace[0].u.grid

    weights = np.sqrt(grd.node_areas(grid)).ravel()
    states = np.array([step.u.values.ravel() * weights for step in trace])
    times = np.array([[step.time] for step in trace])

    distances = pdist(states)
    ratios = distances / holder_bound(pdist(times, 'cityblock'), s, lam)
    m_fit = float(ratios.max())

    violations = []
    if M is not None:
        pairs = [(a.k, b.k) for index, a in enumerate(trace.steps)
                 for b in trace.steps[index + 1:]]
        violations = [pair for pair, ratio in zip(pairs, ratios)
                      if ratio > M]

    return HolderEstimate(m_fit, violations)


class ViscousModel(AbstractModel):
    '''Viscous evolution of a perturbed equilibrium.

    The initial datum is the intact equilibrium of the load at ``t = 1``
    plus ``perturbation * sin(pi x/lx) sin(pi y/ly)``.
    '''

    name = const.MODEL_VISCOUS

    def surface_density(self, scenario, u, v):
        return constant_density(scenario.grid, scenario.material.G)

    def initial_datum(self, scenario):
        grid = scenario.grid
        bc = scenario.load.dirichlet(scenario.partition, 1.0)
        intact = DamageField.intact(grid)
        u_eq = solve_equilibrium(grid, scenario.partition, bc, intact,
                                 scenario.material, tol=scenario.tol)
        x, y = grid.coordinates()
        bump = np.sin(math.pi * x / grid.lx) * np.sin(math.pi * y / grid.ly)
        bump[grid.boundary_mask()] = 0.0
        return ScalarField(grid, u_eq.values + scenario.perturbation * bump)

    def run(self, scenario, history=None):
        self.log.info('Running %d viscous steps with lambda=%s',
                      scenario.n_steps, scenario.lam)
        return run_viscous(
            self.initial_datum(scenario), scenario.initial_damage,
            scenario.s, scenario.lam, scenario.T, scenario.partition,
            scenario.material, g=self.surface_density(scenario, None, None),
            tol=scenario.tol, rel_tol=scenario.rel_tol,
            max_iters=scenario.max_iters)
