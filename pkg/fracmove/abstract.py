import logging

import numpy as np

from . import grid as grd
from .elastostatics import elastic_energy, solve_equilibrium
from .entities import DamageField, IncrementTrace, StepRecord
from .exceptions import NoConvergence
from .regularization import alternate_minimize, at_energy, surface_energy


class AbstractModel(object):
    '''
    Abstract incremental model.

    This class can not be used directly, use :py:meth:`fracmove.create_model`
    to create model instances.

    At every step the load is sampled at ``t = k/s`` and the regularized
    energy is minimized over the damage fields below the previous one.
    Subclasses decide the surface density used at each step.
    '''

    name = None

    def __init__(self):
        self.log = logging.getLogger(
            "{}.{}".format(self.__module__, self.__class__.__name__))
        self._cracked_seed = None

    def surface_density(self, scenario, u, v):
        '''Surface density for the step following the state ``(u, v)``.

        :rtype: :py:class:`fracmove.entities.SurfaceDensityField`
        '''
        raise NotImplementedError()

    def initial_state(self, scenario):
        grid = scenario.grid
        v = scenario.initial_damage
        if v is None:
            v = DamageField.intact(grid)
        bc = scenario.load.dirichlet(scenario.partition, 0.0)
        u = solve_equilibrium(grid, scenario.partition, bc, v,
                              scenario.material, tol=scenario.tol)
        g = self.surface_density(scenario, u, v)
        intact = DamageField.intact(grid)
        intact_u = solve_equilibrium(grid, scenario.partition, bc, intact,
                                     scenario.material, tol=scenario.tol)
        return StepRecord(
            k=0, time=0.0, u=u, v=v,
            energy=at_energy(u, v, g, scenario.material),
            intact_elastic=elastic_energy(intact_u, intact,
                                          scenario.material),
            separated=grd.has_separating_crack(v, scenario.partition))

    def run(self, scenario, history=None):
        '''Run the incremental evolution of ``scenario``.

        :param scenario: :py:class:`fracmove.entities.Scenario`
        :param list history: optional list receiving one
               :py:class:`fracmove.entities.IterationRecord` per
               alternate minimization iteration

        :rtype: :py:class:`fracmove.entities.IncrementTrace`

        :raises `fracmove.exceptions.NoConvergence`: with the failing step
        '''
        current = self.initial_state(scenario)
        steps = [current]

        cut = None
        if scenario.multistart:
            cut = grd.minimal_separating_cut(scenario.grid, scenario.partition)
        self._cracked_seed = None

        self.log.info('Running %d steps of the %s model', scenario.n_steps,
                      self.name)

        for k in range(1, scenario.n_steps + 1):
            current = self.step(scenario, k, current, cut, history)
            steps.append(current)

            self.log.info('Step %d (t=%s): elastic=%s, surface=%s%s', k,
                          current.time, current.elastic, current.surface,
                          ', separated' if current.separated else '')

            if scenario.stop_at_separation and current.separated:
                self.log.info('GammaU1 and GammaU2 separated at step %d', k)
                break

        return IncrementTrace(scenario, steps)

    def step(self, scenario, k, previous, cut=None, history=None):
        grid = scenario.grid
        part = scenario.partition
        mat = scenario.material
        time = float(k) / scenario.s

        bc = scenario.load.dirichlet(part, time)
        g = self.surface_density(scenario, previous.u, previous.v)

        u_star = solve_equilibrium(grid, part, bc, previous.v, mat,
                                   tol=scenario.tol, x0=previous.u)
        elastic_star = elastic_energy(u_star, previous.v, mat)
        surface_prev = surface_energy(previous.v, g, mat)

        params = dict(rel_tol=scenario.rel_tol, max_iters=scenario.max_iters,
                      tol=scenario.tol, history=history, step=k)

        try:
            candidates = [alternate_minimize(
                grid, part, bc, previous.v, g, mat, x0=u_star, **params)]
        except NoConvergence as e:
            raise NoConvergence(e.iterations, e.delta, step=k)

        if cut is not None and not previous.separated:
            start = self._cracked_start(previous.v, cut)
            try:
                candidates.append(alternate_minimize(
                    grid, part, bc, previous.v, g, mat, v_start=start,
                    x0=u_star, **params))
            except NoConvergence as e:
                self.log.warning('Pre-cracked start of step %d dropped: %s',
                                 k, e)

        best = min(candidates, key=lambda c: c[2].total)
        if len(candidates) > 1:
            self._cracked_seed = candidates[1][1]
        u, v, energy, iterations = best

        intact = DamageField.intact(grid)
        intact_u = solve_equilibrium(grid, part, bc, intact, mat,
                                     tol=scenario.tol)

        return StepRecord(
            k=k, time=time, u=u, v=v, energy=energy,
            elastic_star=elastic_star, surface_prev=surface_prev,
            work=elastic_star - previous.elastic,
            intact_elastic=elastic_energy(intact_u, intact, mat),
            separated=grd.has_separating_crack(v, part),
            iterations=iterations)

    def _cracked_start(self, v_prev, cut):
        '''Previous damage with the separating band set to 0, lowered to the
        last pre-cracked candidate when there is one.'''
        values = np.where(cut, 0.0, v_prev.values)
        if self._cracked_seed is not None:
            values = np.minimum(self._cracked_seed.values, values)
        return DamageField(v_prev.grid, values)
