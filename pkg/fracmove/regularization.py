'''
Phase field regularization of the crack energy and its alternate
minimization under the irreversibility constraint ``v <= v_prev``.

The regularized energy of a pair ``(u, v)`` is::

    sum_c (v_c**2 + k_eps) mu |grad u|_c**2 h**2
        + sum_c g_c (eps |grad v|_c**2 + (1 - v_c)**2 / (4 eps)) h**2
'''
import logging

import numpy as np
from scipy import sparse

from . import constants as const
from . import grid as grd
from .elastostatics import conjugate_gradient, elastic_energy, solve_equilibrium
from .entities import ATEnergyBreakdown, DamageField, IterationRecord
from .entities import SurfaceDensityField
from .exceptions import GridMismatch, NoConvergence
from .utils import check_same_grid


log = logging.getLogger(__name__)


def constant_density(grid, value):
    '''Surface density equal to ``value`` on every cell.'''
    return SurfaceDensityField(grid, np.full(grid.cell_shape, float(value)))


def surface_density_terms(v, eps):
    '''Per-cell surface integrand with unit density, times the cell area.'''
    grid = v.grid
    gradient = grd.edge_gradient_squared(grid, v.values)
    local = (1.0 - grd.cell_average(grid, v.values)) ** 2 / (4.0 * eps)
    return (eps * gradient + local) * grid.h ** 2


def surface_energy(v, g, mat):
    check_same_grid(v, g)
    return float(np.sum(g.values * surface_density_terms(v, mat.eps)))


def at_energy(u, v, g, mat):
    '''Regularized energy of ``(u, v)`` split into its parts.

    :param u: :py:class:`fracmove.entities.ScalarField`
    :param v: :py:class:`fracmove.entities.DamageField`
    :param g: :py:class:`fracmove.entities.SurfaceDensityField`
    :param mat: :py:class:`fracmove.entities.Material`

    :rtype: :py:class:`fracmove.entities.ATEnergyBreakdown`

    :raises `fracmove.exceptions.GridMismatch`: for fields on different grids
    '''
    grid = check_same_grid(u, v, g)

    if mat.eps < grid.h:
        log.warning('Regularization length %s is below the grid spacing %s',
                    mat.eps, grid.h)

    terms = surface_density_terms(v, mat.eps)
    return ATEnergyBreakdown(
        elastic=elastic_energy(u, v, mat),
        surface=float(np.sum(g.values * terms)),
        surface_length_estimate=float(np.sum(terms)))


def minimize_u(grid, part, bc, v, mat, tol=const.DEFAULT_CG_TOL, x0=None):
    '''Equilibrium displacement for the fixed damage ``v``.'''
    return solve_equilibrium(grid, part, bc, v, mat, tol=tol, x0=x0)


def minimize_v(u, v_prev, g, mat, tol=const.DEFAULT_CG_TOL, partition=None,
               x0=None):
    '''Damage minimizing the regularized energy for the fixed ``u``.

    The unconstrained quadratic problem is solved first and the result is
    then clamped to ``min(v, v_prev)`` and into ``[0, 1]``. With a
    ``partition`` the damage on the Dirichlet nodes stays at ``v_prev``.

    :rtype: :py:class:`fracmove.entities.DamageField`

    :raises `fracmove.exceptions.SolverDiverged`: if CG does not converge
    '''
    grid = check_same_grid(u, v_prev, g)
    if partition is not None and partition.grid != grid:
        raise GridMismatch('Partition does not match the grid')

    h2 = grid.h ** 2
    driving = mat.mu * grd.edge_gradient_squared(grid, u.values) * h2
    local = g.values * h2 / (4.0 * mat.eps)

    average = grd.averaging_matrix(grid)
    kx, ky = grd.edge_weights(grid, mat.eps * g.values)
    matrix = (average.T.dot(sparse.diags((driving + local).ravel()))
              .dot(average) + grd.laplacian(grid, kx, ky)).tocsr()
    rhs = average.T.dot(local.ravel())

    values = np.array(v_prev.values, dtype=float).ravel()
    fixed = np.zeros(grid.n_nodes, dtype=bool)
    if partition is not None:
        fixed = partition.dirichlet_mask.ravel()

    free = ~fixed
    rows = matrix[free]
    guess = np.ravel(x0.values)[free] if x0 is not None else values[free]

    unconstrained = values.copy()
    unconstrained[free] = conjugate_gradient(
        rows[:, free], rhs[free] - rows[:, fixed].dot(values[fixed]),
        tol=tol, x0=guess)

    bounded = np.clip(np.minimum(unconstrained, values), 0.0, 1.0)
    return DamageField(grid, bounded.reshape(grid.shape))


def alternate_minimize(grid, part, bc, v_prev, g, mat,
                       rel_tol=const.DEFAULT_REL_TOL,
                       max_iters=const.DEFAULT_MAX_ITERS,
                       tol=const.DEFAULT_CG_TOL, v_start=None, x0=None,
                       history=None, step=None):
    '''Alternate u and v minimizations until the energy settles.

    The first u-solve uses ``v_start`` (default ``v_prev``); every v-solve
    is bounded by ``v_prev``.

    :param history: optional list receiving
                    :py:class:`fracmove.entities.IterationRecord` items

    :return: ``(u, v, energy, iterations)``

    :raises `fracmove.exceptions.NoConvergence`: if ``max_iters`` is
            reached first
    '''
    v = v_start if v_start is not None else v_prev
    u = minimize_u(grid, part, bc, v, mat, tol=tol, x0=x0)
    previous = at_energy(u, v, g, mat).total
    delta = None

    for iteration in range(1, max_iters + 1):
        v = minimize_v(u, v_prev, g, mat, tol=tol, partition=part, x0=v)
        u = minimize_u(grid, part, bc, v, mat, tol=tol, x0=u)
        energy = at_energy(u, v, g, mat)

        delta = abs(previous - energy.total) / max(energy.total,
                                                   const.ENERGY_FLOOR)
        log.debug('Iteration %d: total=%s, relative change=%s',
                  iteration, energy.total, delta)

        if history is not None:
            history.append(IterationRecord(iteration, energy, step=step))

        if delta <= rel_tol:
            return u, v, energy, iteration

        previous = energy.total

    raise NoConvergence(max_iters, delta, step=step)


def crack_distance(v_a, v_b, eps):
    '''Area of the symmetric difference of the thresholded crack sets,
    divided by ``2*eps``.'''
    grid = check_same_grid(v_a, v_b)
    difference = crack_set(v_a) ^ crack_set(v_b)
    return float(difference.sum()) * grid.h ** 2 / (2.0 * eps)


def crack_set(v):
    '''Cells whose average damage is below the crack threshold.'''
    return grd.crack_cells(v)
