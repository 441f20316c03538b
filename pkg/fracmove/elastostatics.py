'''
Degraded anti-plane elastostatics.

The discrete elastic energy is ``sum_c (v_c**2 + k_eps) mu |grad u|_c**2 h**2``
with ``v_c`` the cell average of the damage. It equals ``u^T K u`` for the
edge assembled stiffness ``K``, so equilibrium solves
``K_ff u_f = -K_fd u_d`` on the free nodes.
'''
import logging

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components
from scipy.sparse.linalg import LinearOperator, cg

from . import constants as const
from . import grid as grd
from .entities import ScalarField, SparseOperator
from .exceptions import (
    GridMismatch, InvalidField, SingularSystem, SolverDiverged)
from .utils import check_same_grid, field_hash


log = logging.getLogger(__name__)


def degradation(v, mat):
    '''Cell stiffness factor ``v_c**2 + k_eps``.'''
    return grd.cell_average(v.grid, v.values) ** 2 + mat.k_eps


def assemble_operator(grid, v, mat):
    '''Stiffness matrix over all nodes for the damage ``v``.

    :rtype: :py:class:`fracmove.entities.SparseOperator`
    '''
    kx, ky = grd.edge_weights(grid, mat.mu * degradation(v, mat))
    return SparseOperator(grd.laplacian(grid, kx, ky),
                          damage_hash=field_hash(v.values))


def conjugate_gradient(matrix, rhs, tol=const.DEFAULT_CG_TOL, x0=None,
                       maxiter=None):
    '''Jacobi preconditioned conjugate gradient.

    :raises `fracmove.exceptions.SolverDiverged`: if the iteration cap is
            reached or the method breaks down
    '''
    n = matrix.shape[0]
    if n == 0:
        return np.zeros(0)

    maxiter = maxiter or const.CG_ITERATION_FACTOR * n
    inverse = 1.0 / matrix.diagonal()
    precond = LinearOperator(
        matrix.shape, matvec=lambda x: inverse * np.ravel(x), dtype=float)

    x, info = cg(matrix, rhs, x0=x0, rtol=tol, atol=0.0, maxiter=maxiter,
                 M=precond)
    if info != 0:
        raise SolverDiverged(maxiter if info > 0 else info)
    return x


def floating_nodes(grid, v, fixed):
    '''Nodes whose intact neighbourhood is not connected to a Dirichlet
    node.

    Edges bordered only by cracked cells are treated as cut.

    :param fixed: flat boolean mask of Dirichlet nodes
    :return: flat boolean mask
    '''
    intact = grd.cell_average(grid, v.values) >= const.CRACK_THRESHOLD
    if intact.all():
        return np.zeros(grid.n_nodes, dtype=bool)

    kx, ky = grd.edge_weights(grid, intact.astype(float))
    p, q = grd.edge_pairs(grid)
    open_edges = np.concatenate([kx.ravel(), ky.ravel()]) > 0

    n = grid.n_nodes
    graph = sparse.coo_matrix(
        (np.ones(int(open_edges.sum())), (p[open_edges], q[open_edges])),
        shape=(n, n))
    _, labels = connected_components(graph, directed=False)

    anchored = np.zeros(labels.max() + 1, dtype=bool)
    anchored[labels[fixed]] = True
    return ~anchored[labels]


def solve_equilibrium(grid, part, bc, v, mat, tol=const.DEFAULT_CG_TOL,
                      x0=None, reaction=None):
    '''Minimize the degraded elastic energy with the Dirichlet data ``bc``.

    Components cut off from every Dirichlet node by cracked cells are
    pinned to 0 and counted in the ``pinned`` attribute of the result.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param part: :py:class:`fracmove.entities.BoundaryPartition`
    :param bc: :py:class:`fracmove.entities.DirichletData`
    :param v: :py:class:`fracmove.entities.DamageField`
    :param mat: :py:class:`fracmove.entities.Material`
    :param float tol: relative residual of the linear solve
    :param x0: optional :py:class:`fracmove.entities.ScalarField` used as
               initial guess
    :param reaction: optional ``(weight, target)`` pair adding the term
               ``weight * sum_n m_n (u_n - target_n)**2`` with lumped nodal
               areas ``m_n``

    :return: displacement
    :rtype: :py:class:`fracmove.entities.ScalarField`

    :raises `fracmove.exceptions.SingularSystem`: without Dirichlet nodes
    :raises `fracmove.exceptions.SolverDiverged`: if CG does not converge
    '''
    if part.grid != grid or bc.partition.grid != grid:
        raise GridMismatch('Partition and Dirichlet data must match the grid')
    check_same_grid(part, v, x0)

    fixed = part.dirichlet_mask.ravel()
    if not fixed.any():
        raise SingularSystem('The partition has no Dirichlet node')

    operator = assemble_operator(grid, v, mat)
    values = np.array(bc.values, dtype=float).ravel()
    extra = np.zeros(grid.n_nodes)

    if reaction is not None:
        weight, target = reaction
        mass = weight * grd.node_areas(grid).ravel()
        operator = SparseOperator(
            (operator.matrix + sparse.diags(mass)).tocsr(),
            damage_hash=operator.damage_hash)
        extra = mass * np.ravel(target.values)

    # The reaction term keeps detached components determined
    pinned = np.zeros(grid.n_nodes, dtype=bool)
    if reaction is None:
        pinned = floating_nodes(grid, v, fixed)

    if pinned.any():
        log.warning('Pinning %d nodes of components without Dirichlet data '
                    'to 0', int(pinned.sum()))
        fixed = fixed | pinned
        values[pinned] = 0.0

    free = ~fixed
    log.debug('Solving on %d free nodes with %r', int(free.sum()), operator)
    coupling = operator.matrix[free][:, fixed]
    rhs = extra[free] - coupling.dot(values[fixed])

    guess = None
    if x0 is not None:
        guess = np.ravel(x0.values)[free]

    values[free] = conjugate_gradient(
        operator.restrict(free), rhs, tol=tol, x0=guess,
        maxiter=const.CG_ITERATION_FACTOR * grid.n_nodes)

    return ScalarField(grid, values.reshape(grid.shape),
                       pinned=int(pinned.sum()))


def elastic_energy(u, v, mat):
    '''Degraded elastic energy ``sum_c (v_c**2 + k_eps) mu |grad u|_c**2 h**2``.

    :raises `fracmove.exceptions.GridMismatch`: for fields on different grids
    '''
    grid = check_same_grid(u, v)
    density = grd.edge_gradient_squared(grid, u.values)
    return float(np.sum(mat.mu * degradation(v, mat) * density) * grid.h ** 2)


def stress_field(u, mat):
    '''Cell centered stress ``mu grad u``, shape ``(nx-1, ny-1, 2)``.'''
    return mat.mu * grd.cell_gradient(u.grid, u.values)


def dtn_pairing(grid, part, bc_a, bc_b, v, mat, tol=const.DEFAULT_CG_TOL,
                extension=None):
    '''Pairing of the Dirichlet-to-Neumann map, ``<T bc_a, bc_b>``.

    Evaluated as the volume integral of ``sigma(u_a) . grad w`` where
    ``u_a`` is the equilibrium for ``bc_a`` and ``w`` extends ``bc_b``.
    Without an explicit ``extension`` the equilibrium for ``bc_b`` is used,
    which keeps the result exactly symmetric.
    '''
    u_a = solve_equilibrium(grid, part, bc_a, v, mat, tol)

    if extension is None:
        w = solve_equilibrium(grid, part, bc_b, v, mat, tol)
    else:
        check_same_grid(u_a, extension)
        mask = part.dirichlet_mask
        if not np.allclose(extension.values[mask], bc_b.values[mask]):
            raise InvalidField('Extension does not match the Dirichlet data')
        w = extension

    matrix = assemble_operator(grid, v, mat).matrix
    return 2.0 * float(np.ravel(u_a.values).dot(matrix.dot(np.ravel(w.values))))


def l2_norm(values, grid):
    '''Lumped L2 norm of a nodal array.'''
    return float(np.sqrt(np.sum(grd.node_areas(grid) * np.asarray(values) ** 2)))
