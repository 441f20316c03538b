'''
Structured grids, boundary partitions and the finite difference stencils
shared by the elastic and damage solvers.

Energies are integrated per cell with an edge based rule: the squared
gradient of a cell is half the sum of its four squared edge differences,
divided by ``h**2``. The rule is exact for linear fields and turns every
cell weighted Dirichlet energy into a sum over grid edges.
'''
import logging

import numpy as np
from scipy import ndimage, sparse

from . import constants as const
from .entities import BoundaryPartition, Grid2
from .exceptions import UnlabeledEdge, ValidationError


log = logging.getLogger(__name__)


def build_grid(nx, ny, lx, ly):
    '''Create a grid of ``nx`` by ``ny`` nodes covering ``[0,lx]x[0,ly]``.

    :raises `fracmove.exceptions.NonSquareCells`: if the spacings differ
    :raises `fracmove.exceptions.TooSmall`: if an axis has fewer than 3 nodes
    '''
    return Grid2(nx, ny, lx, ly)


def _edge_slices(edge):
    return {
        const.EDGE_BOTTOM: (slice(None), 0),
        const.EDGE_TOP: (slice(None), -1),
        const.EDGE_LEFT: (0, slice(None)),
        const.EDGE_RIGHT: (-1, slice(None)),
    }[edge]


def partition_boundary(grid, spec):
    '''Label the boundary nodes edge by edge.

    Corner nodes belong to two edges and take the label that comes first
    in :py:data:`fracmove.constants.LABEL_PRIORITY`.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param dict spec: edge name (``bottom``, ``top``, ``left``, ``right``)
                      to label

    :return: boundary partition
    :rtype: :py:class:`fracmove.entities.BoundaryPartition`

    :raises `fracmove.exceptions.UnlabeledEdge`: if an edge has no label
    '''
    missing = [edge for edge in const.EDGES if edge not in spec]
    if missing:
        raise UnlabeledEdge(missing)

    unknown = [edge for edge in spec if edge not in const.EDGES]
    if unknown:
        raise ValidationError('Unknown edges: {}'.format(', '.join(unknown)))

    rank = dict((label, index)
                for index, label in enumerate(const.LABEL_PRIORITY))

    # Paint lowest priority first so corners end with the highest one
    labels = np.zeros(grid.shape, dtype=np.int8)
    edges = sorted(const.EDGES, key=lambda e: -rank.get(spec[e], -1))
    for edge in edges:
        label = spec[edge]
        if label not in const.LABEL_CODES:
            raise ValidationError(
                'Unknown label {} for edge {}'.format(label, edge))
        labels[_edge_slices(edge)] = const.LABEL_CODES[label]

    partition = BoundaryPartition(grid, labels, spec)
    log.debug('Boundary partition: %s', partition.counts())
    return partition


def node_index(grid):
    return np.arange(grid.n_nodes).reshape(grid.shape)


def cell_average(grid, values):
    '''Average of the four corner values of every cell.'''
    a = np.asarray(values)
    return 0.25 * (a[:-1, :-1] + a[1:, :-1] + a[:-1, 1:] + a[1:, 1:])


def cell_gradient(grid, values):
    '''Gradient of the bilinear interpolant at every cell center.

    :return: array of shape ``(nx-1, ny-1, 2)``
    '''
    a = np.asarray(values)
    gx = ((a[1:, :-1] - a[:-1, :-1]) + (a[1:, 1:] - a[:-1, 1:])) / (2 * grid.h)
    gy = ((a[:-1, 1:] - a[:-1, :-1]) + (a[1:, 1:] - a[1:, :-1])) / (2 * grid.h)
    return np.stack([gx, gy], axis=-1)


def edge_gradient_squared(grid, values):
    '''Squared gradient per cell from its four edge differences.'''
    a = np.asarray(values)
    dx = np.diff(a, axis=0)
    dy = np.diff(a, axis=1)
    return 0.5 * (dx[:, :-1] ** 2 + dx[:, 1:] ** 2 +
                  dy[:-1, :] ** 2 + dy[1:, :] ** 2) / grid.h ** 2


def edge_weights(grid, cell_weights):
    '''Edge stiffnesses of the cell weighted energy
    ``sum_c W_c |grad a|_c^2 h^2``.

    Each edge collects half the weight of every cell it borders.

    :return: ``(kx, ky)`` with shapes ``(nx-1, ny)`` and ``(nx, ny-1)``
    '''
    w = np.asarray(cell_weights, dtype=float)
    wp = np.pad(w, ((0, 0), (1, 1)))
    kx = 0.5 * (wp[:, :-1] + wp[:, 1:])
    wq = np.pad(w, ((1, 1), (0, 0)))
    ky = 0.5 * (wq[:-1, :] + wq[1:, :])
    return kx, ky


def edge_pairs(grid):
    idx = node_index(grid)
    px, qx = idx[:-1, :].ravel(), idx[1:, :].ravel()
    py, qy = idx[:, :-1].ravel(), idx[:, 1:].ravel()
    return np.concatenate([px, py]), np.concatenate([qx, qy])


def laplacian(grid, kx, ky):
    '''Sparse matrix ``K`` with ``a^T K a = sum_e k_e (a_p - a_q)^2``.

    :rtype: :py:class:`scipy.sparse.csr_matrix`
    '''
    p, q = edge_pairs(grid)
    k = np.concatenate([np.ravel(kx), np.ravel(ky)])
    rows = np.concatenate([p, q, p, q])
    cols = np.concatenate([p, q, q, p])
    vals = np.concatenate([k, k, -k, -k])
    n = grid.n_nodes
    return sparse.coo_matrix((vals, (rows, cols)), shape=(n, n)).tocsr()


def averaging_matrix(grid):
    '''Sparse nodes-to-cells averaging operator of shape
    ``(n_cells, n_nodes)``.'''
    idx = node_index(grid)
    corners = [idx[:-1, :-1], idx[1:, :-1], idx[:-1, 1:], idx[1:, 1:]]
    cells = np.arange(grid.n_cells)
    rows = np.concatenate([cells] * 4)
    cols = np.concatenate([c.ravel() for c in corners])
    vals = np.full(rows.shape, 0.25)
    return sparse.coo_matrix(
        (vals, (rows, cols)), shape=(grid.n_cells, grid.n_nodes)).tocsr()


def node_areas(grid):
    '''Lumped nodal areas, ``h**2`` inside, halved on edges and quartered
    at corners.'''
    wx = np.ones(grid.nx)
    wx[[0, -1]] = 0.5
    wy = np.ones(grid.ny)
    wy[[0, -1]] = 0.5
    return np.outer(wx, wy) * grid.h ** 2


def adjacent_cells(node_mask):
    '''Cells touching at least one masked node.'''
    m = np.asarray(node_mask, dtype=bool)
    return m[:-1, :-1] | m[1:, :-1] | m[:-1, 1:] | m[1:, 1:]


def has_separating_crack(v, partition):
    '''Tell whether no path of intact cells joins GammaU1 to GammaU2.

    Cells with an average damage below
    :py:data:`fracmove.constants.CRACK_THRESHOLD` count as cracked.
    '''
    u1 = partition.mask(const.GAMMA_U1)
    u2 = partition.mask(const.GAMMA_U2)
    if not u1.any() or not u2.any():
        return False

    intact = cell_average(v.grid, v.values) >= const.CRACK_THRESHOLD
    labels, _ = ndimage.label(intact)

    first = set(np.unique(labels[adjacent_cells(u1) & intact]))
    second = set(np.unique(labels[adjacent_cells(u2) & intact]))
    return not (first & second)


def _separates(cut, u1, u2):
    labels, _ = ndimage.label(~cut)
    first = set(np.unique(labels[u1])) - {0}
    second = set(np.unique(labels[u2])) - {0}
    return not (first & second)


def minimal_separating_cut(grid, partition):
    '''Shortest straight band of two node rows (or columns) that splits
    GammaU1 from GammaU2 without touching a Dirichlet node.

    Among bands of equal length the one closest to the middle wins.

    :return: boolean node mask or ``None`` if no band separates
    '''
    u1 = partition.mask(const.GAMMA_U1)
    u2 = partition.mask(const.GAMMA_U2)
    if not u1.any() or not u2.any():
        return None

    fixed = partition.dirichlet_mask
    candidates = []

    for j in range(1, grid.ny - 2):
        cut = np.zeros(grid.shape, dtype=bool)
        cut[:, j:j + 2] = True
        if not (cut & fixed).any() and _separates(cut, u1, u2):
            offset = abs(j + 0.5 - (grid.ny - 1) / 2.0)
            candidates.append((grid.lx, offset, len(candidates), cut))

    for i in range(1, grid.nx - 2):
        cut = np.zeros(grid.shape, dtype=bool)
        cut[i:i + 2, :] = True
        if not (cut & fixed).any() and _separates(cut, u1, u2):
            offset = abs(i + 0.5 - (grid.nx - 1) / 2.0)
            candidates.append((grid.ly, offset, len(candidates), cut))

    if not candidates:
        log.debug('No straight band separates GammaU1 from GammaU2')
        return None

    return min(candidates, key=lambda c: c[:3])[3]


def crack_cells(v):
    '''Discrete crack set, the cells below the crack threshold.'''
    return cell_average(v.grid, v.values) < const.CRACK_THRESHOLD
