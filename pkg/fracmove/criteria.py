'''
Crack appearance criteria.

The local admissibility value of a state ``(sigma, F, n)`` is the largest
``sigma_li n_i F_lk nu_k`` over unit vectors ``nu`` orthogonal to ``n``.
With ``b = F^T sigma n`` it is the length of the part of ``b`` orthogonal
to ``n``.
'''
import logging
import math

import numpy as np
from scipy.interpolate import RegularGridInterpolator

from . import constants as const
from . import grid as grd
from .entities import DAVerdict, SurfaceDensityField, TensorState
from .exceptions import EmptyCandidate, InvalidMaterial, InvalidField
from .utils import check_same_grid


log = logging.getLogger(__name__)


def la_sup(state):
    '''Closed form of the local admissibility supremum.

    :param state: :py:class:`fracmove.entities.TensorState`
    :rtype: float
    '''
    n = state.n
    b = state.F.T.dot(state.sigma.dot(n))
    # In 2D the orthogonal part is (b . n_perp) n_perp
    projected = b - b.dot(n) * n
    return float(np.linalg.norm(projected))


def _orthonormal_basis(n):
    axis = np.zeros(3)
    axis[np.argmin(np.abs(n))] = 1.0
    first = np.cross(n, axis)
    first /= np.linalg.norm(first)
    return first, np.cross(n, first)


def _embed(state):
    if state.dim == 3:
        return state.sigma, state.F, state.n
    sigma = np.zeros((3, 3))
    F = np.zeros((3, 3))
    sigma[:2, :2] = state.sigma
    F[:2, :2] = state.F
    return sigma, F, np.append(state.n, 0.0)


def la_sup_brute_force(state, samples=3600):
    '''Sampled maximum of ``(sigma n) . (F nu)`` over the circle of unit
    vectors orthogonal to ``n``.

    2D states are embedded in 3D with zero padding; the out-of-plane
    directions then contribute nothing.
    '''
    sigma, F, n = _embed(state)
    first, second = _orthonormal_basis(n)
    phi = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    nu = np.outer(np.cos(phi), first) + np.outer(np.sin(phi), second)
    traction = sigma.dot(n)
    return float(np.max(nu.dot(F.T).dot(traction)))


def f_infinity(state, Sigma, G):
    '''Surface density of the threshold model: ``G`` where a crack with
    normal ``n`` may appear, infinite elsewhere.'''
    return G if la_sup(state) >= Sigma else math.inf


def interpolate_density(la, Sigma, G, cap_C):
    '''Density falling linearly from ``cap_C`` at ``la = 0`` to ``G`` at
    ``la = Sigma`` and constant beyond. Works on arrays.'''
    ratio = np.clip(np.asarray(la, dtype=float) / Sigma, 0.0, 1.0)
    return G + (cap_C - G) * (1.0 - ratio)


def f_c(state, Sigma, G, cap_C):
    '''Finite surcharge density, between ``G`` and ``cap_C``.'''
    if not cap_C > G:
        raise InvalidMaterial('cap_C must exceed G')
    return float(interpolate_density(la_sup(state), Sigma, G, cap_C))


def critical_uniaxial_stress(E, Sigma):
    '''Uniaxial traction at which a crack first becomes admissible,
    ``sqrt(2 E Sigma)``. The maximizing normal makes the angle
    :py:data:`fracmove.constants.CRITICAL_NORMAL_ANGLE` with the axis.'''
    if E <= 0 or Sigma < 0:
        raise InvalidMaterial('E must be positive and Sigma non-negative')
    return math.sqrt(2.0 * E * Sigma)


def uniaxial_state(stress, E, alpha):
    '''Uniaxial traction along x3 with the normal at angle ``alpha`` from
    the x3 axis.'''
    sigma = np.zeros((3, 3))
    sigma[2, 2] = stress
    F = np.zeros((3, 3))
    F[2, 2] = stress / E
    n = np.array([math.sin(alpha), 0.0, math.cos(alpha)])
    return TensorState(sigma, F, n, normalize=True)


def antiplane_state(grad, mu, n):
    '''3D state of the anti-plane displacement with in-plane gradient
    ``grad`` and in-plane normal ``n``.'''
    g = np.append(np.asarray(grad, dtype=float), 0.0)
    e3 = np.array([0.0, 0.0, 1.0])
    sigma = mu * (np.outer(e3, g) + np.outer(g, e3))
    F = np.outer(e3, g)
    return TensorState(sigma, F, np.append(np.asarray(n, dtype=float), 0.0),
                       normalize=True)


def antiplane_la_threshold(mu, Sigma):
    '''Gradient magnitude above which some in-plane normal admits a crack.

    The anti-plane value ``mu (g.n)(g.n_perp)`` peaks at ``mu |g|**2 / 2``
    for a normal at 45 degrees from the gradient.
    '''
    if mu <= 0 or Sigma < 0:
        raise InvalidMaterial('mu must be positive and Sigma non-negative')
    return math.sqrt(2.0 * Sigma / mu)


def antiplane_la_field(u, mat):
    '''Per-cell anti-plane ``la_sup``, ``mu |grad u|**2 / 2``, with the same
    edge quadrature as the energies.'''
    return 0.5 * mat.mu * grd.edge_gradient_squared(u.grid, u.values)


def surface_density_field(u, v, mat):
    '''Per-cell surcharge density for the improved model.

    Uses the normal-optimized anti-plane value ``mu |grad u|**2 / 2`` of the
    undamaged gradient; cells with average damage at or below
    :py:data:`fracmove.constants.DEGRADED_THRESHOLD` keep ``G``.

    :rtype: :py:class:`fracmove.entities.SurfaceDensityField`
    '''
    grid = check_same_grid(u, v)
    values = interpolate_density(antiplane_la_field(u, mat), mat.Sigma,
                                 mat.G, mat.cap_C)
    values[grd.cell_average(grid, v.values) <= const.DEGRADED_THRESHOLD] = \
        mat.G
    return SurfaceDensityField(grid, values)


def antiplane_tensor_fields(u, mat):
    '''Nodal stress and displacement gradient tensors of an anti-plane
    field, both of shape ``(nx, ny, 3, 3)``.'''
    gx, gy = np.gradient(u.values, u.grid.h, u.grid.h)
    shape = u.grid.shape

    F = np.zeros(shape + (3, 3))
    F[..., 2, 0] = gx
    F[..., 2, 1] = gy

    sigma = np.zeros(shape + (3, 3))
    sigma[..., 2, 0] = sigma[..., 0, 2] = mat.mu * gx
    sigma[..., 2, 1] = sigma[..., 1, 2] = mat.mu * gy
    return sigma, F


def _sampler(grid, field):
    x = np.arange(grid.nx) * grid.h
    y = np.arange(grid.ny) * grid.h
    field = np.asarray(field, dtype=float)
    tail = field.shape[2:]
    flat = field.reshape(grid.shape + (-1,))
    interpolator = RegularGridInterpolator((x, y), flat)

    def sample(points):
        points = np.clip(points, 0.0, [grid.lx, grid.ly])
        return interpolator(points).reshape((-1,) + tail)

    return sample


def da_evaluate(candidate, grid, sigma_field, grad_field, Sigma, eta_sup):
    '''Curve criterion of crack appearance for a polyline candidate.

    The integrand ``(sigma n) . (F tau) [eta]`` is sampled at the segment
    midpoints by bilinear interpolation of the nodal tensor fields.

    :param candidate: :py:class:`fracmove.entities.CrackCandidate`
    :param grid: :py:class:`fracmove.entities.Grid2` of the tensor fields
    :param sigma_field: nodal stresses, shape ``(nx, ny, d, d)``
    :param grad_field: nodal displacement gradients, same shape
    :param float Sigma: stress power threshold
    :param float eta_sup: sup norm of the velocity jump

    :rtype: :py:class:`fracmove.entities.DAVerdict`
    '''
    if candidate is None or len(candidate.lengths) == 0:
        raise EmptyCandidate('A crack candidate needs at least one segment')

    if eta_sup < np.max(np.abs(candidate.jumps)):
        raise InvalidField('eta_sup is below the largest jump')

    midpoints = candidate.midpoints
    sigma = _sampler(grid, sigma_field)(midpoints)
    F = _sampler(grid, grad_field)(midpoints)

    dim = sigma.shape[-1]
    normals = np.zeros((len(midpoints), dim))
    tangents = np.zeros((len(midpoints), dim))
    normals[:, :2] = candidate.normals
    tangents[:, :2] = candidate.tangents

    traction = np.einsum('sij,sj->si', sigma, normals)
    stretch = np.einsum('sij,sj->si', F, tangents)
    lhs = float(np.sum(np.einsum('si,si->s', traction, stretch) *
                       candidate.jumps * candidate.lengths))
    rhs = float(eta_sup * Sigma * candidate.length)

    degenerate = eta_sup == 0 and not np.any(candidate.jumps)
    if degenerate:
        log.warning('Degenerate crack candidate: every jump is zero')

    return DAVerdict(lhs, rhs, lhs >= rhs, degenerate=degenerate)
