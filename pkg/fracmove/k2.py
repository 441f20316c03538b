'''
Energy release rate of a moving crack tip for anti-plane fields.

With ``w = mu |grad u|**2`` and ``sigma = 2 mu grad u`` the volume form is
the integral of ``-w div eta + sigma_k u_m d_k eta_m`` and the contour form
the integral over a circle around the tip of
``w (eta . nu) - 2 mu (grad u . nu)(grad u . eta)`` with ``nu`` the unit
vector pointing away from the tip. Both are positive when moving the tip
along ``eta`` releases energy.
'''
import logging
import math

import numpy as np

from . import grid as grd
from .entities import K2Table, ScalarField, VelocityField
from .exceptions import (
    ContourOutOfDomain, TipOutsideDomain, ValidationError)
from .utils import check_same_grid


log = logging.getLogger(__name__)


def _crack_frame(grid, tip, crack_angle):
    if not grid.contains(tip):
        raise TipOutsideDomain('Tip {} lies outside the grid'.format(tip))
    x, y = grid.coordinates()
    dx, dy = x - tip[0], y - tip[1]
    c, s = math.cos(crack_angle), math.sin(crack_angle)
    return c * dx + s * dy, -s * dx + c * dy


def mode_iii_tip_field(amplitude, tip, crack_angle, grid):
    '''Tip field ``A sqrt(r) sin(theta/2)``.

    ``theta`` is measured from the direction of propagation
    ``crack_angle``, so the crack occupies the ray ``theta = +-pi`` behind
    the tip.

    :raises `fracmove.exceptions.TipOutsideDomain`: for a tip off the grid
    '''
    xr, yr = _crack_frame(grid, tip, crack_angle)
    r = np.hypot(xr, yr)
    theta = np.arctan2(yr, xr)
    return ScalarField(grid, amplitude * np.sqrt(r) * np.sin(theta / 2.0))


def tip_crack_cells(grid, tip, crack_angle):
    '''Cells crossed by the straight crack ending at ``tip``.'''
    if not grid.contains(tip):
        raise TipOutsideDomain('Tip {} lies outside the grid'.format(tip))

    direction = -np.array([math.cos(crack_angle), math.sin(crack_angle)])
    distances = np.arange(0.0, math.hypot(grid.lx, grid.ly), grid.h / 4.0)
    points = np.asarray(tip) + distances[:, None] * direction

    inside = ((points[:, 0] >= 0) & (points[:, 0] <= grid.lx) &
              (points[:, 1] >= 0) & (points[:, 1] <= grid.ly))
    points = points[inside]

    i = np.clip(np.floor(points[:, 0] / grid.h).astype(int), 0, grid.nx - 2)
    j = np.clip(np.floor(points[:, 1] / grid.h).astype(int), 0, grid.ny - 2)

    mask = np.zeros(grid.cell_shape, dtype=bool)
    mask[i, j] = True
    return mask


def plateau_velocity(grid, tip, direction, r_inner, r_outer):
    '''Velocity equal to the unit ``direction`` inside ``r_inner``, zero
    beyond ``r_outer`` and a cosine taper in between.

    :raises `fracmove.exceptions.NonZeroTrace`: if the taper reaches the
            boundary
    '''
    if not 0 < r_inner < r_outer:
        raise ValidationError('Expected 0 < r_inner < r_outer')

    x, y = grid.coordinates()
    r = np.hypot(x - tip[0], y - tip[1])
    taper = 0.5 * (1.0 + np.cos(math.pi * (r - r_inner) / (r_outer - r_inner)))
    weight = np.where(r <= r_inner, 1.0, np.where(r >= r_outer, 0.0, taper))

    unit = np.asarray(direction, dtype=float)
    unit = unit / np.linalg.norm(unit)
    return VelocityField(grid, weight[..., None] * unit)


def k2_volume(u, eta, mat, crack=None):
    '''Volume form of the release rate, one quadrature point per cell.

    :param u: :py:class:`fracmove.entities.ScalarField`
    :param eta: :py:class:`fracmove.entities.VelocityField`
    :param crack: optional cell mask excluded from the integral
    '''
    grid = check_same_grid(u, eta)

    grad = grd.cell_gradient(grid, u.values)
    w = mat.mu * np.sum(grad ** 2, axis=-1)
    stress = 2.0 * mat.mu * grad

    # d_eta[..., m, k] = d eta_m / d x_k
    d_eta = np.stack([grd.cell_gradient(grid, eta.values[..., m])
                      for m in range(2)], axis=-2)
    divergence = d_eta[..., 0, 0] + d_eta[..., 1, 1]

    integrand = -w * divergence + np.einsum(
        '...k,...m,...mk->...', stress, grad, d_eta)

    if crack is not None:
        integrand = np.where(crack, 0.0, integrand)

    return float(np.sum(integrand) * grid.h ** 2)


def _point_gradients(grid, values, points, crack=None, tip=None,
                     crack_angle=0.0):
    '''Gradient of the bilinear interpolant at each point.

    Points inside a crack cell borrow the cell one step across the crack
    on their own side and extrapolate its interpolant.
    '''
    h = grid.h
    i = np.clip(np.floor(points[:, 0] / h).astype(int), 0, grid.nx - 2)
    j = np.clip(np.floor(points[:, 1] / h).astype(int), 0, grid.ny - 2)

    if crack is not None:
        normal = np.array([-math.sin(crack_angle), math.cos(crack_angle)])
        side = np.sign((points - np.asarray(tip)).dot(normal))
        side[side == 0] = 1.0
        for step in (1, 2, 3):
            inside = crack[i, j]
            if not inside.any():
                break
            moved = points[inside] + (step * h * side[inside])[:, None] * normal
            i[inside] = np.clip(np.floor(moved[:, 0] / h).astype(int),
                                0, grid.nx - 2)
            j[inside] = np.clip(np.floor(moved[:, 1] / h).astype(int),
                                0, grid.ny - 2)

    xi = points[:, 0] / h - i
    zeta = points[:, 1] / h - j

    u00 = values[i, j]
    u10 = values[i + 1, j]
    u01 = values[i, j + 1]
    u11 = values[i + 1, j + 1]

    gx = ((1 - zeta) * (u10 - u00) + zeta * (u11 - u01)) / h
    gy = ((1 - xi) * (u01 - u00) + xi * (u11 - u10)) / h
    return np.column_stack([gx, gy])


def _distance_to_boundary(grid, tip):
    return min(tip[0], grid.lx - tip[0], tip[1], grid.ly - tip[1])


def contour_value(u, eta_tip, tip, radius, samples, mat, crack=None,
                  crack_angle=0.0):
    '''Contour form on a single circle, midpoint rule in the angle.'''
    grid = u.grid
    distance = _distance_to_boundary(grid, tip)
    if radius >= distance:
        raise ContourOutOfDomain(radius, distance)

    step = 2 * math.pi / samples
    angles = crack_angle - math.pi + (np.arange(samples) + 0.5) * step
    nu = np.column_stack([np.cos(angles), np.sin(angles)])
    points = np.asarray(tip) + radius * nu

    grad = _point_gradients(grid, u.values, points, crack=crack, tip=tip,
                            crack_angle=crack_angle)
    eta = np.asarray(eta_tip, dtype=float)

    w = mat.mu * np.sum(grad ** 2, axis=1)
    integrand = w * nu.dot(eta) - \
        2.0 * mat.mu * np.sum(grad * nu, axis=1) * grad.dot(eta)
    return float(np.sum(integrand) * radius * step)


def k2_contour(u, eta_tip, spec, mat, crack_angle=None):
    '''Contour form on every circle of ``spec`` and its extrapolation to
    the tip, linear in the radius.

    :param spec: :py:class:`fracmove.entities.ContourSpec`
    :param float crack_angle: direction of propagation; when given, samples
           falling in cells crossed by the crack behind the tip read the
           gradient from their own side of the crack

    :rtype: :py:class:`fracmove.entities.K2Table`

    :raises `fracmove.exceptions.ContourOutOfDomain`: for a circle leaving
            the grid
    '''
    grid = u.grid
    crack = None
    angle = 0.0
    if crack_angle is not None:
        crack = tip_crack_cells(grid, spec.tip, crack_angle)
        angle = crack_angle

    values = [contour_value(u, eta_tip, spec.tip, r, spec.samples, mat,
                            crack=crack, crack_angle=angle)
              for r in spec.radii]

    slope, intercept = np.polyfit(spec.radii, values, 1)
    log.debug('Contour values %s, slope %s', values, slope)
    return K2Table(spec.radii, values, float(intercept))


def generalized_griffith_check(k2_value, area_rate, G, slack=0.0):
    '''Release rate at least ``G`` times the growth rate of the crack.'''
    return k2_value >= G * area_rate - slack
