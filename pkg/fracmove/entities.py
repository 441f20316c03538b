import logging
import math

import numpy as np

from . import constants as const
from .exceptions import (
    BadNormal,
    EmptyCandidate,
    GridMismatch,
    InvalidField,
    InvalidMaterial,
    NonSquareCells,
    NonZeroTrace,
    TooSmall,
    ValidationError,
)


log = logging.getLogger(__name__)


def _frozen(values, shape=None):
    array = np.array(values, dtype=float)
    if shape is not None and array.shape != tuple(shape):
        raise GridMismatch(
            'Expected an array of shape {}, got {}'.format(shape, array.shape))
    array.flags.writeable = False
    return array


class Entity(object):
    '''Generic entity.'''


class Grid2(Entity):
    '''Structured rectangular grid with square cells.

    Node ``(i, j)`` sits at ``(i*h, j*h)``; nodal arrays are indexed
    ``[i, j]`` and cell arrays ``[i, j]`` for the cell whose lower left
    corner is node ``(i, j)``.

    :param int nx: node count along x
    :param int ny: node count along y
    :param float lx: physical extent along x
    :param float ly: physical extent along y
    '''

    def __init__(self, nx, ny, lx, ly):
        if nx < const.MIN_NODES or ny < const.MIN_NODES:
            raise TooSmall(nx, ny)

        if lx <= 0 or ly <= 0:
            raise ValidationError(
                'Grid extents must be positive, got {}x{}'.format(lx, ly))

        hx = float(lx) / (nx - 1)
        hy = float(ly) / (ny - 1)

        if abs(hx - hy) > const.GRID_TOLERANCE * hx:
            raise NonSquareCells(hx, hy)

        self.nx = int(nx)
        self.ny = int(ny)
        self.lx = float(lx)
        self.ly = float(ly)
        self.h = hx

    @property
    def shape(self):
        return (self.nx, self.ny)

    @property
    def cell_shape(self):
        return (self.nx - 1, self.ny - 1)

    @property
    def n_nodes(self):
        return self.nx * self.ny

    @property
    def n_cells(self):
        return (self.nx - 1) * (self.ny - 1)

    def coordinates(self):
        '''Nodal coordinate arrays ``(x, y)``, both of shape ``(nx, ny)``.'''
        return np.meshgrid(np.arange(self.nx) * self.h,
                           np.arange(self.ny) * self.h, indexing='ij')

    def boundary_mask(self):
        mask = np.zeros(self.shape, dtype=bool)
        mask[0, :] = mask[-1, :] = True
        mask[:, 0] = mask[:, -1] = True
        return mask

    def contains(self, point):
        x, y = point
        return 0.0 <= x <= self.lx and 0.0 <= y <= self.ly

    def __eq__(self, other):
        if not isinstance(other, Grid2):
            return NotImplemented
        return (self.nx == other.nx and self.ny == other.ny and
                abs(self.h - other.h) <= const.GRID_TOLERANCE * self.h)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.nx, self.ny))

    def __repr__(self):
        t = '{cls}(nx={nx}, ny={ny}, h={h})'
        return t.format(cls=type(self).__name__, **vars(self))


class BoundaryPartition(Entity):
    '''Labeling of the boundary nodes of a grid.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param labels: integer array of shape ``grid.shape`` holding codes
           from :py:data:`fracmove.constants.LABEL_CODES`, 0 for interior
           nodes
    :param dict spec: edge-to-label map the labeling was built from
    '''

    def __init__(self, grid, labels, spec=None):
        labels = np.array(labels, dtype=np.int8)
        if labels.shape != grid.shape:
            raise GridMismatch('Partition labels do not match the grid')

        boundary = grid.boundary_mask()
        if np.any(labels[boundary] == 0) or np.any(labels[~boundary] != 0):
            raise ValidationError(
                'Every boundary node needs exactly one label')

        labels.flags.writeable = False

        self.grid = grid
        self.labels = labels
        self.spec = dict(spec or {})

    def mask(self, label):
        return self.labels == const.LABEL_CODES[label]

    @property
    def dirichlet_mask(self):
        return self.mask(const.GAMMA_U1) | self.mask(const.GAMMA_U2)

    def counts(self):
        return dict((label, int(self.mask(label).sum()))
                    for label in const.LABELS)

    def __repr__(self):
        counts = self.counts()
        t = '{cls}(GammaU1={u1}, GammaU2={u2}, GammaF={f})'
        return t.format(cls=type(self).__name__, u1=counts[const.GAMMA_U1],
                        u2=counts[const.GAMMA_U2], f=counts[const.GAMMA_F])


class ScalarField(Entity):
    '''Nodal scalar field, the anti-plane displacement.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param values: array of shape ``grid.shape``
    :param int pinned: number of nodes of floating components pinned to 0
           while the field was computed
    '''

    def __init__(self, grid, values, pinned=0):
        values = _frozen(values, grid.shape)
        if not np.all(np.isfinite(values)):
            raise InvalidField('Field values must be finite')

        self.grid = grid
        self.values = values
        self.pinned = pinned

    @classmethod
    def zeros(cls, grid):
        return cls(grid, np.zeros(grid.shape))

    @classmethod
    def from_function(cls, grid, func):
        x, y = grid.coordinates()
        return cls(grid, func(x, y))

    def __repr__(self):
        return '{cls}(nx={nx}, ny={ny}, max={max})'.format(
            cls=type(self).__name__, nx=self.grid.nx, ny=self.grid.ny,
            max=float(np.max(np.abs(self.values))))


class DamageField(Entity):
    '''Nodal phase field, ``1`` intact and ``0`` fully cracked.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param values: array of shape ``grid.shape``
    :param bool clamp: clip values into ``[0, 1]`` instead of rejecting them
    '''

    def __init__(self, grid, values, clamp=False):
        values = np.array(values, dtype=float)
        if values.shape != grid.shape:
            raise GridMismatch('Damage values do not match the grid')
        if not np.all(np.isfinite(values)):
            raise InvalidField('Damage values must be finite')

        if clamp:
            values = np.clip(values, 0.0, 1.0)
        elif values.min() < 0.0 or values.max() > 1.0:
            raise InvalidField('Damage values must lie in [0, 1]')

        self.grid = grid
        self.values = _frozen(values)

    @classmethod
    def intact(cls, grid):
        return cls(grid, np.ones(grid.shape))

    def __repr__(self):
        return '{cls}(nx={nx}, ny={ny}, min={min})'.format(
            cls=type(self).__name__, nx=self.grid.nx, ny=self.grid.ny,
            min=float(self.values.min()))


class Material(Entity):
    '''Material constants.

    :param float mu: shear modulus
    :param float G: Griffith constant, energy per unit crack length
    :param float eps: regularization length
    :param float E: Young modulus, used only by the crack criteria,
           defaults to ``3*mu``
    :param float Sigma: stress power threshold, defaults to ``mu/2``
    :param float cap_C: finite surcharge ``C > G`` of the improved model,
           defaults to ``100*G``
    :param float k_eps: residual stiffness
    '''

    def __init__(self, mu, G, eps, E=None, Sigma=None, cap_C=None,
                 k_eps=const.DEFAULT_K_EPS):

        self.mu = float(mu)
        self.G = float(G)
        self.eps = float(eps)
        self.E = float(E if E is not None else const.DEFAULT_E_FACTOR * mu)
        self.Sigma = float(
            Sigma if Sigma is not None else const.DEFAULT_SIGMA_FACTOR * mu)
        self.cap_C = float(
            cap_C if cap_C is not None else const.DEFAULT_CAP_FACTOR * G)
        self.k_eps = float(k_eps)

        for name in ('mu', 'E', 'G', 'Sigma', 'eps'):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise InvalidMaterial(
                    '{} must be positive, got {}'.format(name, value))

        if not self.cap_C > self.G:
            raise InvalidMaterial(
                'cap_C must exceed G, got {} <= {}'.format(self.cap_C, self.G))

        if not 0 < self.k_eps <= const.MAX_K_EPS:
            raise InvalidMaterial(
                'k_eps must lie in (0, {}], got {}'.format(
                    const.MAX_K_EPS, self.k_eps))

    def replace(self, **changes):
        params = dict(mu=self.mu, G=self.G, eps=self.eps, E=self.E,
                      Sigma=self.Sigma, cap_C=self.cap_C, k_eps=self.k_eps)
        params.update(changes)
        return Material(**params)

    def __repr__(self):
        t = '{cls}(mu={mu}, G={G}, eps={eps})'
        return t.format(cls=type(self).__name__, **vars(self))


class DirichletData(Entity):
    '''Imposed displacement on the GammaU1 and GammaU2 nodes.

    :param partition: :py:class:`fracmove.entities.BoundaryPartition`
    :param values: array of shape ``grid.shape``; only entries on Dirichlet
           nodes are kept, the rest is zeroed
    '''

    def __init__(self, partition, values):
        values = np.array(values, dtype=float)
        if values.shape != partition.grid.shape:
            raise GridMismatch('Dirichlet values do not match the grid')

        mask = partition.dirichlet_mask
        if not np.all(np.isfinite(values[mask])):
            raise InvalidField('Dirichlet values must be finite')

        values[~mask] = 0.0

        self.partition = partition
        self.values = _frozen(values)

    @property
    def mask(self):
        return self.partition.dirichlet_mask

    @classmethod
    def from_labels(cls, partition, label_values):
        values = np.zeros(partition.grid.shape)
        for label, value in label_values.items():
            values[partition.mask(label)] = value
        return cls(partition, values)

    @classmethod
    def zeros(cls, partition):
        return cls(partition, np.zeros(partition.grid.shape))

    @classmethod
    def from_field(cls, partition, field):
        return cls(partition, field.values)

    def scaled(self, alpha):
        return DirichletData(self.partition, alpha * self.values)

    def __repr__(self):
        return '{cls}(nodes={nodes})'.format(
            cls=type(self).__name__, nodes=int(self.mask.sum()))


class SparseOperator(Entity):
    '''Assembled nodal stiffness matrix.

    :param matrix: ``scipy.sparse`` matrix over all nodes
    :param str damage_hash: hash of the damage field it was assembled from
    '''

    def __init__(self, matrix, damage_hash=None):
        self.matrix = matrix
        self.damage_hash = damage_hash

    def restrict(self, free):
        '''Block acting on the free (non-Dirichlet) nodes.'''
        csr = self.matrix.tocsr()
        return csr[free][:, free]

    def __repr__(self):
        return '{cls}(shape={shape}, damage_hash={damage_hash})'.format(
            cls=type(self).__name__, shape=self.matrix.shape,
            damage_hash=self.damage_hash)


class ATEnergyBreakdown(Entity):
    '''Regularized energy split into its bulk and surface parts.

    :param float elastic: degraded elastic energy
    :param float surface: surface energy weighted by the density field
    :param float surface_length_estimate: surface term with unit density
    '''

    def __init__(self, elastic, surface, surface_length_estimate):
        self.elastic = float(elastic)
        self.surface = float(surface)
        self.surface_length_estimate = float(surface_length_estimate)

    @property
    def total(self):
        return self.elastic + self.surface

    def __repr__(self):
        t = '{cls}(elastic={elastic}, surface={surface})'
        return t.format(cls=type(self).__name__, **vars(self))


class SurfaceDensityField(Entity):
    '''Per-cell surface energy density.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param values: array of shape ``grid.cell_shape``
    '''

    def __init__(self, grid, values):
        values = _frozen(values, grid.cell_shape)
        if not np.all(np.isfinite(values)) or values.min() <= 0:
            raise InvalidField('Surface density must be finite and positive')

        self.grid = grid
        self.values = values

    def __repr__(self):
        return '{cls}(min={min}, max={max})'.format(
            cls=type(self).__name__, min=float(self.values.min()),
            max=float(self.values.max()))


class IterationRecord(Entity):
    '''One alternate minimization iteration.'''

    def __init__(self, iteration, energy, step=None):
        self.iteration = iteration
        self.energy = energy
        self.step = step

    def __repr__(self):
        t = '{cls}(step={step}, iteration={iteration})'
        return t.format(cls=type(self).__name__, **vars(self))


class LoadProgram(Entity):
    '''Imposed displacement per Dirichlet label as a function of time.

    Each label maps to breakpoints ``[(t0, u0), (t1, u1), ...]``. Values
    are interpolated linearly and extended past the last breakpoint with
    the slope of the last segment; a single breakpoint is a constant.

    :param dict breakpoints: label to list of ``(time, value)`` pairs
    '''

    def __init__(self, breakpoints):
        program = {}
        for label, points in breakpoints.items():
            if label not in const.DIRICHLET_LABELS:
                raise ValidationError(
                    'Load program label must be one of {}, got {}'.format(
                        ', '.join(const.DIRICHLET_LABELS), label))
            points = sorted((float(t), float(u)) for t, u in points)
            if not points:
                raise ValidationError(
                    'Load program for {} has no breakpoints'.format(label))
            times = [t for t, _ in points]
            if len(set(times)) != len(times):
                raise ValidationError(
                    'Load program for {} repeats a time'.format(label))
            program[label] = points

        self.breakpoints = program

    @classmethod
    def strip(cls, delta):
        '''Zero on GammaU1 and ``t*delta`` on GammaU2.'''
        return cls({
            const.GAMMA_U1: [(0.0, 0.0)],
            const.GAMMA_U2: [(0.0, 0.0), (1.0, delta)],
        })

    def value(self, label, t):
        points = self.breakpoints.get(label)
        if not points:
            return 0.0

        times = np.array([p[0] for p in points])
        values = np.array([p[1] for p in points])

        if len(points) == 1:
            return float(values[0])

        if t > times[-1]:
            slope = (values[-1] - values[-2]) / (times[-1] - times[-2])
            return float(values[-1] + slope * (t - times[-1]))

        if t < times[0]:
            slope = (values[1] - values[0]) / (times[1] - times[0])
            return float(values[0] + slope * (t - times[0]))

        return float(np.interp(t, times, values))

    def dirichlet(self, partition, t):
        return DirichletData.from_labels(
            partition,
            dict((label, self.value(label, t))
                 for label in const.DIRICHLET_LABELS))

    def __repr__(self):
        return '{cls}({labels})'.format(
            cls=type(self).__name__, labels=', '.join(sorted(self.breakpoints)))


class Scenario(Entity):
    '''Everything needed to run an evolution.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param partition: :py:class:`fracmove.entities.BoundaryPartition`
    :param load: :py:class:`fracmove.entities.LoadProgram`
    :param material: :py:class:`fracmove.entities.Material`
    :param str model: one of :py:data:`fracmove.constants.MODELS`
    :param float T: time horizon
    :param int s: steps per unit time
    :param float lam: viscosity of the viscous model
    :param bool multistart: also try a pre-cracked start at every step
           until the body is cut
    :param bool stop_at_separation: end the run at the first step whose
           damage separates GammaU1 from GammaU2
    :param initial_damage: optional :py:class:`fracmove.entities.DamageField`
    :param float perturbation: amplitude of the bump added to the initial
           datum of the viscous model
    :param float reference_length: crack length scale ``a`` used by the
           ledger slack, defaults to ``grid.lx``
    '''

    def __init__(self, grid, partition, load, material,
                 model=const.MODEL_FIRST, T=1.0, s=10,
                 lam=const.DEFAULT_LAMBDA, multistart=True,
                 stop_at_separation=False, initial_damage=None,
                 perturbation=0.0, tol=const.DEFAULT_CG_TOL,
                 rel_tol=const.DEFAULT_REL_TOL,
                 max_iters=const.DEFAULT_MAX_ITERS, reference_length=None):

        if model not in const.MODELS:
            raise ValidationError('Unknown model: {}'.format(model))
        if not T > 0:
            raise ValidationError('Time horizon must be positive')
        if int(s) != s or s < 1:
            raise ValidationError('Steps per unit time must be an integer >= 1')
        if not lam > 0:
            raise ValidationError('Viscosity must be positive')
        if initial_damage is not None and initial_damage.grid != grid:
            raise GridMismatch('Initial damage does not match the grid')

        self.grid = grid
        self.partition = partition
        self.load = load
        self.material = material
        self.model = model
        self.T = float(T)
        self.s = int(s)
        self.lam = float(lam)
        self.multistart = multistart
        self.stop_at_separation = stop_at_separation
        self.initial_damage = initial_damage
        self.perturbation = float(perturbation)
        self.tol = tol
        self.rel_tol = rel_tol
        self.max_iters = max_iters
        self.reference_length = float(
            reference_length if reference_length is not None else grid.lx)

    @property
    def n_steps(self):
        return int(math.ceil(self.T * self.s - 1e-9))

    def __repr__(self):
        t = '{cls}(model={model}, T={T}, s={s})'
        return t.format(cls=type(self).__name__, **vars(self))


class StepRecord(Entity):
    '''State and energies of one incremental step.

    :param int k: step index, time is ``k/s``
    :param u: :py:class:`fracmove.entities.ScalarField`
    :param v: :py:class:`fracmove.entities.DamageField`
    :param energy: :py:class:`fracmove.entities.ATEnergyBreakdown`
    :param float elastic_star: elastic energy of the equilibrium at this
           step's load on the previous damage (no-growth competitor)
    :param float surface_prev: surface energy of the previous damage under
           this step's density
    :param float work: incremental power, ``elastic_star`` minus the
           previous elastic energy
    :param float intact_elastic: elastic energy of the undamaged body at
           this step's load
    '''

    def __init__(self, k, time, u, v, energy, elastic_star=None,
                 surface_prev=None, work=0.0, intact_elastic=None,
                 separated=False, iterations=0):
        self.k = k
        self.time = time
        self.u = u
        self.v = v
        self.energy = energy
        self.elastic_star = (
            energy.elastic if elastic_star is None else elastic_star)
        self.surface_prev = (
            energy.surface if surface_prev is None else surface_prev)
        self.work = work
        self.intact_elastic = intact_elastic
        self.separated = separated
        self.iterations = iterations

    @property
    def elastic(self):
        return self.energy.elastic

    @property
    def surface(self):
        return self.energy.surface

    @property
    def total(self):
        return self.energy.total

    @property
    def surface_increment(self):
        return self.surface - self.surface_prev

    @property
    def pinned(self):
        return self.u.pinned

    def __repr__(self):
        t = '{cls}(k={k}, time={time}, separated={separated})'
        return t.format(cls=type(self).__name__, **vars(self))


class IncrementTrace(Entity):
    '''Recorded incremental evolution.

    :param scenario: :py:class:`fracmove.entities.Scenario` that was run
    :param list steps: :py:class:`fracmove.entities.StepRecord` instances,
           the first one is the initial state
    '''

    def __init__(self, scenario, steps):
        self.scenario = scenario
        self.steps = list(steps)

    @property
    def s(self):
        return self.scenario.s

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __repr__(self):
        return '{cls}(steps={steps}, s={s})'.format(
            cls=type(self).__name__, steps=len(self.steps), s=self.s)


class LedgerVerdict(Entity):
    '''Incremental Griffith inequality at one step.'''

    def __init__(self, k, ok, lhs, rhs, power):
        self.k = k
        self.ok = ok
        self.lhs = lhs
        self.rhs = rhs
        self.power = power

    def __repr__(self):
        t = '{cls}(k={k}, ok={ok})'
        return t.format(cls=type(self).__name__, **vars(self))


class TensorState(Entity):
    '''Stress, displacement gradient and crack normal at one point.

    :param sigma: ``dim x dim`` stress tensor
    :param F: ``dim x dim`` displacement gradient
    :param n: normal vector of length ``dim``
    :param bool normalize: scale ``n`` to unit length instead of rejecting
           a non-unit normal
    '''

    def __init__(self, sigma, F, n, normalize=False):
        sigma = np.array(sigma, dtype=float)
        F = np.array(F, dtype=float)
        n = np.array(n, dtype=float).ravel()

        dim = n.shape[0]
        if dim not in (2, 3):
            raise ValidationError('Only 2D and 3D states are supported')
        if sigma.shape != (dim, dim) or F.shape != (dim, dim):
            raise ValidationError(
                'sigma and F must be {0}x{0} matrices'.format(dim))
        if not (np.all(np.isfinite(sigma)) and np.all(np.isfinite(F)) and
                np.all(np.isfinite(n))):
            raise InvalidField('Tensor state entries must be finite')

        norm = float(np.linalg.norm(n))
        if normalize and norm > 0:
            n = n / norm
        elif abs(norm - 1.0) > const.NORMAL_TOLERANCE:
            raise BadNormal(norm)

        self.sigma = _frozen(sigma)
        self.F = _frozen(F)
        self.n = _frozen(n)
        self.dim = dim

    def __repr__(self):
        return '{cls}(dim={dim}, n={n})'.format(
            cls=type(self).__name__, dim=self.dim, n=list(self.n))


class CrackCandidate(Entity):
    '''Polyline crack candidate with a tangential velocity jump per segment.

    The normal of each segment is its unit tangent turned by +90 degrees.

    :param vertices: sequence of ``(x, y)`` points
    :param jumps: tangential jump ``[eta]`` per segment, signed along the
           segment tangent
    '''

    def __init__(self, vertices, jumps):
        vertices = np.array(vertices, dtype=float)
        if vertices.ndim != 2 or vertices.shape[0] < 2 or \
                vertices.shape[1] != 2:
            raise EmptyCandidate('A crack candidate needs at least one segment')

        segments = np.diff(vertices, axis=0)
        lengths = np.hypot(segments[:, 0], segments[:, 1])
        if np.any(lengths == 0):
            raise InvalidField('Consecutive vertices must be distinct')

        jumps = np.array(jumps, dtype=float).ravel()
        if jumps.shape[0] != segments.shape[0]:
            raise ValidationError(
                'Expected {} jumps, got {}'.format(
                    segments.shape[0], jumps.shape[0]))

        tangents = segments / lengths[:, None]

        self.vertices = _frozen(vertices)
        self.jumps = _frozen(jumps)
        self.lengths = _frozen(lengths)
        self.tangents = _frozen(tangents)
        self.normals = _frozen(
            np.column_stack([-tangents[:, 1], tangents[:, 0]]))

    @property
    def midpoints(self):
        return 0.5 * (self.vertices[:-1] + self.vertices[1:])

    @property
    def length(self):
        return float(self.lengths.sum())

    def __repr__(self):
        return '{cls}(segments={segments}, length={length})'.format(
            cls=type(self).__name__, segments=len(self.lengths),
            length=self.length)


class DAVerdict(Entity):
    '''Outcome of the curve-level crack appearance criterion.'''

    def __init__(self, lhs, rhs, admissible, degenerate=False):
        self.lhs = lhs
        self.rhs = rhs
        self.admissible = admissible
        self.degenerate = degenerate

    def __repr__(self):
        t = '{cls}(lhs={lhs}, rhs={rhs}, admissible={admissible})'
        return t.format(cls=type(self).__name__, **vars(self))


class VelocityField(Entity):
    '''Nodal crack velocity field, zero on the boundary.

    :param grid: :py:class:`fracmove.entities.Grid2` instance
    :param values: array of shape ``(nx, ny, 2)``
    '''

    def __init__(self, grid, values):
        values = _frozen(values, grid.shape + (2,))
        if not np.all(np.isfinite(values)):
            raise InvalidField('Velocity values must be finite')
        if np.any(values[grid.boundary_mask()] != 0):
            raise NonZeroTrace('Velocity field must vanish on the boundary')

        self.grid = grid
        self.values = values

    def __repr__(self):
        return '{cls}(nx={nx}, ny={ny})'.format(
            cls=type(self).__name__, nx=self.grid.nx, ny=self.grid.ny)


class ContourSpec(Entity):
    '''Circles around a crack tip.

    :param tip: ``(x, y)`` tip position
    :param radii: strictly decreasing radii, at least two
    :param int samples: quadrature points per circle
    '''

    def __init__(self, tip, radii, samples=720):
        radii = [float(r) for r in radii]
        if len(radii) < 2:
            raise ValidationError('At least two radii are required')
        if any(r <= 0 for r in radii):
            raise ValidationError('Radii must be positive')
        if any(a <= b for a, b in zip(radii, radii[1:])):
            raise ValidationError('Radii must be strictly decreasing')
        if samples < 8:
            raise ValidationError('At least 8 samples per circle are required')

        self.tip = (float(tip[0]), float(tip[1]))
        self.radii = radii
        self.samples = int(samples)

    def __repr__(self):
        t = '{cls}(tip={tip}, radii={radii}, samples={samples})'
        return t.format(cls=type(self).__name__, **vars(self))


class K2Table(Entity):
    '''Contour values per radius and their extrapolation to the tip.'''

    def __init__(self, radii, values, extrapolated):
        self.radii = list(radii)
        self.values = list(values)
        self.extrapolated = extrapolated

    def rows(self):
        for r, value in zip(self.radii, self.values):
            yield r, value, self.extrapolated

    def __repr__(self):
        t = '{cls}(extrapolated={extrapolated})'
        return t.format(cls=type(self).__name__, **vars(self))


class ViscousStep(Entity):
    '''One step of the viscous evolution.

    :param float penalty: ``lambda*s`` times the squared L2 distance to the
           previous displacement
    '''

    def __init__(self, k, time, u, v, energy, penalty=0.0, iterations=0):
        self.k = k
        self.time = time
        self.u = u
        self.v = v
        self.energy = energy
        self.penalty = penalty
        self.iterations = iterations

    @property
    def elastic(self):
        return self.energy.elastic

    @property
    def surface(self):
        return self.energy.surface

    @property
    def total(self):
        return self.energy.total

    def __repr__(self):
        t = '{cls}(k={k}, time={time}, penalty={penalty})'
        return t.format(cls=type(self).__name__, **vars(self))


class ViscousTrace(Entity):
    '''Recorded viscous evolution.

    :param float bound: sup norm of the initial datum, the admissible bound
           for every displacement of the trace
    '''

    def __init__(self, steps, s, lam, bound):
        self.steps = list(steps)
        self.s = s
        self.lam = lam
        self.bound = bound

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __getitem__(self, index):
        return self.steps[index]

    def __repr__(self):
        return '{cls}(steps={steps}, s={s}, lam={lam})'.format(
            cls=type(self).__name__, steps=len(self.steps), s=self.s,
            lam=self.lam)


class HolderEstimate(Entity):
    '''Fitted constant of the square-root continuity estimate.

    :param float m_fit: smallest constant satisfied by every pair of steps
    :param list violations: ``(k, k')`` pairs exceeding a supplied constant
    '''

    def __init__(self, m_fit, violations=None):
        self.m_fit = m_fit
        self.violations = violations or []

    def __repr__(self):
        return '{cls}(m_fit={m_fit}, violations={count})'.format(
            cls=type(self).__name__, m_fit=self.m_fit,
            count=len(self.violations))
