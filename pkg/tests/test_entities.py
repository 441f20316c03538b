import numpy as np
import pytest

from fracmove import constants as const
from fracmove import entities
from fracmove import exceptions as exc
from fracmove.grid import build_grid, partition_boundary

from fixtures import STRIP_SPEC


# Utils

def unit_grid(n=5):
    return build_grid(n, n, 1, 1)


# Tests

@pytest.mark.parametrize('obj, expected', [
    (
        entities.Grid2(5, 5, 1, 1),
        'Grid2(nx=5, ny=5, h=0.25)',
    ),
    (
        entities.Material(mu=1, G=1, eps=0.5),
        'Material(mu=1.0, G=1.0, eps=0.5)',
    ),
    (
        entities.ATEnergyBreakdown(1, 2, 3),
        'ATEnergyBreakdown(elastic=1.0, surface=2.0)',
    ),
    (
        entities.IterationRecord(2, None, step=5),
        'IterationRecord(step=5, iteration=2)',
    ),
    (
        entities.LedgerVerdict(3, True, 1.0, 0.5, 0.1),
        'LedgerVerdict(k=3, ok=True)',
    ),
    (
        entities.DAVerdict(1, 2, False),
        'DAVerdict(lhs=1, rhs=2, admissible=False)',
    ),
    (
        entities.ContourSpec((0.5, 0.5), [0.2, 0.1]),
        'ContourSpec(tip=(0.5, 0.5), radii=[0.2, 0.1], samples=720)',
    ),
    (
        entities.CrackCandidate([(0, 0), (1, 0)], [1]),
        'CrackCandidate(segments=1, length=1.0)',
    ),
    (
        entities.K2Table([0.2, 0.1], [1.0, 1.0], 1.5),
        'K2Table(extrapolated=1.5)',
    ),
    (
        entities.HolderEstimate(0.5),
        'HolderEstimate(m_fit=0.5, violations=0)',
    ),
])
def test_repr(obj, expected):
    assert repr(obj) == expected


def test_partition_repr():
    part = partition_boundary(unit_grid(), STRIP_SPEC)
    assert repr(part) == 'BoundaryPartition(GammaU1=5, GammaU2=5, GammaF=6)'


@pytest.mark.parametrize('nx, ny, lx, ly, error', [
    (5, 3, 1, 1, exc.NonSquareCells),
    (2, 5, 1, 4, exc.TooSmall),
    (5, 5, 0, 0, exc.ValidationError),
])
def test_grid_validation(nx, ny, lx, ly, error):
    with pytest.raises(error):
        entities.Grid2(nx, ny, lx, ly)


def test_grid_equality():
    assert entities.Grid2(5, 5, 1, 1) == entities.Grid2(5, 5, 1, 1)
    assert entities.Grid2(5, 5, 1, 1) != entities.Grid2(5, 5, 2, 2)
    assert entities.Grid2(5, 9, 1, 2) != entities.Grid2(9, 5, 2, 1)


def test_fields_are_read_only():
    u = entities.ScalarField.zeros(unit_grid())
    with pytest.raises(ValueError):
        u.values[0, 0] = 1.0


def test_scalar_field_rejects_nan():
    values = np.zeros((5, 5))
    values[2, 2] = np.nan
    with pytest.raises(exc.InvalidField):
        entities.ScalarField(unit_grid(), values)


def test_scalar_field_shape():
    with pytest.raises(exc.GridMismatch):
        entities.ScalarField(unit_grid(), np.zeros((4, 5)))


def test_damage_field_bounds():
    values = np.ones((5, 5))
    values[0, 0] = 1.5
    values[1, 1] = -0.5

    with pytest.raises(exc.InvalidField):
        entities.DamageField(unit_grid(), values)

    v = entities.DamageField(unit_grid(), values, clamp=True)
    assert v.values[0, 0] == 1.0
    assert v.values[1, 1] == 0.0


def test_material_defaults():
    mat = entities.Material(mu=2, G=0.5, eps=0.1)
    assert mat.E == 6.0
    assert mat.Sigma == 1.0
    assert mat.cap_C == 50.0
    assert mat.k_eps == const.DEFAULT_K_EPS


@pytest.mark.parametrize('params', [
    dict(mu=0, G=1, eps=0.1),
    dict(mu=1, G=-1, eps=0.1),
    dict(mu=1, G=1, eps=0),
    dict(mu=1, G=1, eps=0.1, cap_C=1),
    dict(mu=1, G=1, eps=0.1, k_eps=0.01),
    dict(mu=1, G=1, eps=0.1, k_eps=0),
])
def test_material_validation(params):
    with pytest.raises(exc.InvalidMaterial):
        entities.Material(**params)


def test_material_replace():
    mat = entities.Material(mu=1, G=1, eps=0.1)
    other = mat.replace(G=2)
    assert other.G == 2.0
    assert other.mu == mat.mu
    assert other.cap_C == mat.cap_C


def test_dirichlet_data_keeps_boundary_values():
    grid = unit_grid()
    part = partition_boundary(grid, STRIP_SPEC)
    bc = entities.DirichletData(part, np.full(grid.shape, 3.0))

    assert np.all(bc.values[part.dirichlet_mask] == 3.0)
    assert np.all(bc.values[~part.dirichlet_mask] == 0.0)


def test_load_program_strip():
    load = entities.LoadProgram.strip(2.0)
    assert load.value(const.GAMMA_U1, 0.7) == 0.0
    assert load.value(const.GAMMA_U2, 0.5) == 1.0
    # Linear extension past the last breakpoint
    assert load.value(const.GAMMA_U2, 3.0) == 6.0


def test_load_program_dirichlet():
    grid = unit_grid()
    part = partition_boundary(grid, STRIP_SPEC)
    bc = entities.LoadProgram.strip(1.0).dirichlet(part, 0.25)

    assert np.all(bc.values[part.mask(const.GAMMA_U2)] == 0.25)
    assert np.all(bc.values[part.mask(const.GAMMA_U1)] == 0.0)


def test_load_program_piecewise():
    load = entities.LoadProgram({
        const.GAMMA_U2: [(0, 0), (1, 1), (2, 0)],
    })
    assert load.value(const.GAMMA_U2, 1.5) == 0.5
    assert load.value(const.GAMMA_U2, 3.0) == -1.0


@pytest.mark.parametrize('breakpoints', [
    {const.GAMMA_F: [(0, 0)]},
    {const.GAMMA_U1: []},
    {const.GAMMA_U1: [(0, 0), (0, 1)]},
])
def test_load_program_validation(breakpoints):
    with pytest.raises(exc.ValidationError):
        entities.LoadProgram(breakpoints)


@pytest.mark.parametrize('T, s, steps', [
    (1.5, 50, 75),
    (0.3, 10, 3),
    (0.25, 10, 3),
])
def test_scenario_steps(T, s, steps):
    grid = unit_grid()
    part = partition_boundary(grid, STRIP_SPEC)
    mat = entities.Material(mu=1, G=1, eps=0.5)
    scenario = entities.Scenario(grid, part, entities.LoadProgram.strip(1),
                                 mat, T=T, s=s)
    assert scenario.n_steps == steps
    assert scenario.reference_length == 1.0


@pytest.mark.parametrize('params', [
    dict(model='unknown'),
    dict(T=0),
    dict(s=0),
    dict(s=2.5),
    dict(lam=0),
])
def test_scenario_validation(params):
    grid = unit_grid()
    part = partition_boundary(grid, STRIP_SPEC)
    mat = entities.Material(mu=1, G=1, eps=0.5)
    with pytest.raises(exc.ValidationError):
        entities.Scenario(grid, part, entities.LoadProgram.strip(1), mat,
                          **params)


def test_tensor_state_normal():
    with pytest.raises(exc.BadNormal):
        entities.TensorState(np.eye(2), np.eye(2), [1.0, 1.0])

    state = entities.TensorState(np.eye(2), np.eye(2), [3.0, 4.0],
                                 normalize=True)
    assert state.n == pytest.approx([0.6, 0.8])

    with pytest.raises(exc.BadNormal):
        entities.TensorState(np.eye(2), np.eye(2), [0.0, 0.0],
                             normalize=True)


def test_tensor_state_shapes():
    with pytest.raises(exc.ValidationError):
        entities.TensorState(np.eye(3), np.eye(2), [1.0, 0.0])


def test_crack_candidate_geometry():
    candidate = entities.CrackCandidate([(0, 0), (1, 0), (1, 2)], [1, -1])

    assert candidate.length == 3.0
    assert candidate.tangents[1] == pytest.approx([0.0, 1.0])
    # Tangent turned by +90 degrees
    assert candidate.normals[0] == pytest.approx([0.0, 1.0])
    assert candidate.normals[1] == pytest.approx([-1.0, 0.0])
    assert candidate.midpoints[1] == pytest.approx([1.0, 1.0])


@pytest.mark.parametrize('vertices, jumps, error', [
    ([(0, 0)], [], exc.EmptyCandidate),
    ([(0, 0), (0, 0)], [1], exc.InvalidField),
    ([(0, 0), (1, 0)], [1, 2], exc.ValidationError),
])
def test_crack_candidate_validation(vertices, jumps, error):
    with pytest.raises(error):
        entities.CrackCandidate(vertices, jumps)


def test_velocity_field_trace():
    grid = unit_grid()
    values = np.zeros(grid.shape + (2,))
    values[2, 2] = [1.0, 0.0]
    entities.VelocityField(grid, values)

    values[0, 2] = [0.0, 1.0]
    with pytest.raises(exc.NonZeroTrace):
        entities.VelocityField(grid, values)


@pytest.mark.parametrize('radii', [
    [0.1],
    [0.1, 0.2],
    [0.2, 0.2],
    [0.2, -0.1],
])
def test_contour_spec_validation(radii):
    with pytest.raises(exc.ValidationError):
        entities.ContourSpec((0.5, 0.5), radii)
