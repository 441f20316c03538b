import pytest

from fracmove import config
from fracmove import constants as const
from fracmove import exceptions as exc

from fixtures import (
    SCENARIO_FULL,
    SCENARIO_MINIMAL,
    SCENARIO_NEGATIVE_EPS,
    SCENARIO_NO_G,
    SCENARIO_VISCOUS,
)


# Utils

def replaced(old, new, text=SCENARIO_FULL):
    assert old in text
    return text.replace(old, new)


# Tests

def test_defaults():
    cfg = config.parse_string(SCENARIO_MINIMAL)

    assert cfg['boundary'] == {
        'bottom': const.GAMMA_U1,
        'top': const.GAMMA_U2,
        'left': const.GAMMA_F,
        'right': const.GAMMA_F,
    }
    material = cfg['material']
    assert material['E'] == 3.0
    assert material['Sigma'] == 0.5
    assert material['cap_C'] == 100.0
    assert material['eps'] == 0.25
    assert material['k_eps'] == const.DEFAULT_K_EPS

    load = cfg['load']
    assert load['delta'] == 1.0
    assert load[const.GAMMA_U1] == [(0.0, 0.0)]
    assert load[const.GAMMA_U2] == [(0.0, 0.0), (1.0, 1.0)]

    assert cfg['model'] == {
        'name': const.MODEL_FIRST,
        'lambda': const.DEFAULT_LAMBDA,
        'multistart': True,
        'stop_at_separation': False,
        'perturbation': 0.0,
    }
    assert cfg['output'] == {'dir': '.', 'snapshot_stride': 0}
    assert repr(cfg) == 'ScenarioConfig(model=first, nx=5, ny=9)'


def test_full_document():
    cfg = config.parse_string(SCENARIO_FULL)

    assert cfg['material']['mu'] == 2.0
    assert cfg['material']['cap_C'] == 20.0
    assert cfg['material']['k_eps'] == 1e-5
    assert cfg['load'][const.GAMMA_U2] == [(0.0, 0.0), (1.0, 2.0)]
    assert cfg['model']['name'] == const.MODEL_IMPROVED
    assert cfg['model']['multistart'] is False
    assert cfg['model']['stop_at_separation'] is True
    assert cfg['output'] == {'dir': 'results', 'snapshot_stride': 2}


def test_missing_key():
    with pytest.raises(exc.MissingKey) as e:
        config.parse_string(SCENARIO_NO_G)
    assert e.value.key == 'material.G'
    assert 'material.G' in str(e.value)


def test_negative_eps():
    with pytest.raises(exc.BadValue) as e:
        config.parse_string(SCENARIO_NEGATIVE_EPS)
    assert e.value.key == 'material.eps'


@pytest.mark.parametrize('old, new, key', [
    ('top = GammaU2', 'top = GammaX', 'boundary.top'),
    ('multistart = false', 'multistart = maybe', 'model.multistart'),
    ('cap_C = 20', 'cap_C = 0.25', 'material.cap_C'),
    ('k_eps = 1e-5', 'k_eps = 0.01', 'material.k_eps'),
    ('nx = 5', 'nx = 2', 'grid.nx'),
    ('nx = 5', 'nx = five', 'grid.nx'),
    ('s = 10', 's = 0', 'load.s'),
    ('name = improved', 'name = quadratic', 'model.name'),
    ('GammaU2 = 0:0 1:delta', 'GammaU2 = 0-0', 'load.GammaU2'),
    ('T = 0.3', 'T = inf', 'load.T'),
])
def test_bad_values(old, new, key):
    with pytest.raises(exc.BadValue) as e:
        config.parse_string(replaced(old, new))
    assert e.value.key == key


def test_malformed_document():
    with pytest.raises(exc.BadValue) as e:
        config.parse_string('nx = 5\n')
    assert e.value.key == 'document'


@pytest.mark.parametrize('text', [
    SCENARIO_MINIMAL,
    SCENARIO_FULL,
    SCENARIO_VISCOUS,
])
def test_serialize_round_trip(text):
    cfg = config.parse_string(text)
    assert config.parse_string(config.serialize(cfg)) == cfg


def test_parse_scenario_file(tmpdir):
    path = tmpdir.join('scenario.ini')
    path.write(SCENARIO_FULL)
    assert config.parse_scenario(str(path)) == \
        config.parse_string(SCENARIO_FULL)


def test_parse_scenario_missing_file(tmpdir):
    path = str(tmpdir.join('missing.ini'))
    with pytest.raises(exc.IoError) as e:
        config.parse_scenario(path)
    assert e.value.path == path


def test_to_scenario():
    scenario = config.to_scenario(config.parse_string(SCENARIO_FULL))

    assert scenario.grid.shape == (5, 5)
    assert scenario.partition.counts()[const.GAMMA_U2] == 5
    assert scenario.material.mu == 2.0
    assert scenario.material.Sigma == 0.75
    assert scenario.model == const.MODEL_IMPROVED
    assert scenario.n_steps == 3
    assert scenario.lam == 0.5
    assert scenario.multistart is False
    assert scenario.stop_at_separation is True
    assert scenario.perturbation == 0.1
    assert scenario.load.value(const.GAMMA_U2, 0.5) == 1.0


def test_to_scenario_non_square_cells():
    text = replaced('ny = 5', 'ny = 9')
    with pytest.raises(exc.NonSquareCells):
        config.to_scenario(config.parse_string(text))


@pytest.mark.parametrize('raw, expected', [
    ('0:0', [(0.0, 0.0)]),
    ('0:0 1:delta', [(0.0, 0.0), (1.0, 3.0)]),
    ('0:0 0.5:1 2:-1', [(0.0, 0.0), (0.5, 1.0), (2.0, -1.0)]),
])
def test_parse_breakpoints(raw, expected):
    assert config.parse_breakpoints('load.GammaU2', raw, 3.0) == expected
