'''
Scenario files.

A scenario is a flat INI document::

    [grid]
    nx = 33
    ny = 33
    lx = 1
    ly = 1

    [material]
    mu = 1
    G = 1

    [load]
    T = 1.5
    s = 50

Missing optional keys take their defaults; keys are reported as
``section.key`` in errors.
'''
import configparser
import logging
import math

from . import constants as const
from .entities import LoadProgram, Material, Scenario
from .exceptions import BadValue, IoError, MissingKey, TooSmall
from .grid import build_grid, partition_boundary
from .utils import format_float


log = logging.getLogger(__name__)

SECTIONS = ['grid', 'boundary', 'material', 'load', 'model', 'output']

REQUIRED = [
    'grid.nx', 'grid.ny', 'grid.lx', 'grid.ly',
    'material.mu', 'material.G',
    'load.T', 'load.s',
]

TRUE_VALUES = ('1', 'yes', 'true', 'on')
FALSE_VALUES = ('0', 'no', 'false', 'off')


class ScenarioConfig(object):
    '''Validated scenario document with every default filled in.

    Values are kept per section in :py:attr:`values`; items can be read
    as ``config['material']['G']``.
    '''

    def __init__(self, values):
        self.values = values

    def __getitem__(self, section):
        return self.values[section]

    def __eq__(self, other):
        if not isinstance(other, ScenarioConfig):
            return NotImplemented
        return self.values == other.values

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '{cls}(model={model}, nx={nx}, ny={ny})'.format(
            cls=type(self).__name__, model=self.values['model']['name'],
            nx=self.values['grid']['nx'], ny=self.values['grid']['ny'])


def _raw(parser, path, default=None):
    section, key = path.split('.')
    if parser.has_option(section, key):
        return parser.get(section, key).strip()
    if default is None:
        raise MissingKey(path)
    return default


def _number(parser, path, default=None, cast=float, positive=True,
            minimum=None):
    raw = _raw(parser, path, None if default is None else str(default))
    try:
        value = cast(raw)
    except ValueError:
        raise BadValue(path, 'not a number: {}'.format(raw))

    if cast is float and not math.isfinite(value):
        raise BadValue(path, 'must be finite')
    if positive and not value > 0:
        raise BadValue(path, 'must be positive, got {}'.format(raw))
    if minimum is not None and value < minimum:
        raise BadValue(path, 'must be at least {}, got {}'.format(minimum, raw))
    return value


def _flag(parser, path, default):
    raw = _raw(parser, path, 'true' if default else 'false').lower()
    if raw in TRUE_VALUES:
        return True
    if raw in FALSE_VALUES:
        return False
    raise BadValue(path, 'not a boolean: {}'.format(raw))


def parse_breakpoints(path, raw, delta):
    '''Parse ``"t:value t:value"``; ``delta`` may stand for a value.'''
    points = []
    for item in raw.split():
        try:
            t, value = item.split(':')
            value = delta if value == 'delta' else float(value)
            points.append((float(t), float(value)))
        except ValueError:
            raise BadValue(path, 'expected "t:value" pairs, got {}'.format(raw))
    if not points:
        raise BadValue(path, 'no breakpoints')
    return points


def format_breakpoints(points):
    return ' '.join('{}:{}'.format(format_float(t), format_float(value))
                    for t, value in points)


def parse_string(text):
    '''Parse a scenario document held in a string.

    :rtype: :py:class:`fracmove.config.ScenarioConfig`

    :raises `fracmove.exceptions.MissingKey`: for a missing required key
    :raises `fracmove.exceptions.BadValue`: for an invalid value
    '''
    parser = configparser.ConfigParser()
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as e:
        raise BadValue('document', str(e).splitlines()[0])

    for section in SECTIONS:
        if not parser.has_section(section):
            parser.add_section(section)

    for path in REQUIRED:
        _raw(parser, path)

    values = dict((section, {}) for section in SECTIONS)

    grid = values['grid']
    grid['nx'] = _number(parser, 'grid.nx', cast=int, minimum=const.MIN_NODES)
    grid['ny'] = _number(parser, 'grid.ny', cast=int, minimum=const.MIN_NODES)
    grid['lx'] = _number(parser, 'grid.lx')
    grid['ly'] = _number(parser, 'grid.ly')
    h = grid['lx'] / (grid['nx'] - 1)

    for edge, default in [(const.EDGE_BOTTOM, const.GAMMA_U1),
                          (const.EDGE_TOP, const.GAMMA_U2),
                          (const.EDGE_LEFT, const.GAMMA_F),
                          (const.EDGE_RIGHT, const.GAMMA_F)]:
        path = 'boundary.{}'.format(edge)
        label = _raw(parser, path, default)
        if label not in const.LABELS:
            raise BadValue(path, 'unknown label {}'.format(label))
        values['boundary'][edge] = label

    material = values['material']
    material['mu'] = _number(parser, 'material.mu')
    material['G'] = _number(parser, 'material.G')
    material['E'] = _number(parser, 'material.E',
                            const.DEFAULT_E_FACTOR * material['mu'])
    material['Sigma'] = _number(parser, 'material.Sigma',
                                const.DEFAULT_SIGMA_FACTOR * material['mu'])
    material['cap_C'] = _number(parser, 'material.cap_C',
                                const.DEFAULT_CAP_FACTOR * material['G'])
    material['eps'] = _number(parser, 'material.eps',
                              const.DEFAULT_EPS_FACTOR * h)
    material['k_eps'] = _number(parser, 'material.k_eps', const.DEFAULT_K_EPS)

    if material['cap_C'] <= material['G']:
        raise BadValue('material.cap_C', 'must exceed material.G')
    if material['k_eps'] > const.MAX_K_EPS:
        raise BadValue('material.k_eps',
                       'must not exceed {}'.format(const.MAX_K_EPS))

    load = values['load']
    load['delta'] = _number(parser, 'load.delta', 1.0, positive=False)
    load['T'] = _number(parser, 'load.T')
    load['s'] = _number(parser, 'load.s', cast=int, minimum=1)
    load[const.GAMMA_U1] = parse_breakpoints(
        'load.' + const.GAMMA_U1, _raw(parser, 'load.' + const.GAMMA_U1, '0:0'),
        load['delta'])
    load[const.GAMMA_U2] = parse_breakpoints(
        'load.' + const.GAMMA_U2,
        _raw(parser, 'load.' + const.GAMMA_U2, '0:0 1:delta'), load['delta'])

    model = values['model']
    model['name'] = _raw(parser, 'model.name', const.MODEL_FIRST)
    if model['name'] not in const.MODELS:
        raise BadValue('model.name', 'unknown model {}'.format(model['name']))
    model['lambda'] = _number(parser, 'model.lambda', const.DEFAULT_LAMBDA)
    model['multistart'] = _flag(parser, 'model.multistart', True)
    model['stop_at_separation'] = _flag(
        parser, 'model.stop_at_separation', False)
    model['perturbation'] = _number(parser, 'model.perturbation', 0.0,
                                    positive=False)

    output = values['output']
    output['dir'] = _raw(parser, 'output.dir', '.')
    output['snapshot_stride'] = _number(
        parser, 'output.snapshot_stride', 0, cast=int, positive=False,
        minimum=0)

    return ScenarioConfig(values)


def parse_scenario(path):
    '''Read and validate a scenario file.

    :raises `fracmove.exceptions.IoError`: if the file can not be read
    '''
    try:
        with open(path, 'r') as f:
            text = f.read()
    except (IOError, OSError) as e:
        raise IoError(path, e.strerror or str(e))

    log.debug('Parsing scenario %s', path)
    return parse_string(text)


def serialize(config):
    '''Scenario document with every value written out.'''
    lines = []
    for section in SECTIONS:
        lines.append('[{}]'.format(section))
        for key, value in config[section].items():
            if isinstance(value, bool):
                text = 'true' if value else 'false'
            elif isinstance(value, int):
                text = str(value)
            elif isinstance(value, float):
                text = format_float(value)
            elif isinstance(value, list):
                text = format_breakpoints(value)
            else:
                text = value
            lines.append('{} = {}'.format(key, text))
        lines.append('')
    return '\n'.join(lines)


def to_scenario(config):
    '''Build the :py:class:`fracmove.entities.Scenario` of a config.'''
    g = config['grid']
    try:
        grid = build_grid(g['nx'], g['ny'], g['lx'], g['ly'])
    except TooSmall as e:
        raise BadValue('grid', str(e))

    m = config['material']
    material = Material(mu=m['mu'], G=m['G'], eps=m['eps'], E=m['E'],
                        Sigma=m['Sigma'], cap_C=m['cap_C'],
                        k_eps=m['k_eps'])

    load = config['load']
    program = LoadProgram(dict(
        (label, load[label]) for label in const.DIRICHLET_LABELS))

    model = config['model']
    return Scenario(
        grid, partition_boundary(grid, config['boundary']), program,
        material, model=model['name'], T=load['T'], s=load['s'],
        lam=model['lambda'], multistart=model['multistart'],
        stop_at_separation=model['stop_at_separation'],
        perturbation=model['perturbation'])
