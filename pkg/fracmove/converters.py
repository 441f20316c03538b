'''
Conversions between traces or fields and their text representations.

Floats are written with 17 significant digits so that identical runs give
byte-identical files.
'''
import io

import meshio
import numpy as np

from . import constants as const
from .entities import ScalarField
from .evolution import griffith_ledger_check
from .exceptions import InvalidField
from .grid import build_grid
from .utils import format_row


def energy_trace_rows(trace):
    verdicts = griffith_ledger_check(trace)
    for step, verdict in zip(trace.steps, verdicts):
        yield [step.k, step.time, step.elastic, step.surface, step.total,
               step.work, verdict.ok]


def write_energy_trace(trace, stream):
    '''Write the energy trace CSV of an incremental run.'''
    stream.write(','.join(const.TRACE_HEADER) + '\n')
    for row in energy_trace_rows(trace):
        stream.write(format_row(row) + '\n')


def write_viscous_trace(trace, stream):
    '''Write the energy trace CSV of a viscous run.

    The ledger column holds the step energy inequality: the total energy
    plus the penalty does not exceed the previous total energy.
    '''
    stream.write(','.join(const.VISCOUS_TRACE_HEADER) + '\n')
    previous = None
    for step in trace.steps:
        work = 0.0
        ok = True
        if previous is not None:
            work = step.total - previous.total
            slack = const.LEDGER_SLACK_FACTOR * max(previous.total, 1.0)
            ok = step.total + step.penalty <= previous.total + slack
        stream.write(format_row([step.k, step.time, step.elastic,
                                 step.surface, step.total, work, ok,
                                 step.penalty]) + '\n')
        previous = step


def write_iteration_log(history, stream):
    '''Write one line per alternate minimization iteration.'''
    stream.write(','.join(const.ITERATION_HEADER) + '\n')
    for record in history:
        energy = record.energy
        stream.write(format_row([record.step or 0, record.iteration,
                                 energy.elastic, energy.surface,
                                 energy.total]) + '\n')


def write_field(field, stream):
    '''Write a nodal field: the ``nx,ny,h`` header, its values, then the
    array row by row (``nx`` rows of ``ny`` values).'''
    grid = field.grid
    stream.write(','.join(const.FIELD_HEADER) + '\n')
    stream.write(format_row([grid.nx, grid.ny, grid.h]) + '\n')
    for row in np.asarray(field.values):
        stream.write(format_row([float(value) for value in row]) + '\n')


def field_to_string(field):
    stream = io.StringIO()
    write_field(field, stream)
    return stream.getvalue()


def read_field(stream):
    '''Read a field written by :py:func:`write_field`.

    :rtype: :py:class:`fracmove.entities.ScalarField`

    :raises `fracmove.exceptions.InvalidField`: for a malformed file
    '''
    header = stream.readline().strip()
    if header != ','.join(const.FIELD_HEADER):
        raise InvalidField('Unexpected field header: {}'.format(header))

    try:
        nx, ny, h = stream.readline().strip().split(',')
        nx, ny, h = int(nx), int(ny), float(h)
        values = np.loadtxt(stream, delimiter=',', ndmin=2)
    except ValueError as e:
        raise InvalidField('Malformed field file: {}'.format(e))

    if values.shape != (nx, ny):
        raise InvalidField('Expected {}x{} values, got {}x{}'.format(
            nx, ny, values.shape[0], values.shape[1]))

    grid = build_grid(nx, ny, (nx - 1) * h, (ny - 1) * h)
    return ScalarField(grid, values)


def write_vtk(grid, fields, path):
    '''Write nodal fields on the quad mesh of ``grid`` as legacy ASCII VTK.

    :param dict fields: name to nodal array of shape ``grid.shape``
    :param str path: output file
    '''
    # VTK runs x fastest
    x, y = grid.coordinates()
    points = np.column_stack([x.ravel(order='F'), y.ravel(order='F'),
                              np.zeros(grid.n_nodes)])

    index = np.arange(grid.n_nodes).reshape(grid.shape, order='F')
    quads = np.stack([index[:-1, :-1], index[1:, :-1], index[1:, 1:],
                      index[:-1, 1:]], axis=-1).reshape(-1, 4)

    point_data = {
        name: np.asarray(values, dtype=float).ravel(order='F')
        for name, values in fields.items()}
    mesh = meshio.Mesh(points, [('quad', quads)], point_data=point_data)
    meshio.write(path, mesh, file_format='vtk', binary=False)


def write_k2_table(table, stream):
    stream.write(','.join(const.K2_HEADER) + '\n')
    for row in table.rows():
        stream.write(format_row(row) + '\n')
