import hashlib

import numpy as np

from . import constants as const
from .exceptions import GridMismatch


def format_float(value):
    return const.FLOAT_FORMAT.format(float(value))


def format_row(values):
    cells = []
    for value in values:
        if isinstance(value, bool):
            cells.append('1' if value else '0')
        elif isinstance(value, (int, np.integer)):
            cells.append(str(int(value)))
        elif isinstance(value, str):
            cells.append(value)
        else:
            cells.append(format_float(value))
    return ','.join(cells)


def field_hash(values):
    array = np.ascontiguousarray(values, dtype=float)
    return hashlib.md5(array.tobytes()).hexdigest()


def check_same_grid(*items):
    '''Raise :py:class:`fracmove.exceptions.GridMismatch` unless every item
    (anything with a ``grid`` attribute) lives on the same grid.'''
    grids = [item.grid for item in items if item is not None]
    for grid in grids[1:]:
        if grid != grids[0]:
            raise GridMismatch(
                'Fields live on different grids: {} and {}'.format(
                    grids[0], grid))
    return grids[0] if grids else None
