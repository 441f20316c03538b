'''
    fracmove, quasi-static brittle fracture by incremental energy
    minimization.
'''
from ._version import __version__  # noqa: used in setup.py

from . import constants as const
from .evolution import FirstModel, ImprovedModel
from .viscous import ViscousModel


def create_model(name=const.MODEL_FIRST):
    '''Create a model instance.

    :param str name: one of ``first``, ``improved`` or ``viscous``

    :return: model instance
    :rtype: :py:class:`fracmove.evolution.FirstModel`,
            :py:class:`fracmove.evolution.ImprovedModel` or
            :py:class:`fracmove.viscous.ViscousModel`
    '''
    if name == const.MODEL_FIRST:
        return FirstModel()
    elif name == const.MODEL_IMPROVED:
        return ImprovedModel()
    elif name == const.MODEL_VISCOUS:
        return ViscousModel()
    else:
        raise ValueError("Model %s is not supported" % name)
