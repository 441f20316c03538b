# flake8: noqa

from .main import main, run_cli
