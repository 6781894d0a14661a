from .registry import COMMAND_REGISTRY, build_command
from .base import CommandBase
from .output import emit, save

# importing the command modules registers them
from . import expand, matrix, orders, selftest, zeta
