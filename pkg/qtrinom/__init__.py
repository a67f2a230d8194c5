# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.

from qtrinom import algebra
from qtrinom import models
from qtrinom import utils

try:
    from .version import __version__  # noqa: F401
except ImportError:
    pass
