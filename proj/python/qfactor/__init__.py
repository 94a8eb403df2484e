from qfactor._core import *  # noqa: F401,F403
from qfactor._core import __version__  # noqa: F401
