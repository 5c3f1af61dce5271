from ._thickness import *  # noqa: F401,F403
from ._thickness import __doc__  # noqa: F401
