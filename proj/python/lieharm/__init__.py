from ._lieharm import *  # noqa: F401,F403
from ._lieharm import __doc__  # noqa: F401
