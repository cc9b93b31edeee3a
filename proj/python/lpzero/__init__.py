from ._core import *  # noqa: F401,F403
from ._core import LpzeroError, Verdict, __doc__  # noqa: F401
