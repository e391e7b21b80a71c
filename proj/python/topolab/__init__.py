from ._core import *  # noqa: F401,F403
from ._core import TopolabError, FinSpace, SymSet  # noqa: F401
