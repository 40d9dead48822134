"""API for `isdc`."""
from isdc.core.quadrature import *
from isdc.core.spatial import *
from isdc.core.multigrid import *
from isdc.core.problems import *
from isdc.core.sweeper import *

__version__ = "0.1.0"
