from .model import *
from .util import *
from .graph import *
from .betweenness import *
from .fractal import *
from .vulnerability import *
from .generators import *
from .load import *
