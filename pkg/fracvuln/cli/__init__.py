from .output import *
from .plot import *
from .commands import *
