from .core import *
from .cli import *
