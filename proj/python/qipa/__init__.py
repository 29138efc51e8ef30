"""Exact desk-scale laboratory for quantum iterative power algorithms.

Thin re-export of the compiled core. Everything lives in C++; this package
exists so `import qipa` works from both an editable install and the build
tree (tests point PYTHONPATH at build/python).
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
