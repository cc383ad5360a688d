"""Python interface to the fairfront C++ core."""

try:
    from ._fairfront import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:
    from _fairfront import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
