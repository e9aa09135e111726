"""Kernel selection: the compiled extension when importable, else pure Python.

Set ``HAMEX_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("HAMEX_PURE_PYTHON"):
    from . import _pycore as core
else:
    try:
        from . import _core as core
    except ImportError:  # extension not built
        from . import _pycore as core

BACKEND = core.NAME
