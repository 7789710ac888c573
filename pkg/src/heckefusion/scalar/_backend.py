"""Select the kernel backend: compiled if importable, else pure Python.

Set ``HECKEFUSION_BACKEND=python`` to force the pure-Python kernels.
"""
import os

if os.environ.get("HECKEFUSION_BACKEND", "").lower() == "python":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND
