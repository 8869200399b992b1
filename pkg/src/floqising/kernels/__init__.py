"""Kernel backend dispatch.

The compiled Cython backend is preferred when its extension module is
importable; otherwise the pure-numpy fallback is used. The environment
variable FLOQISING_BACKEND (read once at import) forces a choice:

    FLOQISING_BACKEND=numpy   always use the fallback
    FLOQISING_BACKEND=cython  require the extension, fail loudly if missing

Both backends expose the same three in-place kernels: x_rotation,
z_rotation, zz_phase.
"""
import os

from . import _np

_requested = os.environ.get("FLOQISING_BACKEND", "").strip().lower()

if _requested == "numpy":
    _impl = _np
    BACKEND = "numpy"
elif _requested in ("", "cython"):
    try:
        from . import _cy as _impl
        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise ImportError(
                "FLOQISING_BACKEND=cython, but the compiled extension "
                "floqising.kernels._cy is not available"
            )
        _impl = _np
        BACKEND = "numpy"
else:
    raise ValueError(
        f"unknown FLOQISING_BACKEND value {_requested!r}; use 'numpy' or 'cython'"
    )

x_rotation = _impl.x_rotation
z_rotation = _impl.z_rotation
zz_phase = _impl.zz_phase


def active_backend() -> str:
    """Name of the kernel backend selected at import time."""
    return BACKEND
