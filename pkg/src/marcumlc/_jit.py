"""Numba shim.

Kernels are decorated with :func:`njit` from this module.  Setting the
environment variable ``MARCUMLC_DISABLE_JIT=1`` (or running without numba
installed) turns the decorator into the identity so every kernel runs as
plain Python on floats and numpy arrays.
"""

import os
import warnings

_flag = os.environ.get("MARCUMLC_DISABLE_JIT", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("disabled by MARCUMLC_DISABLE_JIT")
    import numba as _nb

    JIT_ENABLED = True
except ImportError as exc:
    JIT_ENABLED = False
    if not _disabled:
        warnings.warn(f"numba unavailable ({exc}); using the pure Python kernels")


def njit(*args, **kwargs):
    """``numba.njit(cache=True, nogil=True)`` or a no-op when JIT is off."""
    if JIT_ENABLED:
        kwargs.setdefault("cache", True)
        kwargs.setdefault("nogil", True)
        return _nb.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda func: func
