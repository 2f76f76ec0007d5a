"""Hot numeric kernels, numba-jitted when available.

Set REDRAFT_DISABLE_NUMBA=1 to force the pure-Python fallback. Both paths
execute the same source with the same operation order, so results are
bit-identical either way; the flag only trades speed for import time.
"""

import os


def _numba_enabled() -> bool:
    flag = os.environ.get("REDRAFT_DISABLE_NUMBA", "").strip().lower()
    if flag in {"1", "true", "yes", "on"}:
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_enabled()


def accelerate(fn):
    """Jit-compile fn unless the fallback is forced; fn must be nopython-safe."""
    if NUMBA_ENABLED:
        from numba import njit

        return njit(cache=True)(fn)
    return fn
