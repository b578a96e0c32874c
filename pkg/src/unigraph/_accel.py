"""Optional numba acceleration.

Set ``UNIGRAPH_DISABLE_NUMBA=1`` to force the pure-python / numpy path even
when numba is importable. The flag is read once at import time.
"""
import os

_disabled = os.environ.get("UNIGRAPH_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:
    if _disabled:
        raise ImportError
    import numba

    USING_NUMBA = True

    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)

except ImportError:
    USING_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda f: f
