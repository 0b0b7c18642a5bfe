"""Backend selection for the numeric kernels.

Set ``SCARFKIT_BACKEND=numpy`` to skip numba entirely; the default is
``numba`` when it imports cleanly.
"""
import os

_requested = os.environ.get("SCARFKIT_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(
        f"SCARFKIT_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

try:
    if _requested == "numpy":
        raise ImportError("numba disabled by SCARFKIT_BACKEND")
    import numba  # noqa: F401

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

BACKEND = "numba" if HAS_NUMBA else "numpy"


def njit_options():
    return dict(cache=True, nogil=True)
