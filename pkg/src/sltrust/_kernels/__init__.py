"""Backend selection for the batch kernels.

The env flag SL_TRUST_BACKEND picks the implementation:

  unset / "auto"  numba if importable, else pure numpy
  "numba"         require numba (raises if unavailable)
  "numpy"         force the pure-numpy path

Both backends expose the same module-level functions over float64 arrays:
cartesian_many, from_cartesian_many, angles_many, magnitude_ratio_many,
combine_many.  Selection is lazy so that importing the scalar API (or
running the CLI) never pays the numba import.
"""

import os

_ENV_FLAG = "SL_TRUST_BACKEND"
_backend = None


def _select():
    choice = os.environ.get(_ENV_FLAG, "auto").strip().lower() or "auto"
    if choice == "numpy":
        from . import numpy_backend

        return numpy_backend
    if choice == "numba":
        from . import numba_backend

        return numba_backend
    if choice == "auto":
        try:
            from . import numba_backend

            return numba_backend
        except ImportError:
            from . import numpy_backend

            return numpy_backend
    raise ValueError(
        f"{_ENV_FLAG} must be 'auto', 'numba', or 'numpy'; got {choice!r}"
    )


def load_backend():
    global _backend
    if _backend is None:
        _backend = _select()
    return _backend


def backend_name() -> str:
    return load_backend().NAME


def __getattr__(name):
    if name == "backend":
        return load_backend()
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
