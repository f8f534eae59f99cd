"""Selects the compiled or pure-numpy implementation of the hot kernels.

The orthogonal-polynomial recurrences summed over the spectral index are the
only numerically hot code in the package; they exist twice, as vectorized
numpy (`kernels_numpy`) and as numba-compiled loops (`kernels_numba`).  The
environment variable BETASF_NUMBA picks between them:

  "1"    require the compiled path (BackendError if numba is missing),
  "0"    force the pure-numpy path,
  unset  or anything else: try numba, fall back to numpy silently.

Both paths implement the same recurrences and agree to float roundoff, so
the choice never affects results, only speed.
"""

from __future__ import annotations

import os
from types import ModuleType

from ..errors import BetasfError

_ENV_VAR = "BETASF_NUMBA"
_cached: ModuleType | None = None
_cached_flag: str | None = None


class BackendError(BetasfError):
    """The requested kernel backend is unavailable."""


def _load_numba_backend() -> ModuleType:
    from . import kernels_numba

    return kernels_numba


def _load_numpy_backend() -> ModuleType:
    from . import kernels_numpy

    return kernels_numpy


def get_backend() -> ModuleType:
    """Kernel implementation module honouring BETASF_NUMBA."""
    global _cached, _cached_flag
    flag = os.environ.get(_ENV_VAR, "auto")
    if _cached is not None and flag == _cached_flag:
        return _cached
    if flag == "0":
        module = _load_numpy_backend()
    elif flag == "1":
        try:
            module = _load_numba_backend()
        except ImportError as exc:
            raise BackendError(
                f"{_ENV_VAR}=1 but the numba backend cannot be imported"
            ) from exc
    else:
        try:
            module = _load_numba_backend()
        except ImportError:
            module = _load_numpy_backend()
    _cached = module
    _cached_flag = flag
    return module


def backend_name() -> str:
    """'numba' or 'numpy', after resolution."""
    return "numba" if get_backend().__name__.endswith("numba") else "numpy"
