"""Kernel backend selection.

Hot inner loops exist in two flavors: numba-jitted scalar loops
(``kernels_nb``) and vectorized pure-numpy equivalents (``kernels_np``).
Both consume the same counter-based random keys, so results are
bit-identical between backends.

The active backend is chosen by the ``RILAB_BACKEND`` environment
variable (``numba`` or ``numpy``); default is numba when importable.
``set_backend`` overrides the choice at runtime (used by tests and the
benchmark script).
"""

from __future__ import annotations

import os

_ENV_VAR = "RILAB_BACKEND"
_VALID = ("numba", "numpy")

_forced: str | None = None


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def backend_name() -> str:
    """Name of the currently active kernel backend."""
    if _forced is not None:
        return _forced
    env = os.environ.get(_ENV_VAR, "").strip().lower()
    if env in _VALID:
        return env
    if env:
        raise ValueError(f"{_ENV_VAR} must be one of {_VALID}, got {env!r}")
    return "numba" if _numba_available() else "numpy"


def set_backend(name: str | None) -> None:
    """Force a backend (``'numba'``/``'numpy'``), or ``None`` to restore env selection."""
    global _forced
    if name is not None and name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    _forced = name


def get_kernels():
    """Return the kernel module for the active backend."""
    if backend_name() == "numba":
        from . import kernels_nb
        return kernels_nb
    from . import kernels_np
    return kernels_np
