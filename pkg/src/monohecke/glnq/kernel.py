"""
Backend selection for the GL_n(F_q) counting kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module with the same API takes over. ``get_backend`` returns a specific one.
"""

from __future__ import annotations

from types import ModuleType

from . import _pykernel

try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

__all__ = ["BACKEND", "backend_name", "get_backend", "available_backends"]

BACKEND: ModuleType = _ckernel if _ckernel is not None else _pykernel


def backend_name() -> str:
    return BACKEND.NAME


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _ckernel is not None else [])


def get_backend(name: str | None = None) -> ModuleType:
    if name is None:
        return BACKEND
    if name == "python":
        return _pykernel
    if name == "cython":
        if _ckernel is None:
            raise ImportError("compiled kernel not built; run `pip install -e .`")
        return _ckernel
    raise ValueError(f"unknown backend {name!r}")
