"""Kernel backend selection.

Prime fields with ``p < 2**31`` use the compiled mod-p kernels when the
extension module is importable; everything else (and every run with
``ITERLEX_PURE_PYTHON=1`` in the environment) uses the pure-Python kernels.
"""
from __future__ import annotations

import os

from ._pykernels import PyBackend
from .scalar import FieldSpec

try:
    from ._npkernels import MAX_MODULUS, CompiledModBackend
    HAVE_COMPILED = True
except ImportError:
    CompiledModBackend = None
    MAX_MODULUS = 0
    HAVE_COMPILED = False

_FORCE_PYTHON = os.environ.get("ITERLEX_PURE_PYTHON", "") not in ("", "0")


def backend_for(field: FieldSpec, prefer: str | None = None):
    """Return a kernel backend; ``prefer`` is ``"python"``, ``"compiled"`` or ``None``."""
    if prefer == "python":
        return PyBackend(field)
    usable = HAVE_COMPILED and field.p is not None and field.p < MAX_MODULUS
    if prefer == "compiled":
        if not usable:
            raise RuntimeError(f"compiled kernels unavailable for {field}")
        return CompiledModBackend(field)
    if usable and not _FORCE_PYTHON:
        return CompiledModBackend(field)
    return PyBackend(field)
