"""Kernel backend selection.

Prefers the compiled Cython kernels; falls back to the pure-Python twins when
the extension was not built.  Set C2WEBS_PURE=1 to force the fallback (used by
the benchmark and by tests that compare the two backends).
"""

from __future__ import annotations

import os

if os.environ.get("C2WEBS_PURE") == "1":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as kernels

BACKEND = kernels.BACKEND

padd = kernels.padd
psub = kernels.psub
pneg = kernels.pneg
pscale = kernels.pscale
pshift = kernels.pshift
pmul = kernels.pmul
pdivexact = kernels.pdivexact


def backend_name() -> str:
    """Name of the active kernel backend ("cython" or "python")."""
    return BACKEND
