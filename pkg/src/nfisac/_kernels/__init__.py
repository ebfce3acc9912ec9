"""Kernel backend selection.

Tries the compiled extension first and falls back to the numpy
implementation; ``NFISAC_BACKEND`` (``auto`` / ``compiled`` / ``python``)
forces the choice.  Both backends expose the same functions and the same
element linearization, so everything above this package is backend-agnostic.
"""

from __future__ import annotations

import os

MODEL_CODES = {
    "accurate": 0,
    "nopolar": 1,
    "upw": 2,
    "usw": 3,
    "nusw": 4,
}

_requested = os.environ.get("NFISAC_BACKEND", "auto").lower()
if _requested not in {"auto", "compiled", "python"}:
    raise RuntimeError(
        f"NFISAC_BACKEND={_requested!r} not understood "
        "(expected auto, compiled or python)"
    )

if _requested in {"auto", "compiled"}:
    try:
        from . import _core as _backend  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _pyback as _backend

        BACKEND = "python"
else:
    from . import _pyback as _backend

    BACKEND = "python"

channel_gains = _backend.channel_gains
element_distances = _backend.element_distances
norm_sq_compensated = _backend.norm_sq_compensated
norm_sq_naive = _backend.norm_sq_naive
vdot_compensated = _backend.vdot_compensated


def get_backend(name: str):
    """Return a specific backend module (for benchmarks and cross-checks)."""
    if name == "python":
        from . import _pyback

        return _pyback
    if name == "compiled":
        from . import _core  # type: ignore[attr-defined]

        return _core
    raise ValueError(f"unknown backend {name!r}")
