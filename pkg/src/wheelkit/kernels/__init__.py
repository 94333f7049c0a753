"""Kernel backend selection.

The compiled extension is preferred when present; the pure-Python twin is
the fallback.  Set WHEELKIT_KERNEL=pure (or =fast) to force a backend,
which the benchmark and the cross-checking tests use.
"""

from __future__ import annotations

import os

_choice = os.environ.get("WHEELKIT_KERNEL", "").lower()

if _choice == "pure":
    from wheelkit.kernels import pure as _impl
elif _choice in ("fast", "compiled"):
    from wheelkit.kernels import _fast as _impl  # type: ignore[attr-defined]
else:
    try:
        from wheelkit.kernels import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from wheelkit.kernels import pure as _impl

BACKEND: str = _impl.BACKEND
four_color_masks = _impl.four_color_masks
linkage_masks = _impl.linkage_masks

MAX_KERNEL_VERTICES = 63
