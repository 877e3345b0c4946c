"""Kernel backend selection.

The compiled extension is preferred when it imported cleanly; set
ZETACODES_PURE=1 to force the numpy fallback.  Both expose the same three
functions and the active one is named in BACKEND.
"""

from __future__ import annotations

import os

from . import _py

if os.environ.get("ZETACODES_PURE") == "1":
    _impl = _py
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _py

BACKEND: str = _impl.BACKEND
closure_words = _impl.closure_words
dual_words = _impl.dual_words
weight_hist = _impl.weight_hist

__all__ = ["BACKEND", "closure_words", "dual_words", "weight_hist"]
