"""Backend selection for the hot kernels.

The compiled extension is used when it imports; otherwise the pure-Python
implementation is used.  Set ``VF_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

BACKEND = "python"

if os.environ.get("VF_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        _compiled = None
else:
    _compiled = None

if _compiled is not None:
    lr_expand = _compiled.lr_expand
    fold_to_alcove = _compiled.fold_to_alcove
    BACKEND = "cython"
else:
    lr_expand = _kernels_py.lr_expand
    fold_to_alcove = _kernels_py.fold_to_alcove

__all__ = ["BACKEND", "lr_expand", "fold_to_alcove"]
