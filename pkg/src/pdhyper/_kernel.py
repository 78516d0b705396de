"""Pick the strand kernel: compiled if importable, pure Python otherwise.

Set ``PDHYPER_PURE=1`` to force the pure-Python kernel.
"""

from __future__ import annotations

import os

from . import _strand_py

BACKEND = "python"
_compiled = None

if os.environ.get("PDHYPER_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _strand as _compiled  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _compiled = None


def strand_betti(masks: list[int], p: int = 0) -> list[int]:
    if _compiled is not None:
        try:
            return _compiled.strand_betti(masks, p)
        except OverflowError:
            pass
    return _strand_py.strand_betti(masks, p)
