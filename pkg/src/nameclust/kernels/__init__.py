"""Bounded-BFS kernel selection.

The compiled extension is used when it was built and the environment
variable ``NAMECLUST_PURE`` is not set to ``1``; otherwise the pure
Python fallback runs. Both implement the same traversal and visit
neighbors in the same (sorted) order, so results are identical.
"""

import os

from . import pure

_fast = None
if os.environ.get("NAMECLUST_PURE", "") != "1":
    try:
        from .. import _fast as _fast  # noqa: F401  (built by setup.py)
    except ImportError:
        _fast = None

DEFAULT_KERNEL = "compiled" if _fast is not None else "pure"


def get_fast():
    return _fast
