"""Select the kernel implementation at import time.

The compiled extension ``lunepot._kernels_cy`` is preferred when present;
otherwise the pure-Python twin is used.  Set ``LUNEPOT_BACKEND=python`` or
``LUNEPOT_BACKEND=compiled`` to force a choice (the latter raises if the
extension is missing).
"""

from __future__ import annotations

import os

_requested = os.environ.get("LUNEPOT_BACKEND", "").strip().lower()

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _requested == "compiled":
    from . import _kernels_cy as _impl  # type: ignore[no-redef]

    BACKEND = "compiled"
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

li2_parts = _impl.li2_parts
im_li2_path = _impl.im_li2_path
angular_primitive_core = _impl.angular_primitive_core
cos_log_primitive_core = _impl.cos_log_primitive_core
chord_radius_core = _impl.chord_radius_core
wedge_panel = _impl.wedge_panel
cos_log_panel = _impl.cos_log_panel


def backend_name() -> str:
    """Name of the active kernel backend ('compiled' or 'python')."""
    return BACKEND
