"""Kernel backend selection.

Prefers the compiled extension and falls back to the pure-Python
implementation when the extension is missing or when the environment
variable ``BRIDGEGAP_PURE_PYTHON`` is set to a non-empty value. Both
backends implement identical contracts (see ``_purepy``), so selection
only affects speed.
"""

from __future__ import annotations

import os

if os.environ.get("BRIDGEGAP_PURE_PYTHON"):
    from . import _purepy as _impl

    BACKEND = "python"
else:
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from . import _purepy as _impl  # type: ignore[no-redef]

        BACKEND = "python"

multi_source_bfs = _impl.multi_source_bfs
entry_path_bfs = _impl.entry_path_bfs
count_entry_paths = _impl.count_entry_paths
connected_within = _impl.connected_within
