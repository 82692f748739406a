"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``CUBEROW_NO_EXT=1`` in the environment to force the pure-Python kernels
even when the extension is built (useful for benchmarking and debugging).
"""

from __future__ import annotations

import os

from cuberow import _pykernels

if os.environ.get("CUBEROW_NO_EXT") == "1":
    _active = _pykernels
else:
    try:
        from cuberow import _speedups as _active  # type: ignore[no-redef]
    except ImportError:
        _active = _pykernels

BACKEND: str = _active.BACKEND_NAME

accumulate_spans = _active.accumulate_spans
density_profile = _active.density_profile
bitsum_profile = _active.bitsum_profile


def available_backends() -> dict:
    """Name -> module for every importable kernel backend."""
    backends = {_pykernels.BACKEND_NAME: _pykernels}
    try:
        from cuberow import _speedups

        backends[_speedups.BACKEND_NAME] = _speedups
    except ImportError:
        pass
    return backends
