"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback.  Set ``ASLATTICE_PURE_KERNELS=1`` to force the fallback (used by
the benchmark and by tests that compare both backends).
"""

import os

if os.environ.get("ASLATTICE_PURE_KERNELS"):
    from aslattice._kernels import pure as _impl
else:
    try:
        from aslattice._kernels import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from aslattice._kernels import pure as _impl

BACKEND = _impl.BACKEND
transitive_closure = _impl.transitive_closure
enumerate_ideal_masks = _impl.enumerate_ideal_masks
canonical_key = _impl.canonical_key
