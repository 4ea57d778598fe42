"""Kernel backend selection.

The package ships two implementations of its hot inner loops: a compiled
Cython extension (:mod:`braidkit.kernels._speedups`) and a pure-Python twin
(:mod:`braidkit.kernels.pure`).  The compiled backend is preferred when it
imported successfully at build time; setting the environment variable
``BRAIDKIT_PURE=1`` forces the pure backend.  Both produce identical output
for identical input; ``tests/test_kernels.py`` enforces the agreement.
"""

from __future__ import annotations

import os

from braidkit.kernels import pure

BACKEND = "pure"
artin_apply = pure.artin_apply
artin_images = pure.artin_images
dynnikov_apply = pure.dynnikov_apply
free_reduce = pure.free_reduce

if not os.environ.get("BRAIDKIT_PURE"):
    try:
        from braidkit.kernels import _speedups

        BACKEND = "compiled"
        artin_apply = _speedups.artin_apply
        artin_images = _speedups.artin_images
        dynnikov_apply = _speedups.dynnikov_apply
        free_reduce = _speedups.free_reduce
    except ImportError:
        pass
