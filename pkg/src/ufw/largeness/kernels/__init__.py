"""Kernel backend selection.

The compiled extension is used when it imported successfully and the
environment variable ``UFW_PURE_PYTHON`` is unset/empty; otherwise the
pure-Python fallback.  Both expose the same semantics, compared directly
in the test suite and the benchmark script.
"""

import os

from . import _pykernels

try:
    from . import _ckernels as _compiled
except ImportError:  # extension not built; fallback only
    _compiled = None


def backend_name():
    if _compiled is not None and not os.environ.get("UFW_PURE_PYTHON"):
        return "compiled"
    return "python"


def first_uncovered_coloring(domain_size, r, configs, fix_first=True, backend=None):
    """Index of the first r-coloring of ``domain_size`` positions with no
    monochromatic config (odometer order, position 0 least significant), or
    -1 when every coloring has one.  ``fix_first`` pins position 0 to color
    0, a sound symmetry reduction for universal checks."""
    if backend is None:
        backend = backend_name()
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not available")
        import array

        flat = array.array("i")
        offsets = array.array("i", [0])
        for cfg in configs:
            flat.extend(cfg)
            offsets.append(len(flat))
        return _compiled.first_uncovered_coloring_flat(
            domain_size, r, flat, offsets, fix_first
        )
    return _pykernels.first_uncovered_coloring(domain_size, r, configs, fix_first)
