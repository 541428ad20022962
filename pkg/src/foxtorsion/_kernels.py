"""Selects the term-dict kernel backend at import time.

The compiled extension is preferred; the pure-Python module is used when the
extension is absent or when ``FOXTORSION_PURE`` is set in the environment.
`benchmarks/bench_backends.py` compares the two.
"""

import os

if os.environ.get("FOXTORSION_PURE"):
    from . import _poly_python as _impl

    BACKEND = "python"
else:
    try:
        from . import _poly_core as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _poly_python as _impl

        BACKEND = "python"

mul_terms = _impl.mul_terms
add_terms = _impl.add_terms
iadd_scaled = _impl.iadd_scaled
