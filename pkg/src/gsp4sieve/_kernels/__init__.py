"""Hot kernels with a compiled core and a numpy fallback.

The Cython extension ``_ckernels`` is used when it imports; setting the
environment variable ``GSP4SIEVE_PURE=1`` forces the fallback.
"""
import os

from . import _pykernels as pure

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

if compiled is not None and os.environ.get("GSP4SIEVE_PURE", "") in ("", "0"):
    _active = compiled
    BACKEND = "cython"
else:
    _active = pure
    BACKEND = "python"

char_sum = _active.char_sum
closure_size = _active.closure_size

__all__ = ["BACKEND", "char_sum", "closure_size", "compiled", "pure"]
