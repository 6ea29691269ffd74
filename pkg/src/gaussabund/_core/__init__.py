"""Hot kernels: compiled when the extension is built, pure Python otherwise.

Set ``GAUSSABUND_PURE=1`` to force the fallback. ``BACKEND`` names the
implementation in use.
"""

import os

from gaussabund._core import _fallback

if os.environ.get("GAUSSABUND_PURE", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from gaussabund._core import _kernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

gauss_gcd = _impl.gauss_gcd
prime_sieve = _impl.prime_sieve
smallest_factor_table = _impl.smallest_factor_table
canonical_pairs = _impl.canonical_pairs

__all__ = [
    "BACKEND",
    "gauss_gcd",
    "prime_sieve",
    "smallest_factor_table",
    "canonical_pairs",
]
