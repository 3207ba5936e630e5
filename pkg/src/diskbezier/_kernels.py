"""Kernel dispatch: compiled extension when available, numpy otherwise.

Set DISKBEZIER_PURE=1 to force the pure numpy kernels (used by the
benchmark to compare both backends).
"""

import os

if os.environ.get("DISKBEZIER_PURE"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

basis_matrix = _impl.basis_matrix
rational_matrix = _impl.rational_matrix
curve_samples = _impl.curve_samples


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "compiled" if _impl.__name__.endswith("_ckernels") else "python"
