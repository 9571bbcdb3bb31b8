"""Select the RK4 kernel at import time: compiled if available, numpy otherwise."""
try:
    from ._kernels import rk4_lab

    KERNEL_BACKEND = "compiled"
except ImportError:  # extension not built on this install
    from ._kernels_py import rk4_lab

    KERNEL_BACKEND = "python"

__all__ = ["rk4_lab", "KERNEL_BACKEND"]
