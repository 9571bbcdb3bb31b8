"""Compiled kernel vs pure-numpy fallback."""
import numpy as np
import pytest

from multidecay import _kernels_py
from multidecay._backend import KERNEL_BACKEND

compiled = pytest.importorskip(
    "multidecay._kernels", reason="compiled kernel not built"
)

RATES = np.array([0.5, 1.0, 0.5])
START = np.array([0, 1, 0], dtype=complex)


def test_backend_prefers_compiled():
    assert KERNEL_BACKEND == "compiled"


def test_kernels_agree():
    args = (RATES, 0.1, START, 1e-3, 5000, 10)
    gap = np.abs(compiled.rk4_lab(*args) - _kernels_py.rk4_lab(*args)).max()
    assert gap < 1e-13


def test_kernels_agree_five_levels():
    rates = np.array([0.2, 0.7, 1.0, 0.7, 0.2])
    start = np.zeros(5, dtype=complex)
    start[2] = 1.0
    args = (rates, 0.4, start, 1e-3, 2000, 1)
    gap = np.abs(compiled.rk4_lab(*args) - _kernels_py.rk4_lab(*args)).max()
    assert gap < 1e-13


@pytest.mark.parametrize("kernel", [compiled.rk4_lab, _kernels_py.rk4_lab])
def test_scalar_exponential(kernel):
    history = kernel(np.array([1.0]), 0.0, np.array([1.0 + 0j]), 1e-3, 5000, 100)
    times = np.arange(history.shape[0]) * 0.1
    np.testing.assert_allclose(history[:, 0].real, np.exp(-times / 2), atol=1e-12)


@pytest.mark.parametrize("kernel", [compiled.rk4_lab, _kernels_py.rk4_lab])
def test_store_alignment_required(kernel):
    with pytest.raises(ValueError):
        kernel(RATES, 0.1, START, 1e-3, 1001, 10)


def test_readonly_inputs_accepted():
    rates = RATES.copy()
    rates.flags.writeable = False
    start = START.copy()
    start.flags.writeable = False
    compiled.rk4_lab(rates, 0.1, start, 1e-3, 100, 1)
    _kernels_py.rk4_lab(rates, 0.1, start, 1e-3, 100, 1)


def test_fallback_selected_when_extension_missing():
    import importlib
    import sys

    import multidecay._backend as backend

    class BlockCompiledKernel:
        def find_spec(self, name, path=None, target=None):
            if name == "multidecay._kernels":
                raise ImportError("blocked to exercise the fallback")
            return None

    blocker = BlockCompiledKernel()
    sys.meta_path.insert(0, blocker)
    saved = sys.modules.pop("multidecay._kernels", None)
    try:
        reloaded = importlib.reload(backend)
        assert reloaded.KERNEL_BACKEND == "python"
        assert reloaded.rk4_lab is _kernels_py.rk4_lab
    finally:
        sys.meta_path.remove(blocker)
        if saved is not None:
            sys.modules["multidecay._kernels"] = saved
        importlib.reload(backend)
    assert backend.KERNEL_BACKEND == "compiled"


def test_integrate_lab_on_fallback_kernel(monkeypatch):
    import multidecay.dynamics as dynamics

    monkeypatch.setattr(dynamics, "rk4_lab", _kernels_py.rk4_lab)
    from conftest import canon_params

    p = canon_params()
    rk = dynamics.integrate_lab(p, 10.0, 1e-3, store_every=10)
    exact = dynamics.propagate(p, rk.times)
    assert np.abs(rk.total - exact.total).max() < 1e-8
