# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lab-frame RK4 kernel.

Integrates the lab-frame amplitude system

    d amp_j / dt = -sum_l sqrt(rate_j rate_l)/2 * exp(i (j-l) omega_bar t) * amp_l

with classical fixed-step RK4. Mirrors ``_kernels_py.rk4_lab``.
"""
import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt

cnp.import_array()


cdef void _rhs(double[:, ::1] coupling, double[::1] level_freq, double t,
               double complex[::1] amps, double complex[::1] scratch,
               double complex[::1] out) noexcept nogil:
    cdef Py_ssize_t n = amps.shape[0]
    cdef Py_ssize_t j, l
    cdef double theta
    cdef double complex acc
    for l in range(n):
        theta = -level_freq[l] * t
        scratch[l] = (cos(theta) + 1j * sin(theta)) * amps[l]
    for j in range(n):
        acc = 0
        for l in range(n):
            acc = acc + coupling[j, l] * scratch[l]
        theta = level_freq[j] * t
        out[j] = -(cos(theta) + 1j * sin(theta)) * acc


def rk4_lab(rates, double omega_bar, amps0, double dt,
            Py_ssize_t n_steps, Py_ssize_t store_every=1):
    """Same contract as ``_kernels_py.rk4_lab``."""
    cdef const double[::1] rates_v = np.ascontiguousarray(rates, dtype=np.float64)
    cdef Py_ssize_t n = rates_v.shape[0]
    cdef Py_ssize_t half = (n - 1) // 2
    if n_steps % store_every:
        raise ValueError("n_steps must be a multiple of store_every")

    coupling_arr = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] coupling = coupling_arr
    level_freq_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] level_freq = level_freq_arr
    cdef Py_ssize_t j, l
    for j in range(n):
        level_freq[j] = (j - half) * omega_bar
        for l in range(n):
            coupling[j, l] = 0.5 * sqrt(rates_v[j] * rates_v[l])

    out_arr = np.empty((n_steps // store_every + 1, n), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    amps_arr = np.array(amps0, dtype=np.complex128)
    cdef double complex[::1] amps = amps_arr
    scratch_arr = np.empty((6, n), dtype=np.complex128)
    cdef double complex[::1] k1 = scratch_arr[0]
    cdef double complex[::1] k2 = scratch_arr[1]
    cdef double complex[::1] k3 = scratch_arr[2]
    cdef double complex[::1] k4 = scratch_arr[3]
    cdef double complex[::1] stage = scratch_arr[4]
    cdef double complex[::1] scratch = scratch_arr[5]

    cdef double t, half_dt = 0.5 * dt
    cdef Py_ssize_t step
    with nogil:
        for j in range(n):
            out[0, j] = amps[j]
        for step in range(1, n_steps + 1):
            t = (step - 1) * dt
            _rhs(coupling, level_freq, t, amps, scratch, k1)
            for j in range(n):
                stage[j] = amps[j] + half_dt * k1[j]
            _rhs(coupling, level_freq, t + half_dt, stage, scratch, k2)
            for j in range(n):
                stage[j] = amps[j] + half_dt * k2[j]
            _rhs(coupling, level_freq, t + half_dt, stage, scratch, k3)
            for j in range(n):
                stage[j] = amps[j] + dt * k3[j]
            _rhs(coupling, level_freq, t + dt, stage, scratch, k4)
            for j in range(n):
                amps[j] = amps[j] + (dt / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j])
            if step % store_every == 0:
                for j in range(n):
                    out[step // store_every, j] = amps[j]
    return out_arr
