"""Pure-numpy fallback for the lab-frame RK4 kernel.

Same contract as the compiled kernel in ``_kernels.pyx``; used when the
extension is unavailable. The right-hand side is the lab-frame amplitude
system with explicit interference phases,

    d amp_j / dt = -sum_l (m_jl) * exp(i (j-l) omega_bar t) * amp_l

with m_jl = sqrt(rate_j * rate_l) / 2 (the diagonal term is rate_j / 2).
"""
import numpy as np


def rk4_lab(rates, omega_bar, amps0, dt, n_steps, store_every=1):
    """Integrate with classical fixed-step RK4; return the stored history.

    Stores the state every ``store_every`` steps, starting with the initial
    state; ``n_steps`` must be a multiple of ``store_every``. Returns an
    array of shape (n_steps // store_every + 1, 2N+1).
    """
    rates = np.asarray(rates, dtype=float)
    n = rates.size
    levels = np.arange(n) - (n - 1) // 2
    root_rates = np.sqrt(rates)
    coupling = 0.5 * np.outer(root_rates, root_rates)

    def rhs(t, amps):
        # exp(i(j-l)wt) factors via per-level phases on both sides
        phases = np.exp(1j * levels * omega_bar * t)
        return -(phases * (coupling @ (phases.conj() * amps)))

    if n_steps % store_every:
        raise ValueError("n_steps must be a multiple of store_every")
    out = np.empty((n_steps // store_every + 1, n), dtype=complex)
    amps = np.asarray(amps0, dtype=complex).copy()
    out[0] = amps
    half_dt = 0.5 * dt
    for step in range(1, n_steps + 1):
        t = (step - 1) * dt
        k1 = rhs(t, amps)
        k2 = rhs(t + half_dt, amps + half_dt * k1)
        k3 = rhs(t + half_dt, amps + half_dt * k2)
        k4 = rhs(t + dt, amps + dt * k3)
        amps = amps + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if step % store_every == 0:
            out[step // store_every] = amps
    return out
