"""Compiled per-molecule propagation loop.

Molecules never interact, so each one is walked from its emission step to
absorption, degradation or the final step before the next one starts.  The
per-step rules are the same as :func:`mcvd_enzymes.engine.step_particles`.
"""

import numba as nb
import numpy as np


@nb.njit(nogil=True, cache=True)
def propagate(
    rng,
    start_steps,
    n_steps,
    sigma,
    emit,
    tx_c,
    tx_r2,
    tx_reflect,
    rx_r2,
    enz_c,
    enz_r2,
    has_enzyme,
    p_survive,
):
    """Walk every molecule; the Rx is centred at the origin.

    Returns ``(hit_step, hit_pos, n_degraded, n_survived)`` where ``hit_step[i]`` is the
    index of the step that ended inside the Rx (-1 when not absorbed) and
    ``hit_pos[i]`` is the position at the end of that step.
    """
    n = start_steps.shape[0]
    hit_step = np.full(n, -1, dtype=np.int64)
    hit_pos = np.zeros((n, 3))
    n_degraded = 0
    n_survived = 0
    for i in range(n):
        x = emit[0]
        y = emit[1]
        z = emit[2]
        done = False
        for s in range(start_steps[i], n_steps):
            nx = x + sigma * rng.standard_normal()
            ny = y + sigma * rng.standard_normal()
            nz = z + sigma * rng.standard_normal()
            if tx_reflect:
                ax = nx - tx_c[0]
                ay = ny - tx_c[1]
                az = nz - tx_c[2]
                if ax * ax + ay * ay + az * az <= tx_r2:
                    nx = x
                    ny = y
                    nz = z
            if nx * nx + ny * ny + nz * nz <= rx_r2:
                hit_step[i] = s
                hit_pos[i, 0] = nx
                hit_pos[i, 1] = ny
                hit_pos[i, 2] = nz
                done = True
                break
            x = nx
            y = ny
            z = nz
            if has_enzyme:
                ex = x - enz_c[0]
                ey = y - enz_c[1]
                ez = z - enz_c[2]
                if ex * ex + ey * ey + ez * ez <= enz_r2:
                    if rng.random() >= p_survive:
                        n_degraded += 1
                        done = True
                        break
        if not done:
            n_survived += 1
    return hit_step, hit_pos, n_degraded, n_survived
