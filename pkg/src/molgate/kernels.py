"""Hot time-stepping kernels.

Two loop shapes cover every integrator in :mod:`molgate.propagator`:

``evolve_expseq``
    Applies a product of exact exponentials ``exp(-i (a_k A + b_k B))`` to an
    accumulator, diagonalizing the small Hermitian combination at every
    sub-step.  Midpoint stepping uses one sub-step per time step, the
    commutator-free fourth-order scheme uses two.

``evolve_split``
    Split-operator composition for Hamiltonians of the form
    ``H(t) = f(t) A + B``.  All matrix exponentials are precomputed in the
    eigenbasis of ``A`` (the ``G`` stack), so each stage costs one dense
    matmul plus a diagonal phase.  This is the fast path for the large
    internal x motional problems.

Both are compiled with numba unless ``MOLGATE_BACKEND=numpy`` is set; the
``*_numpy`` aliases always point at the uncompiled versions.
"""

import numpy as np

from .backend import hot_loop


def _evolve_expseq(A, B, acoef, bcoef, U):
    # U <- prod_k exp(-i (acoef[k] A + bcoef[k] B)) U, k applied in order
    n = A.shape[0]
    for k in range(acoef.shape[0]):
        H = acoef[k] * A + bcoef[k] * B
        w, V = np.linalg.eigh(H)
        phase = np.exp(-1j * w)
        U = V @ (phase.reshape(n, 1) * (V.conj().T @ U))
    return U


def _evolve_expseq_tracked(A, B, acoef, bcoef, U, boundary, dt, rows, cols, td):
    # Same product as _evolve_expseq, accumulating per-column population
    # sum_{r in rows} |U[r, c]|^2 by the trapezoid rule at step boundaries
    # (boundary[k] marks the sub-steps that close a time step).
    n = A.shape[0]
    nc = cols.shape[0]
    prev = np.empty(nc)
    for c in range(nc):
        s = 0.0
        for r in range(rows.shape[0]):
            v = U[rows[r], cols[c]]
            s += v.real * v.real + v.imag * v.imag
        prev[c] = s
    for k in range(acoef.shape[0]):
        H = acoef[k] * A + bcoef[k] * B
        w, V = np.linalg.eigh(H)
        phase = np.exp(-1j * w)
        U = V @ (phase.reshape(n, 1) * (V.conj().T @ U))
        if boundary[k]:
            for c in range(nc):
                s = 0.0
                for r in range(rows.shape[0]):
                    v = U[rows[r], cols[c]]
                    s += v.real * v.real + v.imag * v.imag
                td[c] += 0.5 * dt * (prev[c] + s)
                prev[c] = s
    return U


def _evolve_split(G, fstage, cdt, aeigs, U):
    # U <- prod over steps k and stages s of  D(k, s) G[s] U  where
    # D(k, s) = diag(exp(-i cdt[s] fstage[k, s] aeigs)).  The caller folds
    # the head/tail boundary factors and works in the eigenbasis of A;
    # G[0] is the merged between-step static propagator and is skipped on
    # the very first stage.
    nsteps, nstages = fstage.shape
    for k in range(nsteps):
        for s in range(nstages):
            if k > 0 or s > 0:
                U = G[s] @ U
            phase = np.exp((-1j * cdt[s] * fstage[k, s]) * aeigs)
            U = phase.reshape(-1, 1) * U
    return U


evolve_expseq_numpy = _evolve_expseq
evolve_expseq_tracked_numpy = _evolve_expseq_tracked
evolve_split_numpy = _evolve_split

evolve_expseq = hot_loop(_evolve_expseq)
evolve_expseq_tracked = hot_loop(_evolve_expseq_tracked)
evolve_split = hot_loop(_evolve_split)
