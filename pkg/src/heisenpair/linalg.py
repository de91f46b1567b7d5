"""Dense complex linear algebra for 2x2 and 4x4 Hermitian matrices.

Everything downstream (thermal states, concurrence, discord) runs through
the eigensolver and entropy routines here, so they are deliberately small,
deterministic and free of external solver dependencies: a cyclic Jacobi
rotation method covers every matrix this package ever sees.
"""

import numpy as np

from .errors import NotAStateError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-10
# eigenvalues in [-EIG_CLAMP, 0) are rounding noise and get clamped to 0;
# anything below is treated as a genuinely invalid state
EIG_CLAMP = 1e-10

_JACOBI_OFF_TOL = 1e-13
_JACOBI_MAX_SWEEPS = 50

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
for _p in (PAULI_X, PAULI_Y, PAULI_Z):
    _p.setflags(write=False)
del _p


def check_hermitian(m, tol=HERMITIAN_TOL):
    """Validate shape and Hermiticity; return the matrix as a complex array.

    Raises ValueError naming the worst offending entry pair when the
    matrix deviates from m == m.conj().T by more than `tol`.
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] not in (2, 4):
        raise ValueError(f"expected a square 2x2 or 4x4 matrix, got shape {m.shape}")
    delta = np.abs(m - m.conj().T)
    worst = float(delta.max())
    if worst > tol:
        i, j = np.unravel_index(int(np.argmax(delta)), delta.shape)
        raise ValueError(
            f"matrix is not Hermitian: entries ({i},{j}) and ({j},{i}) "
            f"disagree by {worst:.3e} (tolerance {tol:.0e})"
        )
    return m


def _jacobi(a, want_vectors):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Sweeps all (p, q) pairs, each time applying the unitary plane rotation
    that zeroes a[p, q], until every off-diagonal magnitude is below
    1e-13 or 50 sweeps have run. Returns (eigenvalues ascending, unitary
    whose columns are the matching eigenvectors, or None).
    """
    n = a.shape[0]
    a = a.copy()
    v = np.eye(n, dtype=complex) if want_vectors else None
    mask = ~np.eye(n, dtype=bool)
    for _ in range(_JACOBI_MAX_SWEEPS):
        if np.abs(a[mask]).max() < _JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                w = a[p, q]
                aw = abs(w)
                if aw < _JACOBI_OFF_TOL:
                    continue
                phase = w / aw
                tau = (a[q, q].real - a[p, p].real) / (2.0 * aw)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + np.sqrt(tau * tau + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                u = np.eye(n, dtype=complex)
                u[p, p] = c
                u[p, q] = s * phase
                u[q, p] = -s * np.conj(phase)
                u[q, q] = c
                a = u.conj().T @ a @ u
                if v is not None:
                    v = v @ u
    order = np.argsort(a.diagonal().real, kind="stable")
    vals = a.diagonal().real[order].copy()
    if v is None:
        return vals, None
    return vals, v[:, order]


def hermitian_eigenvalues(m):
    """Eigenvalues of a Hermitian matrix, ascending, via cyclic Jacobi."""
    vals, _ = _jacobi(check_hermitian(m), want_vectors=False)
    return vals


def hermitian_eigensystem(m):
    """Eigenvalues (ascending) and a unitary of matching eigenvector columns."""
    return _jacobi(check_hermitian(m), want_vectors=True)


def entropy_from_eigenvalues(eigenvalues):
    """Shannon entropy in bits of an eigenvalue distribution, 0*log2(0) == 0.

    Values in [-1e-10, 0) are clamped to zero; anything lower raises
    NotAStateError.
    """
    lam = np.asarray(eigenvalues, dtype=float)
    if lam.size and float(lam.min()) < -EIG_CLAMP:
        raise NotAStateError(
            f"eigenvalue {float(lam.min()):.3e} below -{EIG_CLAMP:.0e}: not a state"
        )
    lam = np.clip(lam, 0.0, None)
    nz = lam[lam > 0.0]
    return float(-(nz * np.log2(nz)).sum())


def von_neumann_entropy(m):
    """Von Neumann entropy S(m) = -Tr m log2 m of a trace-1 Hermitian matrix."""
    m = check_hermitian(m)
    tr = float(m.trace().real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"trace {tr!r} is not 1 within {TRACE_TOL:.0e}")
    return entropy_from_eigenvalues(hermitian_eigenvalues(m))


def partial_trace(m, keep):
    """Trace out one qubit of a two-qubit operator (qubit A is the left factor).

    keep="A" returns Tr_B(m); keep="B" returns Tr_A(m).
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"partial trace needs a 4x4 matrix, got shape {m.shape}")
    blocks = m.reshape(2, 2, 2, 2)  # [row_A, row_B, col_A, col_B]
    if keep == "A":
        return np.einsum("abcb->ac", blocks)
    if keep == "B":
        return np.einsum("abad->bd", blocks)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")
