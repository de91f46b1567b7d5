"""Concurrence, projective-measurement machinery and quantum discord.

Concurrence follows the square-root-eigenvalue definition on rho * rho_flip.
Discord is S(rho_A) - S(rho_AB) + min_k S(B | measurement on A), with the
minimization restricted to rank-1 projective measurements on A parameterized
by Bloch angles (theta, phi). The minimizer is deterministic: a coarse theta
grid followed by golden-section refinement, so repeated runs are
bit-identical. A closed-form oracle for Bell-diagonal states provides an
independent check of the whole numeric chain.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotAStateError
from .linalg import (
    EIG_CLAMP,
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    check_hermitian,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    partial_trace,
    von_neumann_entropy,
)
from .model import to_matrix

SPIN_FLIP_KERNEL = np.kron(PAULI_Y, PAULI_Y)
SPIN_FLIP_KERNEL.setflags(write=False)

_STATE_TRACE_TOL = 1e-10
_X_PATTERN_TOL = 1e-12
_BRANCH_EPS = 1e-14  # measurement branches below this probability contribute 0
_IMAG_TOL = 1e-12    # coherences above this trigger the full (theta, phi) search
_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MeasurementBasis:
    """Bloch angles of a rank-1 projective measurement on qubit A.

    The measurement axis is n = (sin(theta)cos(phi), sin(theta)sin(phi),
    cos(theta)); the two projectors are (I +- n.sigma)/2.
    """

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta!r}")
        if not 0.0 <= self.phi < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2*pi), got {self.phi!r}")

    def projectors(self):
        """The pair (plus, minus) of 2x2 projectors along the axis."""
        n_dot_sigma = (
            math.sin(self.theta) * math.cos(self.phi) * PAULI_X
            + math.sin(self.theta) * math.sin(self.phi) * PAULI_Y
            + math.cos(self.theta) * PAULI_Z
        )
        eye = np.eye(2, dtype=complex)
        return 0.5 * (eye + n_dot_sigma), 0.5 * (eye - n_dot_sigma)


@dataclass(frozen=True)
class ConcurrenceResult:
    """Concurrence value plus the four descending square-root eigenvalues."""

    value: float
    sqrt_eigenvalues: tuple


@dataclass(frozen=True)
class DiscordResult:
    """Quantum discord with its entropy components and optimizer diagnostics."""

    value: float
    s_a: float
    s_ab: float
    min_conditional_entropy: float
    optimal_basis: MeasurementBasis
    evaluations: int


def _check_state(rho):
    rho = check_hermitian(rho)
    tr = float(rho.trace().real)
    if abs(tr - 1.0) > _STATE_TRACE_TOL:
        raise ValueError(f"state trace {tr!r} is not 1 within {_STATE_TRACE_TOL:.0e}")
    return rho


def spin_flip(rho):
    """(sigma_y x sigma_y) . conj(rho) . (sigma_y x sigma_y)."""
    rho = np.asarray(rho, dtype=complex)
    return SPIN_FLIP_KERNEL @ rho.conj() @ SPIN_FLIP_KERNEL


def _is_thin_x(rho):
    """True when only the diagonal and the (1,2)/(2,1) coherence are populated."""
    mask = np.ones((4, 4), dtype=bool)
    mask[np.diag_indices(4)] = False
    mask[1, 2] = mask[2, 1] = False
    return bool(np.abs(rho[mask]).max() < _X_PATTERN_TOL)


def _sqrt_psd(rho):
    lam, vecs = hermitian_eigensystem(rho)
    if float(lam.min()) < -EIG_CLAMP:
        raise NotAStateError(f"state eigenvalue {float(lam.min()):.3e} is negative")
    return (vecs * np.sqrt(np.clip(lam, 0.0, None))) @ vecs.conj().T


def _flip_eigenvalues_xform(rho):
    """Eigenvalues of rho * spin_flip(rho) for a thin-X matrix, in closed form:
    {a11*a44 (twice), (sqrt(a22*a33) +- |a23|)^2}."""
    d = rho.diagonal().real
    if float(d.min()) < -EIG_CLAMP:
        raise NotAStateError(f"diagonal entry {float(d.min()):.3e} is negative")
    d = np.clip(d, 0.0, None)
    corner = d[0] * d[3]
    central = math.sqrt(d[1] * d[2])
    coh = abs(rho[1, 2])
    return np.array([corner, corner, (central + coh) ** 2, (central - coh) ** 2])


def _flip_eigenvalues_general(rho):
    """Eigenvalues of rho * spin_flip(rho) for any state, through the Jacobi
    solver on the Hermitian similarity form sqrt(rho).flip(rho).sqrt(rho).

    The product is normalized to unit max-entry before eigensolving (and the
    eigenvalues scaled back), so near-separable states whose product norm
    sits below the solver's absolute off-diagonal cutoff still resolve.
    """
    root = _sqrt_psd(rho)
    sym = root @ spin_flip(rho) @ root
    sym = 0.5 * (sym + sym.conj().T)
    scale = float(np.abs(sym).max())
    if scale == 0.0:
        return np.zeros(4)
    lam = hermitian_eigenvalues(sym / scale) * scale
    if float(lam.min()) < -EIG_CLAMP:
        raise NotAStateError(
            f"eigenvalue {float(lam.min()):.3e} of rho*rho_flip is negative"
        )
    return np.clip(lam, 0.0, None)


def concurrence(rho):
    """Concurrence of a two-qubit state: max(0, p - q - r - s).

    p >= q >= r >= s are the square roots of the eigenvalues of
    rho . spin_flip(rho). States whose only off-diagonal entries sit at
    (1,2)/(2,1) get those eigenvalues in closed form from the block
    structure; everything else goes through the Hermitian similarity
    form sqrt(rho) . spin_flip(rho) . sqrt(rho) and the Jacobi solver.
    The two routes agree to 1e-10 (pinned by tests).
    """
    rho = _check_state(rho)
    if _is_thin_x(rho):
        lam = _flip_eigenvalues_xform(rho)
    else:
        lam = _flip_eigenvalues_general(rho)
    roots = tuple(sorted((float(math.sqrt(v)) for v in lam), reverse=True))
    value = max(0.0, roots[0] - roots[1] - roots[2] - roots[3])
    return ConcurrenceResult(value=value, sqrt_eigenvalues=roots)


def concurrence_xstate(state):
    """Closed-form concurrence 2 * max(0, |a23| - sqrt(a11*a44)) of an X state."""
    return 2.0 * max(0.0, abs(state.a23) - math.sqrt(max(state.a11 * state.a44, 0.0)))


def measure_conditional_states(rho, basis):
    """Outcome probabilities and conditional states of B for a measurement on A.

    Returns [(p_plus, rho_B_plus), (p_minus, rho_B_minus)]. Branches with
    probability below 1e-14 carry the maximally mixed placeholder and are
    meant to contribute nothing to entropy averages.
    """
    rho = _check_state(rho)
    eye = np.eye(2, dtype=complex)
    out = []
    for proj in basis.projectors():
        big = np.kron(proj, eye)
        reduced = big @ rho @ big
        p = float(reduced.trace().real)
        if p < _BRANCH_EPS:
            out.append((p, eye / 2.0))
        else:
            out.append((p, partial_trace(reduced, "B") / p))
    return out


def _avg_conditional_entropy(rho, thetas, phi):
    """Average post-measurement entropy of B over a vector of polar angles.

    Works on the 2x2 A-blocks of rho directly; the unnormalized conditional
    state for outcome +- is sum_{kl} P[l,k] * block[k,l], whose two
    eigenvalues come from trace and determinant. Equivalent to running
    measure_conditional_states + von_neumann_entropy per angle, but
    vectorized (that equivalence is pinned by tests).
    """
    blocks = rho.reshape(2, 2, 2, 2)
    r00, r01 = blocks[0, :, 0, :], blocks[0, :, 1, :]
    r10, r11 = blocks[1, :, 0, :], blocks[1, :, 1, :]

    half = 0.5 * np.asarray(thetas, dtype=float)
    c2 = np.cos(half) ** 2
    s2 = np.sin(half) ** 2
    cs = np.cos(half) * np.sin(half)
    eph = complex(math.cos(phi), math.sin(phi))

    def branch(p00, p01, p10, p11):
        tau = (
            p00[:, None, None] * r00
            + p10[:, None, None] * r01
            + p01[:, None, None] * r10
            + p11[:, None, None] * r11
        )
        w = tau[:, 0, 0].real + tau[:, 1, 1].real
        det = (tau[:, 0, 0] * tau[:, 1, 1] - tau[:, 0, 1] * tau[:, 1, 0]).real
        disc = np.sqrt(np.clip(w * w - 4.0 * det, 0.0, None))
        lam = np.stack(((w + disc) / 2.0, (w - disc) / 2.0), axis=-1)
        lam = np.clip(lam, 0.0, None)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(lam > 0.0, -lam * np.log2(lam / w[:, None]), 0.0)
        return np.where(w[:, None] > _BRANCH_EPS, terms, 0.0).sum(axis=-1)

    plus = branch(c2, cs * np.conj(eph), cs * eph, s2)
    minus = branch(s2, -cs * np.conj(eph), -cs * eph, c2)
    return plus + minus


def _golden_section(f, a, b, tol):
    """Deterministic golden-section minimization of f on [a, b].

    Returns (best value seen, its abscissa, number of evaluations); ties go
    to the smaller abscissa.
    """
    evals = 0
    best = (math.inf, a)
    c = b - _INV_GOLDEN * (b - a)
    d = a + _INV_GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    evals += 2
    best = min(best, (fc, c), (fd, d))
    while (b - a) > tol and evals < 400:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_GOLDEN * (b - a)
            fc = f(c)
            evals += 1
            if fc < best[0] or (fc == best[0] and c < best[1]):
                best = (fc, c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_GOLDEN * (b - a)
            fd = f(d)
            evals += 1
            if fd < best[0] or (fd == best[0] and d < best[1]):
                best = (fd, d)
    return best[0], best[1], evals


def min_conditional_entropy(rho, grid_n=181, tol=1e-9):
    """Minimize the average conditional entropy of B over measurement bases.

    Scans grid_n polar angles over [0, pi/2] (at phi = 0 for real states;
    with an additional phi grid over [0, pi) when the state carries complex
    coherences), then refines around the best grid point by golden-section
    search down to bracket width < tol. Deterministic; ties break toward
    smaller theta, then smaller phi.

    Returns (minimum entropy in bits, MeasurementBasis, evaluation count).
    """
    if grid_n < 2:
        raise ValueError(f"grid_n must be >= 2, got {grid_n!r}")
    if tol <= 0.0:
        raise ValueError(f"tol must be > 0, got {tol!r}")
    rho = _check_state(rho)

    complex_coherences = bool(np.abs(rho.imag).max() > _IMAG_TOL)
    thetas = np.linspace(0.0, math.pi / 2.0, grid_n)
    step = thetas[1] - thetas[0]
    phis = (
        np.linspace(0.0, math.pi, grid_n, endpoint=False)
        if complex_coherences
        else np.array([0.0])
    )

    evals = 0
    best_val, best_theta, best_phi = math.inf, 0.0, 0.0
    for phi in phis:
        values = _avg_conditional_entropy(rho, thetas, phi)
        evals += grid_n
        i = int(np.argmin(values))  # first occurrence == smallest theta
        if values[i] < best_val:
            best_val, best_theta, best_phi = float(values[i]), float(thetas[i]), float(phi)

    lo = max(0.0, best_theta - step)
    hi = min(math.pi / 2.0, best_theta + step)
    val, theta, n = _golden_section(
        lambda t: float(_avg_conditional_entropy(rho, np.array([t]), best_phi)[0]),
        lo,
        hi,
        tol,
    )
    evals += n
    if val < best_val or (val == best_val and theta < best_theta):
        best_val, best_theta = val, theta

    if complex_coherences:
        phi_step = math.pi / grid_n
        val, phi, n = _golden_section(
            lambda p: float(
                _avg_conditional_entropy(rho, np.array([best_theta]), p)[0]
            ),
            max(0.0, best_phi - phi_step),
            min(math.pi, best_phi + phi_step),
            tol,
        )
        evals += n
        if val < best_val or (val == best_val and phi < best_phi):
            best_val, best_phi = val, phi

    return best_val, MeasurementBasis(theta=best_theta, phi=best_phi), evals


def quantum_discord(rho, grid_n=181, tol=1e-9):
    """Quantum discord S(A) - S(AB) + min conditional entropy, in bits.

    Results in [-1e-9, 0) are rounding residue from the optimizer and are
    clamped to 0.
    """
    rho = _check_state(rho)
    s_ab = von_neumann_entropy(rho)
    s_a = von_neumann_entropy(partial_trace(rho, "A"))
    mce, basis, evals = min_conditional_entropy(rho, grid_n=grid_n, tol=tol)
    value = s_a - s_ab + mce
    if -1e-9 <= value < 0.0:
        value = 0.0
    return DiscordResult(
        value=value,
        s_a=s_a,
        s_ab=s_ab,
        min_conditional_entropy=mce,
        optimal_basis=basis,
        evaluations=evals,
    )


def _h2(p):
    total = 0.0
    for x in (p, 1.0 - p):
        if x > 0.0:
            total -= x * math.log2(x)
    return total


def discord_bell_diagonal_oracle(state):
    """Closed-form discord of a Bell-diagonal X state (requires a11 == a44).

    Independent of the numeric minimizer: the correlation coefficients are
    c1 = c2 = 2*a23 and c3 = 4*a11 - 1, and the minimal conditional entropy
    is the binary entropy of (1 + max|c_i|)/2.
    """
    if abs(state.a11 - state.a44) > 1e-12:
        raise ValueError(
            f"oracle needs a Bell-diagonal state (a11 == a44), "
            f"got a11={state.a11!r}, a44={state.a44!r}"
        )
    c = max(abs(2.0 * state.a23), abs(4.0 * state.a11 - 1.0))
    s_a = _h2(state.a11 + state.a22)
    s_ab = 0.0
    for lam in (
        state.a11,
        state.a44,
        state.a22 + abs(state.a23),
        state.a22 - abs(state.a23),
    ):
        if lam > 0.0:
            s_ab -= lam * math.log2(lam)
    return s_a - s_ab + _h2((1.0 + c) / 2.0)


def mutual_information(rho):
    """Total correlations S(A) + S(B) - S(AB) in bits, clamped at >= 0."""
    rho = _check_state(rho)
    s_ab = von_neumann_entropy(rho)
    s_a = von_neumann_entropy(partial_trace(rho, "A"))
    s_b = von_neumann_entropy(partial_trace(rho, "B"))
    return max(0.0, s_a + s_b - s_ab)
