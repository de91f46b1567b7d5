"""Exchange coupling, Hamiltonian conventions and thermal-state construction.

The pair of spins interacts through an isotropic (XXX) Heisenberg term whose
strength J(R) follows the Herring-Flicker law for two electrons a distance R
apart, plus a uniform magnetic field B along z. Temperature enters only
through the product KT.

Two thermal-state constructions are provided. ``thermal_state_paper`` fills
in the closed-form X-matrix elements used throughout this model family and
is the default everywhere downstream. ``thermal_state_gibbs`` builds the
textbook Gibbs state exp(-H/KT)/Z from an explicit Hamiltonian. The two do
NOT agree whenever J > 0 -- the closed-form matrix weights the two central
levels differently from any Gibbs state -- and keeping both makes that
divergence testable instead of silent.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .linalg import PAULI_X, PAULI_Y, PAULI_Z, hermitian_eigensystem

HF_PREFACTOR = 1.642

_I2 = np.eye(2, dtype=complex)
EXCHANGE = (
    np.kron(PAULI_X, PAULI_X) + np.kron(PAULI_Y, PAULI_Y) + np.kron(PAULI_Z, PAULI_Z)
)
FIELD = np.kron(PAULI_Z, _I2) + np.kron(_I2, PAULI_Z)
EXCHANGE.setflags(write=False)
FIELD.setflags(write=False)


class Convention(str, Enum):
    """How the Hamiltonian distributes J(R) and B over its terms.

    RECONCILED: H = (J/2)(sx sx + sy sy + sz sz) + (B/2)(sz1 + sz2), the
    unique standard form whose Gibbs weights reproduce the exponents of the
    closed-form thermal matrix.

    SCALED_FIELD ("eq3" on the command line): the field term rides inside
    the overall coupling prefactor, H = J * [sx sx + sy sy + sz sz
    + B(sz1 + sz2)]. Kept so the mismatch with the closed-form matrix is
    demonstrable; not used by default.
    """

    RECONCILED = "reconciled"
    SCALED_FIELD = "eq3"


def _coerce_convention(convention):
    if isinstance(convention, Convention):
        return convention
    if convention == "eq3-as-printed":  # long-form spelling of the same tag
        return Convention.SCALED_FIELD
    try:
        return Convention(convention)
    except ValueError:
        raise ValueError(
            f"unknown convention {convention!r}; expected 'reconciled' or 'eq3'"
        ) from None


@dataclass(frozen=True)
class ModelParams:
    """One physical configuration: coupling distance R, field B, temperature KT."""

    r: float
    b: float
    kt: float

    def __post_init__(self):
        for name in ("r", "b", "kt"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite, got {getattr(self, name)!r}")
        if self.r < 0.0:
            raise ValueError(f"coupling distance r must be >= 0, got {self.r!r}")
        if self.kt <= 0.0:
            raise ValueError(f"temperature kt must be > 0, got {self.kt!r}")


def hf_coupling(r):
    """Herring-Flicker exchange strength J(R) = 1.642 * exp(-2R) * R^(5/2).

    Single-peaked on R >= 0 with its maximum at R = 1.25; the subleading
    O(R^2 exp(-2R)) correction is not included.
    """
    if not math.isfinite(r):
        raise ValueError(f"coupling distance must be finite, got {r!r}")
    if r < 0.0:
        raise ValueError(f"coupling distance must be >= 0, got {r!r}")
    return HF_PREFACTOR * math.exp(-2.0 * r) * r ** 2.5


def build_hamiltonian(params, convention=Convention.RECONCILED):
    """4x4 Hamiltonian of the pair under the given convention."""
    convention = _coerce_convention(convention)
    j = hf_coupling(params.r)
    if convention is Convention.SCALED_FIELD:
        return j * (EXCHANGE + params.b * FIELD)
    return 0.5 * j * EXCHANGE + 0.5 * params.b * FIELD


@dataclass(frozen=True)
class ThermalStateX:
    """The five real entries of the X-form thermal matrix.

    Layout (row-major, 0-based): a11 at (0,0), a22 at (1,1), a33 at (2,2),
    a44 at (3,3) and the single coherence a23 at (1,2)/(2,1). For every
    state produced here a22 == a33 by construction.
    """

    a11: float
    a22: float
    a23: float
    a33: float
    a44: float

    def __post_init__(self):
        total = self.a11 + self.a22 + self.a33 + self.a44
        if abs(total - 1.0) > 1e-12:
            raise ValueError(f"diagonal must sum to 1 within 1e-12, got {total!r}")
        if self.a11 < -1e-12 or self.a44 < -1e-12:
            raise ValueError("corner populations must be nonnegative")
        if self.a22 + 1e-12 < abs(self.a23) or self.a33 + 1e-12 < abs(self.a23):
            raise ValueError("central coherence exceeds populations: not positive")


def thermal_state_paper(params):
    """Closed-form thermal X-matrix elements at (R, B, KT).

    All four Boltzmann exponents are shifted by their maximum before
    exponentiating, so sweeps down to KT ~ 0.01 stay finite; the shift
    cancels exactly in every ratio.
    """
    j = hf_coupling(params.r)
    kt2 = 2.0 * params.kt
    exps = np.array(
        [
            -(j - 2.0 * params.b) / kt2,  # |11> corner weight
            -(j + 2.0 * params.b) / kt2,  # |00> corner weight
            -j / kt2,                     # central triplet weight
            3.0 * j / kt2,                # singlet weight
        ]
    )
    w11, w00, wt, ws = np.exp(exps - exps.max())
    z = w11 + w00 + 2.0 * wt + 2.0 * ws
    a22 = (wt + ws) / z
    return ThermalStateX(
        a11=w00 / z,
        a22=a22,
        a23=(wt - ws) / z,
        a33=a22,
        a44=w11 / z,
    )


def to_matrix(state):
    """Embed a ThermalStateX into its dense 4x4 complex matrix."""
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = state.a11
    m[1, 1] = state.a22
    m[2, 2] = state.a33
    m[3, 3] = state.a44
    m[1, 2] = state.a23
    m[2, 1] = state.a23
    return m


def thermal_state_gibbs(params, convention=Convention.RECONCILED):
    """Exact Gibbs state exp(-H/KT)/Tr exp(-H/KT) via eigendecomposition.

    Provided as a cross-check against the closed-form construction; the two
    disagree whenever J(R) > 0.
    """
    h = build_hamiltonian(params, convention)
    lam, vecs = hermitian_eigensystem(h)
    # shift by the ground energy before exponentiating (overflow guard)
    w = np.exp(-(lam - lam.min()) / params.kt)
    rho = (vecs * w) @ vecs.conj().T / w.sum()
    return 0.5 * (rho + rho.conj().T)
