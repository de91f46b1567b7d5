"""scikit-learn adapter: map (R, B, KT) parameter rows to correlation features.

The transformer is stateless (fit only records the input width), so it can
sit in a Pipeline or be applied directly. Each input row is one thermal
point; each output row carries the coupling plus every quantity a sweep
record holds.
"""

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array

from .sweep import evaluate_point

FEATURE_NAMES = (
    "J",
    "concurrence",
    "discord",
    "s_ab",
    "s_a",
    "s_b",
    "mutual_information",
    "theta_opt",
)


class ThermalCorrelationTransformer(BaseEstimator, TransformerMixin):
    """Compute thermal two-qubit correlations for rows of (R, B, KT).

    Parameters
    ----------
    mode : str, default="paper"
        Thermal-state construction, "paper" (closed form) or "gibbs" (exact).
    convention : str, default="reconciled"
        Hamiltonian convention used in gibbs mode.
    grid_theta : int, default=181
        Coarse-grid resolution of the discord minimizer.
    tol : float, default=1e-9
        Refinement width of the discord minimizer.
    """

    def __init__(self, mode="paper", convention="reconciled", grid_theta=181,
                 tol=1e-9):
        self.mode = mode
        self.convention = convention
        self.grid_theta = grid_theta
        self.tol = tol

    def _validate(self, X):
        X = check_array(X, dtype=float, ensure_2d=True)
        if X.shape[1] != 3:
            raise ValueError(
                f"expected 3 columns (R, B, KT), got {X.shape[1]}"
            )
        if np.any(X[:, 0] < 0.0):
            raise ValueError("column 0 (R) must be >= 0")
        if np.any(X[:, 2] <= 0.0):
            raise ValueError("column 2 (KT) must be > 0")
        return X

    def fit(self, X, y=None):
        X = self._validate(X)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        X = self._validate(X)
        out = np.empty((X.shape[0], len(FEATURE_NAMES)), dtype=float)
        for i, (r, b, kt) in enumerate(X):
            rec = evaluate_point(
                r, b, kt,
                mode=self.mode,
                convention=self.convention,
                grid_theta=self.grid_theta,
                tol=self.tol,
            )
            out[i] = (rec.j, rec.concurrence, rec.discord, rec.s_ab,
                      rec.s_a, rec.s_b, rec.mutual_information, rec.theta_opt)
        return out

    def get_feature_names_out(self, input_features=None):
        return np.asarray(FEATURE_NAMES, dtype=object)
