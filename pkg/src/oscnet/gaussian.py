"""Entanglement entropy engines for Gaussian ground states.

The ground state of H = (1/2)(p^T p + x^T V x) with V positive definite is
the Gaussian psi(x) ~ exp(-x^T V x / 2).  Tracing out one side of a
bipartition leaves a mixed Gaussian state whose entropy this module computes
two independent ways:

* gamma_spectrum / entropy_of_bipartition: whiten the two diagonal blocks of
  V and take singular values gamma_i of the rescaled cross-coupling; each
  gamma maps to a thermal mode parameter nu = 1/sqrt(1 - gamma^2).

* entropy_oracle_symplectic: reduce the ground-state covariance matrices
  (positions V^{-1}/2, momenta V/2) to one side and read off the symplectic
  eigenvalues of the reduced state.

Both must agree to near machine precision on any positive definite V; the
oracle is the slower, assumption-free reference path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConsistencyError,
    DefinitenessError,
    DomainError,
    EliminationError,
    SingularityError,
)
from .graph import Bipartition, PotentialMatrix

# Eigenvalues at or below this count as zero when a positive definite matrix
# is required (inversions, matrix square roots).
EIG_FLOOR = 1e-12
# Coupling ratios below this are exact zero modes (nu = 1, no entropy).
GAMMA_ZERO = 1e-12
# Coupling ratios within this of 1 describe a non-normalizable mode.
GAMMA_CEILING = 1.0 - 1e-12
# Symplectic eigenvalues may dip below 1 by at most this before we call the
# computation inconsistent; smaller dips are clamped to exactly 1.
NU_SLACK = 1e-10


def _norm_log_base(log_base) -> str:
    """Normalize a log-base argument to "2" or "e"."""
    if log_base in (2, 2.0, "2"):
        return "2"
    if log_base == "e" or (isinstance(log_base, float) and log_base == math.e):
        return "e"
    raise ValueError("log base must be 2 or 'e', got %r" % (log_base,))


def _log(base: str, value: float) -> float:
    return math.log2(value) if base == "2" else math.log(value)


def _as_matrix(v) -> np.ndarray:
    """Accept a PotentialMatrix or a symmetric 2-d array."""
    if isinstance(v, PotentialMatrix):
        return v.matrix
    m = np.asarray(v, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("expected a square matrix")
    if not np.allclose(m, m.T, rtol=0.0, atol=1e-10):
        raise ValueError("matrix must be symmetric")
    return m


def _eigh_pd(m: np.ndarray, what: str):
    """Eigendecomposition of a matrix that must be positive definite."""
    w, u = np.linalg.eigh(m)
    if w.min() <= EIG_FLOOR:
        raise DefinitenessError(
            "%s has eigenvalue %.3e at or below the %g floor"
            % (what, w.min(), EIG_FLOOR)
        )
    return w, u


def _inv_sqrt(m: np.ndarray, what: str) -> np.ndarray:
    w, u = _eigh_pd(m, what)
    return (u / np.sqrt(w)) @ u.T


def nu_from_gamma(gamma: float) -> float:
    """Thermal mode parameter nu = 1/sqrt(1 - gamma^2).

    gamma enters squared, so its sign is irrelevant.  |gamma| within 1e-12
    of 1 (or beyond) is rejected: the corresponding mode has divergent
    entropy and no normalizable reduced state.
    """
    g = abs(float(gamma))
    if g >= GAMMA_CEILING:
        raise SingularityError(
            "coupling ratio %.17g is at or beyond the normalizable range" % g
        )
    return 1.0 / math.sqrt((1.0 - g) * (1.0 + g))


def entropy_from_nu(nu: float, log_base=2) -> float:
    """Entropy of one thermal mode with symplectic eigenvalue nu.

    S(nu) = ((nu+1)/2) log((nu+1)/2) - ((nu-1)/2) log((nu-1)/2), which is 0
    at nu = 1.  Values of nu below 1 by more than 1e-10 are rejected;
    smaller dips are treated as exactly 1.
    """
    base = _norm_log_base(log_base)
    nu = float(nu)
    if nu < 1.0 - NU_SLACK:
        raise DomainError("symplectic eigenvalue %.17g is below 1" % nu)
    if nu <= 1.0:
        return 0.0
    up = (nu + 1.0) / 2.0
    dn = (nu - 1.0) / 2.0
    return up * _log(base, up) - dn * _log(base, dn)


@dataclass(frozen=True)
class Mode:
    """One entanglement mode: coupling ratio, thermal parameter, degeneracy."""

    gamma: float
    nu: float
    degeneracy: int = 1

    def __post_init__(self):
        if not isinstance(self.degeneracy, int) or self.degeneracy < 1:
            raise ValueError("degeneracy must be a positive integer")
        if self.gamma < 0.0:
            raise ValueError("gamma is reported as a non-negative ratio")
        if self.nu < 1.0:
            raise ValueError("nu must be at least 1")


@dataclass(frozen=True)
class ModeSpectrum:
    """A multiset of entanglement modes with a fixed entropy log base."""

    modes: tuple
    log_base: str = "2"

    def __post_init__(self):
        object.__setattr__(self, "modes", tuple(self.modes))
        object.__setattr__(self, "log_base", _norm_log_base(self.log_base))

    def mode_count(self) -> int:
        """Total number of modes, degeneracies included."""
        return sum(m.degeneracy for m in self.modes)

    def expanded_gammas(self) -> np.ndarray:
        """All gamma values repeated by degeneracy, sorted descending."""
        out = []
        for m in self.modes:
            out.extend([m.gamma] * m.degeneracy)
        return np.sort(np.array(out))[::-1]

    def total_entropy(self) -> float:
        """Sum of degeneracy * S(nu) over all modes."""
        return float(
            sum(
                m.degeneracy * entropy_from_nu(m.nu, self.log_base)
                for m in self.modes
            )
        )


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Truncated Schmidt decomposition of one thermal mode.

    probabilities[n] = (2/(nu+1)) ((nu-1)/(nu+1))^n for n = 0..n_max and
    lambdas are their square roots.  tail_mass is the probability weight
    beyond n_max, computed in closed form.
    """

    nu: float
    n_max: int
    lambdas: np.ndarray
    probabilities: np.ndarray
    tail_mass: float

    def mean_occupation(self) -> float:
        """Sum of n * p_n over the stored distribution.

        Converges to (nu - 1)/2 as n_max grows.
        """
        n = np.arange(self.n_max + 1)
        return float(np.sum(n * self.probabilities))


def schmidt_spectrum(nu: float, n_max: int) -> SchmidtSpectrum:
    """Schmidt coefficients of one mode up to occupation number n_max."""
    if not isinstance(n_max, int) or n_max < 1:
        raise ValueError("n_max must be a positive integer")
    nu = float(nu)
    if nu < 1.0 - NU_SLACK:
        raise DomainError("symplectic eigenvalue %.17g is below 1" % nu)
    nu = max(nu, 1.0)
    t = (nu - 1.0) / (nu + 1.0)
    n = np.arange(n_max + 1)
    probabilities = (2.0 / (nu + 1.0)) * t ** n
    lambdas = np.sqrt(probabilities)
    tail = t ** (n_max + 1)
    lambdas.setflags(write=False)
    probabilities.setflags(write=False)
    return SchmidtSpectrum(nu, n_max, lambdas, probabilities, float(tail))


def schur_eliminate(v, block) -> np.ndarray:
    """Eliminate an index block from a symmetric matrix by Schur complement.

    The remaining indices keep their positions: their sub-matrix becomes
    V[r,r] - V[r,e] V[e,e]^{-1} V[e,r], all couplings to the eliminated
    block are zeroed, and the eliminated diagonal entries are kept (their
    off-diagonal couplings dropped) so the matrix shape never changes.  For
    a ground-state potential this is exact marginalization: modes of the
    eliminated block decouple and carry no entanglement.
    """
    m = _as_matrix(v).copy()
    n = m.shape[0]
    e = sorted(set(int(i) for i in block))
    if not e:
        raise ValueError("elimination block must be non-empty")
    if e[0] < 0 or e[-1] >= n:
        raise ValueError("elimination block index out of range")
    if len(e) >= n:
        raise ValueError("elimination block must be a proper subset")
    r = [i for i in range(n) if i not in set(e)]
    vee = m[np.ix_(e, e)]
    w = np.linalg.eigvalsh(vee)
    if np.abs(w).min() <= EIG_FLOOR * max(1.0, np.abs(w).max()):
        raise EliminationError(
            "eliminated block is singular (|eigenvalue| min %.3e)" % np.abs(w).min()
        )
    ver = m[np.ix_(e, r)]
    update = ver.T @ np.linalg.solve(vee, ver)
    out = np.zeros_like(m)
    rr = m[np.ix_(r, r)] - update
    rr = (rr + rr.T) / 2.0
    out[np.ix_(r, r)] = rr
    out[e, e] = np.diag(vee)
    return out


def gamma_spectrum(v, cut: Bipartition, log_base=2) -> ModeSpectrum:
    """Coupling-ratio spectrum of a bipartition of the ground state.

    Whitens both diagonal blocks of V and takes the singular values of
    W_A V_AB W_B with W = block^{-1/2}; each singular value gamma < 1 is one
    entanglement mode.  min(|A|, |B|) modes are returned, sorted by
    descending gamma; ratios below 1e-12 count as exact zero modes.
    """
    base = _norm_log_base(log_base)
    m = _as_matrix(v)
    if cut.n != m.shape[0]:
        raise ValueError("bipartition size does not match matrix")
    a = list(cut.side_a)
    b = list(cut.side_b)
    wa = _inv_sqrt(m[np.ix_(a, a)], "side A block")
    wb = _inv_sqrt(m[np.ix_(b, b)], "side B block")
    coupling = wa @ m[np.ix_(a, b)] @ wb
    sigma = np.linalg.svd(coupling, compute_uv=False)
    if sigma.size and sigma[0] >= 1.0:
        raise DefinitenessError(
            "whitened coupling has singular value %.17g >= 1; "
            "the matrix is not positive definite" % sigma[0]
        )
    modes = []
    for s in sigma:
        gamma = float(s)
        if gamma < GAMMA_ZERO:
            modes.append(Mode(gamma=gamma, nu=1.0))
        else:
            modes.append(Mode(gamma=gamma, nu=nu_from_gamma(gamma)))
    return ModeSpectrum(tuple(modes), log_base=base)


def entropy_of_bipartition(v, cut: Bipartition, log_base=2) -> float:
    """Entanglement entropy across a cut via the whitened-coupling engine."""
    return gamma_spectrum(v, cut, log_base=log_base).total_entropy()


def _position_covariance(m: np.ndarray) -> np.ndarray:
    """Ground-state position covariance V^{-1}/2 of psi ~ exp(-x^T V x / 2)."""
    w, u = _eigh_pd(m, "potential matrix")
    return (u / w) @ u.T / 2.0


def _symplectic_nus(x_cov: np.ndarray, p_cov: np.ndarray, subset) -> np.ndarray:
    """Symplectic eigenvalues of the state restricted to subset.

    Computes sqrt(eig(4 X_A P_A)) through the symmetrized product
    sqrt(X_A) (4 P_A) sqrt(X_A), which is similar to 4 X_A P_A but
    manifestly symmetric.  Values below 1 by more than NU_SLACK raise;
    smaller dips clamp to 1.
    """
    idx = np.ix_(subset, subset)
    xa = x_cov[idx]
    pa = p_cov[idx]
    w, u = _eigh_pd(xa, "reduced position covariance")
    root = (u * np.sqrt(w)) @ u.T
    nus_sq = np.linalg.eigvalsh(root @ (4.0 * pa) @ root)
    nus = np.sqrt(np.maximum(nus_sq, 0.0))
    if nus.min() < 1.0 - NU_SLACK:
        raise ConsistencyError(
            "symplectic eigenvalue %.17g fell below 1 by more than %g"
            % (nus.min(), NU_SLACK)
        )
    return np.maximum(nus, 1.0)


def _entropy_from_cov(
    x_cov: np.ndarray, p_cov: np.ndarray, subset, base: str
) -> float:
    nus = _symplectic_nus(x_cov, p_cov, subset)
    return float(sum(entropy_from_nu(nu, base) for nu in nus))


def entropy_oracle_symplectic(v, subset, log_base=2) -> float:
    """Reference entropy of the ground state reduced to an index subset.

    Builds the full position covariance V^{-1}/2 and momentum covariance
    V/2, restricts both to the subset, and sums S(nu) over the symplectic
    eigenvalues nu = sqrt(eig(4 X_A P_A)).  Slower than the whitened engine
    but assumption-free: it never touches the complement's block structure,
    which makes it the independent check.
    """
    base = _norm_log_base(log_base)
    m = _as_matrix(v)
    n = m.shape[0]
    idx = sorted(set(int(i) for i in subset))
    if not idx:
        raise ValueError("subset must be non-empty")
    if idx[0] < 0 or idx[-1] >= n:
        raise ValueError("subset index out of range")
    if len(idx) >= n:
        raise ValueError("subset must be a proper subset of the indices")
    x_cov = _position_covariance(m)
    return _entropy_from_cov(x_cov, m / 2.0, idx, base)
