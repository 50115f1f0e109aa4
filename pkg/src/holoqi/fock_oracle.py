"""Brute-force truncated Fock-space engine used to check the closed forms.

Nothing here knows about Gaussian formulas: states are explicit density
matrices, loss is a Kraus sum, additive noise is an average of displaced
states over a 2D Gauss-Hermite grid. Fidelity and trace distance come from
spectral decompositions.

Quadrature: the noise average is

    sigma = int d^2a  exp(-|a|^2 / xi) / (pi xi)  D(a) rho D(a)^dag .

Every matrix element of D(a) carries a factor exp(-|a|^2 / 2), so
D rho D^dag = exp(-|a|^2) P(a) with P polynomial in Re a, Im a. The rule
therefore integrates P against exp(-(1 + 1/xi)|a|^2), which Gauss-Hermite
handles exactly once the order exceeds half the polynomial degree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import eval_genlaguerre, gammaln

from .errors import ConsistencyError, DomainError, TruncationError

__all__ = [
    "DensityOperator",
    "default_dim",
    "fock_state",
    "vacuum_state",
    "thermal_state",
    "tmsv_state",
    "reduced_state",
    "von_neumann_entropy_bits",
    "displacement_matrix",
    "apply_pure_loss",
    "apply_additive_noise",
    "uhlmann_fidelity",
    "trace_distance",
    "chernoff_pure",
    "quantum_chernoff",
    "random_density_matrix",
]

MAX_TWO_MODE_DIM = 60
CLAMP_THRESHOLD = 1e-9
CLAMP_INVALID = 1e-6
TRACE_ERROR_LIMIT = 1e-6
SUPPORT_CUTOFF = 1e-12


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Truncated density matrix on ``n_modes`` modes of ``dim`` levels each.

    ``tail_mass`` is the probability lost above the truncation (accumulated
    over operations) before renormalization. ``clamped_mass`` is the total
    weight of negative eigenvalues set to zero. ``factor``, when present, is
    a matrix A with ``matrix == A A^dag``; it spares an eigendecomposition.
    """

    matrix: np.ndarray
    dim: int
    n_modes: int
    tail_mass: float = 0.0
    clamped_mass: float = 0.0
    factor: np.ndarray | None = field(default=None, repr=False)

    @property
    def valid(self) -> bool:
        return self.clamped_mass <= CLAMP_INVALID

    def __post_init__(self):
        if self.n_modes not in (1, 2):
            raise DomainError("only one- and two-mode states are supported")
        if self.dim < 1:
            raise DomainError("dim must be positive")
        if self.n_modes == 2 and self.dim > MAX_TWO_MODE_DIM:
            raise DomainError(f"two-mode truncation capped at {MAX_TWO_MODE_DIM}")
        n = self.dim**self.n_modes
        if self.matrix.shape != (n, n):
            raise DomainError(f"matrix shape {self.matrix.shape} does not match dim^n_modes = {n}")

    def eigh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.linalg.eigh(self.matrix)

    def element(self, *levels: int) -> complex:
        """Diagonal element <levels|rho|levels>."""
        idx = int(np.ravel_multi_index(levels, (self.dim,) * self.n_modes))
        return self.matrix[idx, idx].real

    def is_pure(self, tol: float = 1e-8) -> bool:
        return np.linalg.eigvalsh(self.matrix)[-1] > 1.0 - tol


def _finalize(matrix: np.ndarray, dim: int, n_modes: int, tail_in: float = 0.0,
              clamped_in: float = 0.0, factor: np.ndarray | None = None) -> DensityOperator:
    """Hermiticity check, eigenvalue clamping, renormalization.

    With ``factor`` (matrix == factor factor^dag) positivity holds by
    construction and the eigendecomposition is skipped.
    """
    if factor is not None:
        trace = float(np.vdot(factor, factor).real)
        if trace <= 0:
            raise ConsistencyError("operator has no positive weight")
        tail = 1.0 - (1.0 - tail_in) * trace
        return DensityOperator(matrix / trace, dim, n_modes, max(tail, 0.0), clamped_in,
                               factor / math.sqrt(trace))
    scale = max(1.0, float(np.abs(matrix).max()))
    if np.abs(matrix - matrix.conj().T).max() > 1e-10 * scale:
        raise ConsistencyError("operator is not Hermitian")
    matrix = 0.5 * (matrix + matrix.conj().T)
    w, v = np.linalg.eigh(matrix)
    neg = w < 0
    clamped = float(-w[neg].sum())
    if clamped > 0:
        w = np.where(neg, 0.0, w)
        matrix = (v * w) @ v.conj().T
    trace = float(w.sum())
    if trace <= 0:
        raise ConsistencyError("operator has no positive weight")
    tail = 1.0 - (1.0 - tail_in) * trace
    return DensityOperator(matrix / trace, dim, n_modes, max(tail, 0.0), clamped_in + clamped)


def default_dim(nbar: float) -> int:
    return max(20, math.ceil(10.0 * (nbar + 1.0)))


def fock_state(n: int, dim: int) -> DensityOperator:
    if not 0 <= n < dim:
        raise DomainError("Fock level outside truncation")
    m = np.zeros((dim, dim), dtype=complex)
    m[n, n] = 1.0
    return DensityOperator(m, dim, 1, factor=m[:, n : n + 1].copy())


def vacuum_state(dim: int, n_modes: int = 1) -> DensityOperator:
    m = np.zeros((dim**n_modes,) * 2, dtype=complex)
    m[0, 0] = 1.0
    return DensityOperator(m, dim, n_modes, factor=m[:, :1].copy())


def _geometric_weights(nbar: float, dim: int) -> tuple[np.ndarray, float]:
    """Bose-Einstein populations truncated at ``dim`` and the discarded tail."""
    if nbar == 0:
        p = np.zeros(dim)
        p[0] = 1.0
        return p, 0.0
    ratio = nbar / (1.0 + nbar)
    n = np.arange(dim)
    p = np.exp(n * math.log(ratio)) / (1.0 + nbar)
    return p, ratio**dim


def thermal_state(nbar: float, dim: int) -> DensityOperator:
    if nbar < 0:
        raise DomainError("nbar must be non-negative")
    p, tail = _geometric_weights(nbar, dim)
    return DensityOperator(np.diag(p / p.sum()).astype(complex), dim, 1, tail)


def tmsv_state(mu: float, dim: int) -> DensityOperator:
    """Pure two-mode squeezed vacuum sum_n c_n |n, n>, c_n ~ tanh(r)^n, cosh 2r = 2 mu."""
    if not mu >= 0.5:
        raise DomainError(f"mu must be at least 1/2, got {mu!r}")
    if dim < 2:
        raise DomainError("dim must be at least 2")
    p, tail = _geometric_weights(mu - 0.5, dim)
    psi = np.zeros(dim * dim, dtype=complex)
    psi[np.arange(dim) * (dim + 1)] = np.sqrt(p / p.sum())
    return DensityOperator(np.outer(psi, psi.conj()), dim, 2, tail, factor=psi[:, None])


def reduced_state(state: DensityOperator, keep: int) -> DensityOperator:
    if state.n_modes != 2 or keep not in (0, 1):
        raise DomainError("partial trace needs a two-mode state and keep in {0, 1}")
    d = state.dim
    t = state.matrix.reshape(d, d, d, d)
    m = np.einsum("ijkj->ik", t) if keep == 0 else np.einsum("ijil->jl", t)
    return DensityOperator(m, d, 1, state.tail_mass, state.clamped_mass)


def von_neumann_entropy_bits(state: DensityOperator) -> float:
    w = np.linalg.eigvalsh(state.matrix)
    w = w[w > 1e-300]
    return float(-(w * np.log2(w)).sum())


def displacement_matrix(alpha: complex, dim: int, scaled: bool = False) -> np.ndarray:
    """Truncated matrix <m|D(alpha)|n>; ``scaled`` drops the exp(-|alpha|^2/2) factor."""
    x = abs(alpha) ** 2
    m = np.arange(dim)[:, None]
    n = np.arange(dim)[None, :]
    lo = np.minimum(m, n)
    k = np.abs(m - n)
    lag = eval_genlaguerre(lo, k, x)
    norm = np.exp(0.5 * (gammaln(lo + 1) - gammaln(lo + k + 1)))
    power = np.where(m >= n, alpha ** k, (-np.conj(alpha)) ** k)
    d = norm * power * lag
    if not scaled:
        d = d * math.exp(-0.5 * x)
    return d


def _check_mode(state: DensityOperator, mode: int) -> None:
    if not 0 <= mode < state.n_modes:
        raise DomainError(f"mode {mode} out of range for a {state.n_modes}-mode state")


def _factor(state: DensityOperator) -> np.ndarray:
    """Columns v_k sqrt(p_k) with rho = sum_k p_k v_k v_k^dag (numerical rank only)."""
    if state.factor is not None:
        return state.factor
    w, v = state.eigh()
    keep = w > 1e-15 * w[-1]
    return v[:, keep] * np.sqrt(w[keep])


def _apply_local(op: np.ndarray, cols: np.ndarray, dim: int, n_modes: int, mode: int) -> np.ndarray:
    if n_modes == 1:
        return op @ cols
    r = cols.shape[1]
    t = cols.reshape(dim, dim, r)
    t = np.einsum("ai,ijr->ajr", op, t) if mode == 0 else np.einsum("bj,ijr->ibr", op, t)
    return t.reshape(dim * dim, r)


def _kraus_sum(state: DensityOperator, ops, mode: int) -> tuple[np.ndarray, np.ndarray | None]:
    """sum_j K_j rho K_j^dag for local operators K_j, plus a factor when it stays thin."""
    cols = _factor(state)
    n = cols.shape[0]
    keep_factor = len(ops) * cols.shape[1] <= 2 * n
    out = np.zeros_like(state.matrix)
    blocks, width = [], 0
    for op in ops:
        blocks.append(_apply_local(op, cols, state.dim, state.n_modes, mode))
        width += blocks[-1].shape[1]
        if not keep_factor and width >= n:
            w = np.hstack(blocks)
            out += w @ w.conj().T
            blocks, width = [], 0
    if not blocks:
        return out, None
    w = np.hstack(blocks)
    out += w @ w.conj().T
    return out, (w if keep_factor else None)


def loss_kraus(eta: float, dim: int) -> list[np.ndarray]:
    """Kraus operators of the pure-loss channel, A_k|n> = sqrt(C(n,k) eta^(n-k) (1-eta)^k) |n-k>."""
    if eta == 1.0:
        return [np.eye(dim)]
    ops = []
    n = np.arange(dim)
    for k in range(dim):
        a = np.zeros((dim, dim))
        src = n[k:]
        log_c = gammaln(src + 1) - gammaln(k + 1) - gammaln(src - k + 1)
        a[src - k, src] = np.exp(0.5 * (log_c + (src - k) * math.log(eta) + k * math.log1p(-eta)))
        ops.append(a)
    return ops


def apply_pure_loss(state: DensityOperator, eta: float, mode: int = 0) -> DensityOperator:
    """Beam splitter of transmissivity ``eta`` with a vacuum environment."""
    if not 0 < eta <= 1:
        raise DomainError(f"eta must lie in (0, 1], got {eta!r}")
    _check_mode(state, mode)
    out, fac = _kraus_sum(state, loss_kraus(eta, state.dim), mode)
    return _finalize(out, state.dim, state.n_modes, state.tail_mass, state.clamped_mass, fac)


def apply_additive_noise(state: DensityOperator, xi: float, mode: int = 0,
                         quad_order: int = 40) -> DensityOperator:
    """Gaussian random displacement adding ``xi`` to both quadrature variances."""
    if not xi > 0:
        raise DomainError(f"xi must be positive, got {xi!r}")
    if quad_order < 10:
        raise DomainError("quad_order must be at least 10")
    _check_mode(state, mode)
    t, w = np.polynomial.hermite.hermgauss(quad_order)
    c = 1.0 + 1.0 / xi
    nodes = t / math.sqrt(c)
    pref = 1.0 / (math.pi * xi * c)
    ops = []
    for i in range(quad_order):
        for j in range(quad_order):
            alpha = complex(nodes[i], nodes[j])
            ops.append(math.sqrt(pref * w[i] * w[j]) * displacement_matrix(alpha, state.dim, scaled=True))
    out, fac = _kraus_sum(state, ops, mode)
    trace = float(np.trace(out).real)
    err = abs(1.0 - trace)
    if err > TRACE_ERROR_LIMIT:
        # output occupation grows by xi on the noisy mode
        nbar = _mean_photons(state, mode) + xi
        raise TruncationError(
            f"trace error {err:.3g} exceeds {TRACE_ERROR_LIMIT:g} at dim={state.dim}",
            suggested_dim=max(2 * state.dim, default_dim(nbar)),
        )
    return _finalize(out, state.dim, state.n_modes, state.tail_mass, state.clamped_mass, fac)


def _mean_photons(state: DensityOperator, mode: int) -> float:
    n = np.arange(state.dim, dtype=float)
    if state.n_modes == 2:
        diag = np.diag(state.matrix).real.reshape(state.dim, state.dim)
        p = diag.sum(axis=1 - mode)
    else:
        p = np.diag(state.matrix).real
    return float(p @ n)


def _check_pair(rho: DensityOperator, sigma: DensityOperator) -> None:
    if rho.dim != sigma.dim or rho.n_modes != sigma.n_modes:
        raise DomainError("states have different truncation or mode count")


def uhlmann_fidelity(rho: DensityOperator, sigma: DensityOperator) -> float:
    """Square-root fidelity ||sqrt(rho) sqrt(sigma)||_1.

    With rho = A A^dag, sqrt(rho) sigma sqrt(rho) and A^dag sigma A share
    their nonzero spectrum, so F = sum sqrt(eig(A^dag sigma A)). The
    thinner of the two factors is used; the result is symmetric.
    """
    _check_pair(rho, sigma)
    a, b = _factor(rho), _factor(sigma)
    if b.shape[1] < a.shape[1]:
        a, rho, sigma = b, sigma, rho
    m = a.conj().T @ sigma.matrix @ a
    w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    return float(min(np.sqrt(np.clip(w, 0.0, None)).sum(), 1.0))


def trace_distance(rho: DensityOperator, sigma: DensityOperator) -> float:
    """||rho - sigma||_1 (no factor 1/2), in [0, 2]."""
    _check_pair(rho, sigma)
    return float(np.abs(np.linalg.eigvalsh(rho.matrix - sigma.matrix)).sum())


def chernoff_pure(phi: DensityOperator, sigma: DensityOperator) -> float:
    """<phi|sigma|phi>, the Chernoff quantity when the first state is pure."""
    _check_pair(phi, sigma)
    w, v = phi.eigh()
    if w[-1] <= 1.0 - 1e-8:
        raise DomainError("first argument is not a pure state")
    vec = v[:, -1]
    return float((vec.conj() @ sigma.matrix @ vec).real)


def quantum_chernoff(rho: DensityOperator, sigma: DensityOperator) -> float:
    """min over s in [0, 1] of Tr(rho^s sigma^(1-s))."""
    _check_pair(rho, sigma)
    wr, vr = rho.eigh()
    ws, vs = sigma.eigh()
    # round-off eigenvalues would count as support: x**s -> 1 as s -> 0
    wr = np.where(wr > SUPPORT_CUTOFF * wr[-1], wr, 0.0)
    ws = np.where(ws > SUPPORT_CUTOFF * ws[-1], ws, 0.0)
    overlap = np.abs(vr.conj().T @ vs) ** 2

    def q(s: float) -> float:
        with np.errstate(divide="ignore", invalid="ignore"):
            a = np.where(wr > 0, wr**s, 0.0)
            b = np.where(ws > 0, ws ** (1.0 - s), 0.0)
        return float(a @ overlap @ b)

    res = minimize_scalar(q, bounds=(0.0, 1.0), method="bounded", options={"xatol": 1e-10})
    return min(res.fun, q(1e-12), q(1.0 - 1e-12), 1.0)


def random_density_matrix(dim: int, rng: np.random.Generator, rank: int | None = None) -> DensityOperator:
    """Ginibre-distributed single-mode state; ``rank=1`` gives a pure state."""
    rank = dim if rank is None else rank
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ g.conj().T
    return DensityOperator(m / np.trace(m).real, dim, 1)
