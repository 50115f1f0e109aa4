"""Cross-checks of the closed forms against the truncated Fock-space oracle.

Each check returns a flat dict with the oracle value, the closed-form
value, their deviation, the tolerance and a pass flag. The ``full`` level
also re-runs every fidelity check at twice the truncation and reports how
much the result moved.
"""

from __future__ import annotations

import numpy as np

from . import fock_oracle as fo
from .channels import diamond_lower_bound, vacuum_output_fidelity
from .cv_core import added_noise, tele_fidelity

TELE_PAIRS = ((1.0, 1.0), (2.0, 1.0), (5.0, 0.5), (50.0, 1.0))
TELE_TOL = 1e-3
VACUUM_TOL = 1e-6


def _row(name, oracle, closed, tol, **extra) -> dict:
    delta = abs(oracle - closed)
    row = {"check": name, "oracle": float(oracle), "closed_form": float(closed), "abs_delta": float(delta),
           "tolerance": tol, "pass": bool(delta <= tol)}
    row.update(extra)
    return row


def oracle_tele_fidelity(mu: float, mu_tilde: float, dim: int, quad_order: int) -> float:
    phi = fo.tmsv_state(mu_tilde, dim)
    out = fo.apply_additive_noise(phi, added_noise(mu), mode=1, quad_order=quad_order)
    return fo.uhlmann_fidelity(phi, out)


def tele_dim(mu: float, mu_tilde: float) -> int:
    return min(fo.default_dim(mu_tilde - 0.5 + added_noise(mu)), fo.MAX_TWO_MODE_DIM // 2)


def check_tele_fidelity(mu: float, mu_tilde: float, dim: int | None = None,
                        quad_order: int | None = None, convergence: bool = False) -> dict:
    dim = dim or tele_dim(mu, mu_tilde)
    quad_order = quad_order or max(20, dim)
    f_oracle = oracle_tele_fidelity(mu, mu_tilde, dim, quad_order)
    extra = {"dim": dim, "quad_order": quad_order}
    if convergence:
        d2 = min(2 * dim, fo.MAX_TWO_MODE_DIM)
        f2 = oracle_tele_fidelity(mu, mu_tilde, d2, max(quad_order, d2))
        extra["doubled_dim_change"] = abs(f2 - f_oracle)
        extra["converged"] = bool(abs(f2 - f_oracle) < 10 * TELE_TOL)
    row = _row(f"tele_fidelity(mu={mu:g}, mu_tilde={mu_tilde:g})", f_oracle,
               tele_fidelity(mu, mu_tilde), TELE_TOL, **extra)
    if convergence:
        row["pass"] = row["pass"] and extra["converged"]
    return row


def vacuum_probe(eta: float, xi: float, dim: int = 40, quad_order: int = 40) -> fo.DensityOperator:
    """E_eta(I^xi(|0><0|)) simulated in the Fock basis."""
    noisy = fo.apply_additive_noise(fo.vacuum_state(dim), xi, quad_order=quad_order)
    return fo.apply_pure_loss(noisy, eta)


def check_vacuum_output(eta: float, xi: float, dim: int = 40, quad_order: int = 40) -> dict:
    out = vacuum_probe(eta, xi, dim, quad_order)
    return _row(f"vacuum_output(eta={eta:g}, xi={xi:g})", out.element(0),
                vacuum_output_fidelity(eta, xi), VACUUM_TOL, dim=dim, quad_order=quad_order)


def check_diamond_chain(eta: float, xi: float, dim: int = 40, quad_order: int = 40) -> dict:
    """Vacuum-probe trace distance sits in [lower bound, 2] and above the Chernoff quantity."""
    probe = fo.vacuum_state(dim)
    out = vacuum_probe(eta, xi, dim, quad_order)
    dist = fo.trace_distance(probe, out)
    chern = 2.0 * (1.0 - fo.chernoff_pure(probe, out))
    lower = diamond_lower_bound(eta, xi)
    ok = (lower - 1e-6 <= dist <= 2.0) and dist >= chern - 1e-6 and abs(chern - lower) <= 1e-6
    return {"check": f"diamond_chain(eta={eta:g}, xi={xi:g})", "oracle": dist,
            "closed_form": lower, "chernoff_term": chern, "abs_delta": abs(chern - lower),
            "tolerance": 1e-6, "pass": bool(ok)}


def check_random_pairs(n_pairs: int = 100, dim: int = 6, seed: int = 7) -> dict:
    """||rho - sigma||_1 >= 2 [1 - C] and >= 2 [1 - F] on random truncated states."""
    rng = np.random.default_rng(seed)
    worst = np.inf
    for k in range(n_pairs):
        rho = fo.random_density_matrix(dim, rng, rank=1 if k % 2 == 0 else None)
        sigma = fo.random_density_matrix(dim, rng)
        d = fo.trace_distance(rho, sigma)
        c = fo.quantum_chernoff(rho, sigma)
        f = fo.uhlmann_fidelity(rho, sigma)
        worst = min(worst, d - 2 * (1 - c), d - 2 * (1 - f))
        if rho.is_pure():
            worst = min(worst, d - 2 * (1 - fo.chernoff_pure(rho, sigma)))
    return {"check": f"trace_distance_vs_chernoff({n_pairs} pairs)", "oracle": worst,
            "closed_form": 0.0, "abs_delta": max(0.0, -worst), "tolerance": 1e-10,
            "pass": bool(worst >= -1e-10)}


def run(level: str = "fast", dim: int | None = None, quad_order: int | None = None) -> list[dict]:
    if level not in ("fast", "full"):
        raise ValueError(f"unknown level {level!r}")
    rows = [check_vacuum_output(0.5, 0.5, dim or 40, quad_order or 40)]
    if level == "fast":
        rows.append(check_tele_fidelity(5.0, 0.5, dim, quad_order))
        rows.append(check_random_pairs(20))
        return rows
    rows.append(check_vacuum_output(0.8, 0.2, dim or 40, quad_order or 40))
    for mu, mt in TELE_PAIRS:
        rows.append(check_tele_fidelity(mu, mt, dim, quad_order, convergence=True))
    for eta, xi in ((0.5, 0.5), (0.8, 0.2)):
        rows.append(check_diamond_chain(eta, xi, dim or 40, quad_order or 40))
    rows.append(check_random_pairs(100))
    return rows
