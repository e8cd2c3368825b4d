"""Projected-gradient nonnegative least squares.

Minimizes ||G w - b||_2 over w >= 0 with a fixed 1/L step, L the largest
eigenvalue of G^T G.  Small dense problems only; used to audit nonnegative
reconstructions of sampled cone members over certificate generators.
"""

from __future__ import annotations

import numpy as np

__all__ = ["nnls_projected_gradient"]


def nnls_projected_gradient(
    gmat: np.ndarray,
    b: np.ndarray,
    max_iter: int = 10_000,
    target_residual: float | None = None,
):
    """Returns (w, residual_norm).  Stops early when the iterate stalls or
    the residual reaches `target_residual`."""
    gmat = np.asarray(gmat, dtype=float)
    b = np.asarray(b, dtype=float)
    gtg = gmat.T @ gmat
    gtb = gmat.T @ b
    lam = float(np.linalg.norm(gtg, 2)) if gtg.size else 0.0
    w = np.zeros(gmat.shape[1])
    if lam == 0.0:
        return w, float(np.linalg.norm(b))
    step = 1.0 / lam
    for _ in range(max_iter):
        grad = gtg @ w - gtb
        w_next = np.maximum(w - step * grad, 0.0)
        moved = float(np.abs(w_next - w).max())
        w = w_next
        if target_residual is not None:
            if float(np.linalg.norm(gmat @ w - b)) <= target_residual:
                break
        if moved <= 1e-15 * (1.0 + float(np.abs(w).max())):
            break
    return w, float(np.linalg.norm(gmat @ w - b))
