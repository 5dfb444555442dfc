"""Solve ``L @ p = b`` for a connected-graph Laplacian ``L``.

The system is singular with kernel spanned by the constant vector, and is
consistent whenever ``sum(b) == 0``. Two routes are offered and both return
the mean-zero solution:

``pinned-direct``
    fix ``p[0] = 0``, Cholesky-factor the remaining ``(n-1)`` principal minor
    (positive definite on a connected graph), then subtract the mean.
``projected-iterative``
    preconditioned conjugate gradients with a Jacobi preconditioner, with every
    search direction projected onto the mean-zero subspace.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from .errors import Inconsistent, InvalidConfig, NonConverged, SingularBeyondKernel

DIRECT = "pinned-direct"
ITERATIVE = "projected-iterative"
DENSE_LIMIT = 512

_METHOD_ALIASES = {"direct": DIRECT, "iterative": ITERATIVE, DIRECT: DIRECT, ITERATIVE: ITERATIVE}


@dataclass(frozen=True)
class SolverOptions:
    method: str = "auto"
    tol_abs: float = 1e-10
    tol_rel: float = 1e-10
    max_iter_factor: int = 10

    def __post_init__(self):
        if self.method != "auto" and self.method not in _METHOD_ALIASES:
            raise InvalidConfig(f"unknown solver method {self.method!r}")
        if self.tol_abs < 0 or self.tol_rel < 0:
            raise InvalidConfig("solver tolerances must be non-negative")
        if self.max_iter_factor < 1:
            raise InvalidConfig("max_iter_factor must be at least 1")


@dataclass(frozen=True)
class SolveReport:
    solution: np.ndarray
    residual_norm: float
    iterations: int
    method: str


def method_select(n: int, density: float = 1.0, opts: SolverOptions | None = None) -> str:
    """Direct up to and including ``n == 512``, iterative above.

    ``density`` is accepted for interface stability; the threshold is on size only.
    """
    if opts is not None and opts.method != "auto":
        return _METHOD_ALIASES[opts.method]
    return DIRECT if n <= DENSE_LIMIT else ITERATIVE


def _residual(l, x, b) -> float:
    return float(np.linalg.norm(l @ x - b))


def solve_laplacian(l, b, opts: SolverOptions | None = None) -> SolveReport:
    opts = opts or SolverOptions()
    b = np.asarray(b, dtype=float)
    n = b.size
    if l.shape != (n, n):
        raise InvalidConfig(f"Laplacian shape {l.shape} does not match rhs length {n}")
    bnorm = float(np.linalg.norm(b))
    if abs(b.sum()) > 1e-10 * bnorm:
        raise Inconsistent(f"right-hand side sums to {b.sum():.3e}, not zero")

    density = float(l.nnz if sp.issparse(l) else np.count_nonzero(l)) / max(n * n, 1)
    method = method_select(n, density, opts)
    if n <= 1 or bnorm == 0.0:
        return SolveReport(np.zeros(n), 0.0, 0, method)
    if method == DIRECT:
        x, iters = _pinned_direct(l)(b), 0
    else:
        x, iters = _projected_cg(l, b, opts)
    x = x - x.mean()
    return SolveReport(x, _residual(l, x, b), iters, method)


def _pinned_direct(l):
    dense = l.toarray() if sp.issparse(l) else np.asarray(l, dtype=float)
    minor = dense[1:, 1:]
    try:
        factor = scipy.linalg.cho_factor(minor, lower=True, check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise SingularBeyondKernel(
            "pinned minor is not positive definite; the base space is likely disconnected"
        ) from exc

    def solve(b):
        x = np.zeros(b.size)
        x[1:] = scipy.linalg.cho_solve(factor, b[1:], check_finite=False)
        return x

    return solve


def _projected_cg(l, b, opts: SolverOptions) -> tuple[np.ndarray, int]:
    n = b.size
    diag = np.asarray(l.diagonal(), dtype=float)
    inv_diag = np.where(diag > 0, 1.0 / np.where(diag > 0, diag, 1.0), 1.0)
    b = b - b.mean()
    target = opts.tol_abs + opts.tol_rel * float(np.linalg.norm(b))
    max_iter = opts.max_iter_factor * n

    def precondition(v):
        z = inv_diag * v
        return z - z.mean()

    x = np.zeros(n)
    r = b.copy()
    iters = 0
    # restart from the true residual whenever the recurrence claims convergence
    # but the recomputed residual disagrees
    while iters < max_iter:
        z = precondition(r)
        p = z.copy()
        rz = float(r @ z)
        while iters < max_iter:
            if np.linalg.norm(r) <= target:
                break
            q = l @ p
            pq = float(p @ q)
            if pq <= 0.0:
                break
            alpha = rz / pq
            x += alpha * p
            x -= x.mean()
            r -= alpha * q
            r -= r.mean()
            iters += 1
            z = precondition(r)
            rz_new = float(r @ z)
            p = z + (rz_new / rz) * p
            p -= p.mean()
            rz = rz_new
        r = b - l @ x
        r -= r.mean()
        if np.linalg.norm(r) <= target:
            return x, iters
        if float(r @ precondition(r)) <= 0.0:
            break
    raise NonConverged(
        f"projected CG stopped after {iters} iterations with residual "
        f"{np.linalg.norm(b - l @ x):.3e} > {target:.3e}"
    )
