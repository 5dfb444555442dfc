"""Discrete forms on a game's base space and the choice rules built on them.

0-forms are plain length-``n`` float arrays. 1-forms are :class:`OneForm`
values: a skew matrix together with the base space it lives on, kept at
exact zero off the edges.

Sign conventions: ``d(psi)[i, j] = psi[j] - psi[i]`` and
``delta(phi) = -phi.sum(axis=1)``, so the Copeland scores of a game are
``delta(r)`` and a potential ``p`` explains ``r`` best when ``r ~ d(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .core import FormGame, base_is_connected, connected_components
from .errors import (
    Disconnected,
    InvalidForm,
    NegativeMargin,
    SizeMismatch,
    SupportViolation,
)
from .solver import DENSE_LIMIT, SolveReport, SolverOptions, solve_laplacian

CONSTANT_TOL = 1e-12
TIE_RTOL = 1e-9


@dataclass(frozen=True, eq=False)
class OneForm:
    values: np.ndarray
    base: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        w = np.asarray(self.base)
        if v.shape != w.shape or v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise SizeMismatch(f"form shape {v.shape} does not match base {w.shape}")
        v[w == 0] = 0.0
        if not np.allclose(v, -v.T, rtol=0.0, atol=1e-12 * max(1.0, float(np.max(np.abs(v), initial=0.0)))):
            raise InvalidForm("1-form values must be skew-symmetric")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def _same_base(self, other: "OneForm"):
        if self.base is not other.base and not np.array_equal(self.base, other.base):
            raise SizeMismatch("1-forms live on different base spaces")

    def __add__(self, other: "OneForm") -> "OneForm":
        self._same_base(other)
        return OneForm(self.values + other.values, self.base)

    def __sub__(self, other: "OneForm") -> "OneForm":
        self._same_base(other)
        return OneForm(self.values - other.values, self.base)

    def __mul__(self, k: float) -> "OneForm":
        return OneForm(self.values * k, self.base)

    __rmul__ = __mul__

    def __neg__(self) -> "OneForm":
        return OneForm(-self.values, self.base)


def differential(psi, w) -> OneForm:
    psi = np.asarray(psi, dtype=float)
    w = np.asarray(w)
    if psi.shape != (w.shape[0],):
        raise SizeMismatch(f"0-form of length {psi.size} on an n={w.shape[0]} base")
    return OneForm((psi[None, :] - psi[:, None]) * w, w)


def divergence(phi: OneForm) -> np.ndarray:
    return -phi.values.sum(axis=1)


def inner0(a, b) -> float:
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise SizeMismatch(f"0-forms of lengths {a.size} and {b.size}")
    return float(a @ b)


def inner1(f: OneForm, g: OneForm) -> float:
    """Edge-wise inner product; each undirected edge counted once."""
    f._same_base(g)
    return float(np.sum(np.triu(f.values * g.values * f.base, 1)))


def adjointness_defect(phi: OneForm, psi) -> float:
    return inner1(phi, differential(psi, phi.base)) - inner0(divergence(phi), psi)


def laplacian(w, sparse: bool | None = None):
    """Graph Laplacian ``D - W``; sparse CSR above the dense-size limit unless forced."""
    w = np.asarray(w, dtype=float)
    n = w.shape[0]
    if sparse is None:
        sparse = n > DENSE_LIMIT
    if sparse:
        ws = sp.csr_matrix(w)
        return (sp.diags(np.asarray(ws.sum(axis=1)).ravel()) - ws).tocsr()
    return np.diag(w.sum(axis=1)) - w


def argmax_set(scores, rtol: float = TIE_RTOL) -> tuple[int, ...]:
    """Indices within ``rtol * max(1, max|scores|)`` of the maximum."""
    scores = np.asarray(scores, dtype=float)
    if scores.size == 0:
        return ()
    eps = rtol * max(1.0, float(np.max(np.abs(scores))))
    top = scores.max()
    return tuple(int(i) for i in np.flatnonzero(scores >= top - eps))


def copeland_scores(fg: FormGame) -> np.ndarray:
    return -fg.r.sum(axis=1).astype(float) + 0.0


def copeland_choice(fg: FormGame) -> tuple[int, ...]:
    return argmax_set(copeland_scores(fg), rtol=0.0)


@dataclass(frozen=True, eq=False)
class HodgeResult:
    potential: np.ndarray
    gradient: OneForm
    harmonic: OneForm
    tenseness: float
    winners: tuple[int, ...]
    solve: SolveReport | None = None


def _require_connected(w):
    if not base_is_connected(w):
        parts = connected_components(FormGame(w, np.zeros_like(w)))
        raise Disconnected(len(parts))


def _tenseness(phi: OneForm, harmonic: OneForm) -> float:
    total = inner1(phi, phi)
    if total == 0.0:
        # all-mutual (or edgeless) games are regular
        return 1.0
    return float(min(1.0, max(0.0, inner1(harmonic, harmonic) / total)))


def hodge_decompose(phi: OneForm, opts: SolverOptions | None = None) -> HodgeResult:
    """Split ``phi`` into ``d(potential) + harmonic`` on a connected base."""
    _require_connected(phi.base)
    return _decompose(phi, opts)


def _decompose(phi: OneForm, opts: SolverOptions | None) -> HodgeResult:
    w = phi.base
    n = phi.n
    b = divergence(phi)
    if np.max(np.abs(b), initial=0.0) <= CONSTANT_TOL * max(1.0, float(np.max(np.abs(phi.values), initial=0.0))):
        zero = np.zeros(n)
        return HodgeResult(zero, differential(zero, w), phi, _tenseness(phi, phi), tuple(range(n)))
    report = solve_laplacian(laplacian(w), b, opts)
    p = report.solution
    grad = differential(p, w)
    harm = phi - grad
    return HodgeResult(p, grad, harm, _tenseness(phi, harm), argmax_set(p), report)


def r_form(fg: FormGame) -> OneForm:
    return OneForm(fg.r, fg.w)


def hpc(fg: FormGame, opts: SolverOptions | None = None) -> HodgeResult:
    """Hodge potential choice of a connected game."""
    _require_connected(fg.w)
    phi = r_form(fg)
    cs = copeland_scores(fg)
    if np.max(np.abs(cs), initial=0.0) <= CONSTANT_TOL:
        zero = np.zeros(fg.n)
        return HodgeResult(zero, differential(zero, fg.w), phi, 1.0, tuple(range(fg.n)))
    return _decompose(phi, opts)


def tenseness(game, opts: SolverOptions | None = None) -> float:
    """Harmonic share of a :class:`FormGame` or :class:`MarginalGame`."""
    if isinstance(game, MarginalGame):
        return ehpc(game, opts).tenseness
    return hpc(game, opts).tenseness


@dataclass(frozen=True, eq=False)
class MarginalGame:
    """A game whose asymmetric dominances carry non-negative margins.

    ``margins[i, j] > 0`` means ``i`` beat ``j`` by that much; an edge of ``w``
    with zero margin both ways is a drawn round (mutual dominance).
    """

    w: np.ndarray
    margins: np.ndarray
    alternatives: tuple[str, ...] = ()

    def __post_init__(self):
        w = np.array(self.w, dtype=np.int8)
        m = np.array(self.margins, dtype=float)
        if m.shape != w.shape or w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise SizeMismatch(f"margins {m.shape} vs base {w.shape}")
        if not np.array_equal(w, w.T) or np.any(np.diag(w) != 0) or not np.all(np.isin(w, (0, 1))):
            raise SupportViolation("base space must be a symmetric 0/1 matrix with zero diagonal")
        if not np.all(np.isfinite(m)):
            raise NegativeMargin("margins must be finite")
        if np.any(m < 0):
            raise NegativeMargin("margins must be non-negative")
        if np.any(np.diag(m) != 0):
            raise SupportViolation("margins must have a zero diagonal")
        if np.any((m > 0) & (w == 0)):
            raise SupportViolation("positive margin on an empty round")
        if np.any((m > 0) & (m.T > 0)):
            raise SupportViolation("a round cannot be won by both sides")
        w.setflags(write=False)
        m.setflags(write=False)
        alts = tuple(self.alternatives) or tuple(f"x{k + 1}" for k in range(w.shape[0]))
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "margins", m)
        object.__setattr__(self, "alternatives", alts)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    def margin_form(self) -> OneForm:
        return OneForm(self.margins.T - self.margins, self.w)

    def form_game(self) -> FormGame:
        """The underlying abstract game: sign pattern of the margin form."""
        return FormGame(self.w, np.sign(self.margin_form().values).astype(np.int8), self.alternatives)


def ehpc(mg: MarginalGame, opts: SolverOptions | None = None) -> HodgeResult:
    return hodge_decompose(mg.margin_form(), opts)


def split_components(fg: FormGame, opts: SolverOptions | None = None) -> list[tuple[list[int], HodgeResult]]:
    """Extension: run :func:`hpc` on each base-space component separately."""
    out = []
    for part in connected_components(fg):
        idx = np.ix_(part, part)
        sub = FormGame(fg.w[idx], fg.r[idx], tuple(fg.alternatives[k] for k in part))
        out.append((part, hpc(sub, opts)))
    return out
