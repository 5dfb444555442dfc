"""Abstract games in relational and matrix form, plus the game transforms.

An :class:`AbstractGame` is a set of ordered dominance pairs ``(i, j)`` over
``n`` indexed alternatives. A :class:`FormGame` is the same information as a
pair of integer matrices: a symmetric 0/1 base space ``w`` and a skew
``{-1, 0, 1}`` local dominance difference ``r`` with ``r[i, j] = -1`` when
``i`` beats ``j`` outright and ``r[i, j] = 0`` on a mutual dominance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components as _cc

from .errors import (
    CycleNotInGame,
    Degenerate,
    DimensionMismatch,
    InvalidForm,
    InvalidGame,
    MalformedCycle,
    NoSuchDominance,
    NotMutual,
    SizeMismatch,
)

Pair = tuple[int, int]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{k + 1}" for k in range(n))


@dataclass(frozen=True)
class AbstractGame:
    alternatives: tuple[str, ...]
    dominances: frozenset[Pair]

    def __post_init__(self):
        alts = tuple(str(a) for a in self.alternatives)
        if len(alts) == 0:
            raise InvalidGame("a game needs at least one alternative")
        if len(set(alts)) != len(alts):
            raise InvalidGame("alternative labels must be unique")
        n = len(alts)
        doms = []
        for pair in self.dominances:
            i, j = (int(v) for v in pair)
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidGame(f"dominance {(i, j)} out of range for n={n}")
            if i == j:
                raise InvalidGame(f"reflexive dominance {(i, j)}")
            doms.append((i, j))
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "dominances", frozenset(doms))

    @classmethod
    def from_pairs(cls, n_or_labels: int | Sequence[str], pairs: Iterable[Pair]) -> "AbstractGame":
        if isinstance(n_or_labels, int):
            labels = default_labels(n_or_labels)
        else:
            labels = tuple(n_or_labels)
        pairs = [tuple(p) for p in pairs]
        if len(set(pairs)) != len(pairs):
            raise InvalidGame("duplicate dominance pairs")
        return cls(labels, frozenset(pairs))

    @property
    def n(self) -> int:
        return len(self.alternatives)

    def sorted_dominances(self) -> list[Pair]:
        return sorted(self.dominances)

    def is_mutual(self, i: int, j: int) -> bool:
        return (i, j) in self.dominances and (j, i) in self.dominances


@dataclass(frozen=True, eq=False)
class FormGame:
    """Base space ``w`` and local dominance difference ``r`` (both n x n)."""

    w: np.ndarray
    r: np.ndarray
    alternatives: tuple[str, ...] = field(default=())

    def __post_init__(self):
        w = np.array(self.w, dtype=np.int8)
        r = np.array(self.r, dtype=np.int8)
        problems = validate(self.w, self.r)
        if problems:
            raise InvalidForm("; ".join(problems))
        w.setflags(write=False)
        r.setflags(write=False)
        alts = tuple(self.alternatives) or default_labels(w.shape[0])
        if len(alts) != w.shape[0]:
            raise SizeMismatch(f"{len(alts)} labels for an n={w.shape[0]} game")
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "alternatives", alts)

    @property
    def n(self) -> int:
        return self.w.shape[0]

    def __eq__(self, other):
        if not isinstance(other, FormGame):
            return NotImplemented
        return (
            self.alternatives == other.alternatives
            and np.array_equal(self.w, other.w)
            and np.array_equal(self.r, other.r)
        )

    __hash__ = None

    def n_edges(self) -> int:
        return int(self.w.sum()) // 2


def validate(w, r) -> list[str]:
    """Return every violated form condition as a message; empty means valid."""
    w = np.asarray(w)
    r = np.asarray(r)
    if w.ndim != 2 or w.shape[0] != w.shape[1]:
        raise DimensionMismatch(f"base space must be square, got shape {w.shape}")
    if r.shape != w.shape:
        raise DimensionMismatch(f"shapes differ: w {w.shape} vs r {r.shape}")
    out = []
    if not np.array_equal(w, w.T):
        out.append("w is not symmetric")
    if np.any(np.diag(w) != 0):
        out.append("w has a nonzero diagonal")
    if not np.all(np.isin(w, (0, 1))):
        out.append("w has entries outside {0, 1}")
    if not np.array_equal(r, -r.T):
        out.append("r is not skew-symmetric")
    if not np.all(np.isin(r, (-1, 0, 1))):
        out.append("r has entries outside {-1, 0, 1}")
    if np.any((r != 0) & (w == 0)):
        out.append("r is nonzero off the edges of w")
    return out


def to_form(game: AbstractGame) -> FormGame:
    n = game.n
    g = np.zeros((n, n), dtype=np.int8)
    for i, j in game.dominances:
        g[i, j] = 1
    w = ((g + g.T) > 0).astype(np.int8)
    r = g.T - g
    return FormGame(w, r, game.alternatives)


def from_form(fg: FormGame) -> AbstractGame:
    problems = validate(fg.w, fg.r)
    if problems:
        raise InvalidForm("; ".join(problems))
    iu, ju = np.nonzero(np.triu(fg.w, 1))
    doms = set()
    for i, j in zip(iu.tolist(), ju.tolist()):
        if fg.r[i, j] <= 0:
            doms.add((i, j))
        if fg.r[i, j] >= 0:
            doms.add((j, i))
    return AbstractGame(fg.alternatives, frozenset(doms))


def completeness(fg: FormGame) -> float:
    n = fg.n
    if n < 2:
        raise Degenerate("completeness needs at least two alternatives")
    return float(fg.w.sum()) / (n * (n - 1))


def connected_components(fg: FormGame) -> list[list[int]]:
    """Undirected components of the base space, each sorted, ordered by least member."""
    n_comp, labels = _cc(csr_matrix(fg.w), directed=False)
    parts: dict[int, list[int]] = {}
    for v, lab in enumerate(labels.tolist()):
        parts.setdefault(lab, []).append(v)
    return sorted(parts.values(), key=lambda p: p[0])


def is_connected(fg: FormGame) -> bool:
    return base_is_connected(fg.w)


def base_is_connected(w) -> bool:
    """Connectivity of a symmetric 0/1 matrix, without building a :class:`FormGame`."""
    w = np.asarray(w)
    n = w.shape[0]
    if n <= 1:
        return True
    if n > 64:
        return _cc(csr_matrix(w), directed=False, return_labels=False) == 1
    # frontier search on the dense matrix; cheaper than a sparse conversion at this size
    adj = w != 0
    seen = np.zeros(n, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = adj[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


def _check_permutation(p, n: int) -> np.ndarray:
    p = np.asarray(p, dtype=int)
    if p.shape != (n,):
        raise SizeMismatch(f"permutation of length {p.size} for n={n}")
    if not np.array_equal(np.sort(p), np.arange(n)):
        raise SizeMismatch("permutation is not a bijection on range(n)")
    return p


def inverse_permutation(p) -> np.ndarray:
    p = np.asarray(p, dtype=int)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size)
    return inv


def permute(game: AbstractGame, p) -> AbstractGame:
    """Relabel so that ``(p[i], p[j])`` holds in the result iff ``(i, j)`` held before."""
    p = _check_permutation(p, game.n)
    doms = frozenset((int(p[i]), int(p[j])) for i, j in game.dominances)
    return AbstractGame(game.alternatives, doms)


@dataclass(frozen=True)
class Cycle:
    edges: tuple[Pair, ...]

    def __post_init__(self):
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        if len(edges) < 2:
            raise MalformedCycle("a cycle needs at least two edges")
        for (a, b), (c, d) in zip(edges, edges[1:] + edges[:1]):
            if b != c:
                raise MalformedCycle(f"edge {(a, b)} does not chain into {(c, d)}")
        object.__setattr__(self, "edges", edges)

    def reversed(self) -> "Cycle":
        return Cycle(tuple((b, a) for a, b in reversed(self.edges)))


def reverse_cycle(game: AbstractGame, c: Cycle | Sequence[Pair]) -> AbstractGame:
    if not isinstance(c, Cycle):
        c = Cycle(tuple(c))
    missing = [e for e in c.edges if e not in game.dominances]
    if missing:
        raise CycleNotInGame(f"cycle edges not in game: {missing}")
    doms = (game.dominances - set(c.edges)) | {(b, a) for a, b in c.edges}
    return AbstractGame(game.alternatives, frozenset(doms))


def flip_dominance(game: AbstractGame, j: int, i: int) -> AbstractGame:
    """Replace ``j`` dominating ``i`` with ``i`` dominating ``j``."""
    if (j, i) not in game.dominances:
        raise NoSuchDominance(f"{(j, i)} is not a dominance of the game")
    doms = (game.dominances - {(j, i)}) | {(i, j)}
    return AbstractGame(game.alternatives, frozenset(doms))


def remove_mutual(game: AbstractGame, i: int, j: int) -> AbstractGame:
    """Turn the mutual dominance between ``i`` and ``j`` into an empty round."""
    if not game.is_mutual(i, j):
        raise NotMutual(f"no mutual dominance between {i} and {j}")
    return AbstractGame(game.alternatives, game.dominances - {(i, j), (j, i)})


def find_cycle(
    game: AbstractGame, asymmetric_only: bool = False, seed: int | None = None
) -> Cycle | None:
    """Find some dominance cycle by depth-first search.

    With ``asymmetric_only`` edges belonging to a mutual dominance are ignored,
    so any cycle found has length at least three. ``seed`` shuffles the search
    order so repeated calls can surface different cycles.
    """
    n = game.n
    succ: list[list[int]] = [[] for _ in range(n)]
    for i, j in game.sorted_dominances():
        if asymmetric_only and (j, i) in game.dominances:
            continue
        succ[i].append(j)
    order = list(range(n))
    if seed is not None:
        rng = np.random.default_rng(seed)
        rng.shuffle(order)
        for s in succ:
            rng.shuffle(s)

    WHITE, GREY, BLACK = 0, 1, 2
    colour = [WHITE] * n
    for root in order:
        if colour[root] != WHITE:
            continue
        path = [root]
        colour[root] = GREY
        iters = [iter(succ[root])]
        while iters:
            v = path[-1]
            nxt = next(iters[-1], None)
            if nxt is None:
                colour[v] = BLACK
                path.pop()
                iters.pop()
                continue
            if colour[nxt] == GREY:
                loop = path[path.index(nxt):]
                edges = tuple(zip(loop, loop[1:] + loop[:1]))
                return Cycle(edges)
            if colour[nxt] == WHITE:
                colour[nxt] = GREY
                path.append(nxt)
                iters.append(iter(succ[nxt]))
    return None
