"""Reference computations that share no code path with the package."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def exact_potential(w, b) -> list[Fraction]:
    """Mean-zero solution of (D - W) p = b in exact rational arithmetic.

    Gauss-Jordan elimination on the system with p[0] pinned to 0.
    """
    w = [[int(v) for v in row] for row in np.asarray(w)]
    n = len(w)
    b = [Fraction(v).limit_denominator(10**9) for v in np.asarray(b, dtype=float)]
    lap = [[Fraction(-w[i][j]) if i != j else Fraction(sum(w[i])) for j in range(n)] for i in range(n)]
    m = n - 1
    a = [[lap[i][j] for j in range(1, n)] + [b[i]] for i in range(1, n)]
    for col in range(m):
        piv = next(r for r in range(col, m) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [v / pv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    p = [Fraction(0)] + [a[i][m] for i in range(m)]
    mean = sum(p) / n
    return [v - mean for v in p]


def lstsq_potential(w, phi) -> np.ndarray:
    """Least-squares fit of phi[i, j] ~ p[j] - p[i] over the edges, via the incidence matrix.

    numpy's minimum-norm solution is orthogonal to the constants, i.e. mean zero.
    """
    w = np.asarray(w)
    phi = np.asarray(phi, dtype=float)
    n = w.shape[0]
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if w[i, j]]
    a = np.zeros((len(edges), n))
    y = np.zeros(len(edges))
    for k, (i, j) in enumerate(edges):
        a[k, i], a[k, j] = -1.0, 1.0
        y[k] = phi[i, j]
    return np.linalg.lstsq(a, y, rcond=None)[0]


def union_find_components(w) -> list[list[int]]:
    w = np.asarray(w)
    n = w.shape[0]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if w[i, j]:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda g: g[0])


def copeland_from_pairs(n: int, pairs) -> list[int]:
    pairs = set(pairs)
    return [sum((x, y) in pairs for y in range(n)) - sum((y, x) in pairs for y in range(n)) for x in range(n)]
