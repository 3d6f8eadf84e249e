"""Independent brute-force oracles the test suite checks the library against.

Everything here deliberately avoids the library's elimination and search
code paths: ranks come from kernel counting, acyclicity from a plain
recursive cycle hunt, and inversion numbers from direct enumeration of
subset families.
"""

from __future__ import annotations

import itertools

from invlab import OrientedGraph, VertexFamily, invert


def kernel_count_rank(rows: list[list[int]]) -> int:
    """rank = ncols - log2 |{x : Mx = 0}|, by enumerating all x."""
    if not rows:
        return 0
    ncols = len(rows[0])
    solutions = 0
    for x in range(1 << ncols):
        if all(
            sum(((x >> c) & 1) * row[c] for c in range(ncols)) % 2 == 0 for row in rows
        ):
            solutions += 1
    return ncols - solutions.bit_length() + 1


def dfs_acyclic(D: OrientedGraph) -> bool:
    """Generic cycle detection by depth-first search over the arc list."""
    adj = {v: [] for v in range(D.n)}
    for u, v in D.arcs():
        adj[u].append(v)
    state = {v: 0 for v in range(D.n)}  # 0 new, 1 on stack, 2 done

    def visit(v: int) -> bool:
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1:
                return False
            if state[w] == 0 and not visit(w):
                return False
        state[v] = 2
        return True

    return all(state[v] != 0 or visit(v) for v in range(D.n))


def subsets(n: int):
    verts = list(range(n))
    for mask in range(1 << n):
        yield frozenset(v for v in verts if (mask >> v) & 1)


def naive_inv(D: OrientedGraph, max_m: int = 2):
    """Smallest family size up to max_m by enumerating all subset families.

    Returns the value, or None when every family of at most max_m sets fails.
    """
    all_sets = list(subsets(D.n))
    for m in range(max_m + 1):
        for combo in itertools.product(all_sets, repeat=m):
            family = VertexFamily(D.n, tuple(combo))
            if dfs_acyclic(invert(D, family)):
                return m
    return None


def gram_by_lists(rows: list[list[int]]) -> list[list[int]]:
    """Pairwise dot products mod 2, straight from the definition."""
    n = len(rows)
    return [
        [sum(a * b for a, b in zip(rows[i], rows[j])) % 2 for j in range(n)]
        for i in range(n)
    ]


def all_oriented_graphs(n: int):
    """Every labeled oriented graph on n vertices (3 states per pair)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (i, j), s in zip(pairs, states):
            if s == 1:
                arcs.append((i, j))
            elif s == 2:
                arcs.append((j, i))
        yield OrientedGraph(n, arcs)


def all_symmetric_matrices(n: int):
    """Every symmetric 0/1 matrix on n vertices as row lists."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for diag in itertools.product((0, 1), repeat=n):
        for off in itertools.product((0, 1), repeat=len(pairs)):
            rows = [[0] * n for _ in range(n)]
            for v in range(n):
                rows[v][v] = diag[v]
            for (i, j), b in zip(pairs, off):
                rows[i][j] = rows[j][i] = b
            yield rows
