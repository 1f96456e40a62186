"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive: direct enumeration and graph search
with no shared code paths with the library internals they check.
"""

from __future__ import annotations

from crystalpop.perm import Permutation, identity, reduced_word
from crystalpop.tableaux import Partition, Tableau


def enumerate_ssyt(shape: Partition) -> list[Tableau]:
    """All semistandard fillings of the shape with entries in [1, n+1],
    by cell-at-a-time backtracking."""
    parts = shape.parts
    bound = shape.n + 1
    cells = [(i, j) for i in range(len(parts)) for j in range(parts[i])]
    grid = [[0] * w for w in parts]
    out: list[Tableau] = []

    def fill(k: int) -> None:
        if k == len(cells):
            out.append(Tableau(shape, tuple(tuple(r) for r in grid)))
            return
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for val in range(lo, bound + 1):
            grid[i][j] = val
            fill(k + 1)
        grid[i][j] = 0

    fill(0)
    return out


def reachable_sets(graph) -> list[set[int]]:
    """reach[v] = all w with v <= w, by plain DFS over the succ lists."""
    size = graph.num_vertices
    reach: list[set[int]] = [set() for _ in range(size)]
    for v in range(size - 1, -1, -1):
        acc = {v}
        for w in graph.succ[v]:
            if w is not None:
                acc |= reach[w]
        reach[v] = acc
    return reach


def naive_join(reach: list[set[int]], u: int, v: int):
    """Unique minimal common upper bound, or None."""
    common = reach[u] & reach[v]
    minimal = [w for w in common if not any(x != w and w in reach[x] for x in common)]
    return minimal[0] if len(minimal) == 1 else None


def naive_meet(reach: list[set[int]], size: int, ids):
    lower = [w for w in range(size) if all(v in reach[w] for v in ids)]
    maximal = [w for w in lower if not any(x != w and x in reach[w] for x in lower)]
    return maximal[0] if len(maximal) == 1 else None


def bruhat_leq_subword(u: Permutation, w: Permutation) -> bool:
    """u <= w in Bruhat order iff u is a subword product of a reduced word
    of w (the subword products of one reduced word form the full lower
    interval)."""
    products = {identity(w.m)}
    for i in reduced_word(w):
        products |= {x.right_mult_gen(i) for x in products}
    return u in products


def weak_order_pairs(perms) -> set[tuple[Permutation, Permutation]]:
    """All (u, w) with u <= w in right weak order, by BFS over covers
    w -> w s_i that increase the inversion count."""
    def inversions(p):
        line = p.one_line
        return sum(
            1 for a in range(len(line)) for b in range(a + 1, len(line))
            if line[a] > line[b]
        )

    below: dict[Permutation, set[Permutation]] = {}
    for w in sorted(perms, key=inversions):
        acc = {w}
        for i in range(1, w.m):
            u = w.right_mult_gen(i)
            if inversions(u) < inversions(w):
                acc |= below[u]
        below[w] = acc
    return {(u, w) for w, us in below.items() for u in us}
