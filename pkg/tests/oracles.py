"""Independent oracles the tests freeze results against.

These deliberately avoid the code paths they check: dimensions come from
counting Gelfand-Tsetlin patterns instead of the Weyl product, arrows from
a direct scan of the defining balance conditions, and block components from
plain BFS instead of union-find.
"""

from functools import lru_cache


@lru_cache(maxsize=None)
def gt_count(coords):
    """Number of Gelfand-Tsetlin patterns with top row coords = dim of the
    gl(n) irreducible."""
    coords = tuple(coords)
    if len(coords) <= 1:
        return 1
    total = 0
    for nxt in _interlacing(coords):
        total += gt_count(nxt)
    return total


def _interlacing(row):
    """All weakly decreasing rows mu with row[i] >= mu[i] >= row[i+1]."""
    def rec(i, prefix):
        if i == len(row) - 1:
            yield tuple(prefix)
            return
        lo, hi = row[i + 1], row[i]
        upper = hi if not prefix else min(hi, prefix[-1])
        for v in range(lo, upper + 1):
            yield from rec(i + 1, prefix + [v])
    yield from rec(0, [])


def solid_targets_bruteforce(balls, j_range):
    """Solid arrow targets per ball, straight from the balance conditions:
    ball i points at empty j < i with r+(i,j) = 0 and r+(i,s) >= 0 for
    j < s < i."""
    bset = set(balls)

    def rp(i, j):
        return sum(1 if s in bset else -1 for s in range(j, i))

    out = {}
    for i in balls:
        ts = [j for j in j_range
              if j < i and j not in bset and rp(i, j) == 0
              and all(rp(i, s) >= 0 for s in range(j + 1, i))]
        out[i] = tuple(sorted(ts))
    return out


def dashed_targets_bruteforce(balls, j_range):
    """Dashed arrow targets per empty source, from the balance conditions."""
    bset = set(balls)

    def rm(i, j):
        return -sum(1 if s in bset else -1 for s in range(j + 1, i + 1))

    out = {}
    for j in j_range:
        if j in bset:
            continue
        ts = [i for i in balls
              if i > j and rm(i, j) == 0
              and all(rm(s, j) >= 0 for s in range(j + 1, i))]
        if ts:
            out[j] = tuple(sorted(ts))
    return out


def bfs_components(vertices, neighbors):
    """Connected components of an undirected graph given by a neighbor
    function; returns a list of frozensets."""
    seen = set()
    comps = []
    for v in vertices:
        if v in seen:
            continue
        comp = {v}
        queue = [v]
        while queue:
            x = queue.pop()
            for y in neighbors(x):
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return comps
