"""Independent brute-force oracles used to freeze expected values.

Everything here works from (n, edge set) alone with definition-literal
power-set scans and plain Fraction elimination, deliberately sharing no code
path with the package implementations it checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def adjacency(n: int, edges) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def is_independent(adj, vs) -> bool:
    vs = list(vs)
    return all(b not in adj[a] for i, a in enumerate(vs) for b in vs[i + 1:])


def is_mis(n: int, adj, vs) -> bool:
    s = set(vs)
    if not is_independent(adj, s):
        return False
    return all(adj[v] & s for v in range(n) if v not in s)


def all_mis_powerset(n: int, edges) -> list[tuple[int, ...]]:
    adj = adjacency(n, edges)
    out = []
    for r in range(n + 1):
        for combo in combinations(range(n), r):
            if is_mis(n, adj, combo):
                out.append(combo)
    out.sort()
    return out


def simplicial_vertices_naive(n: int, edges) -> list[int]:
    adj = adjacency(n, edges)
    out = []
    for v in range(n):
        closed = sorted(adj[v] | {v})
        if all(b in adj[a] for i, a in enumerate(closed) for b in closed[i + 1:]):
            out.append(v)
    return out


def has_long_induced_cycle(n: int, edges) -> bool:
    """True iff some vertex subset of size >= 4 induces a chordless cycle."""
    adj = adjacency(n, edges)
    for r in range(4, n + 1):
        for combo in combinations(range(n), r):
            chosen = set(combo)
            degs = [len(adj[v] & chosen) for v in combo]
            if any(d != 2 for d in degs):
                continue
            seen = {combo[0]}
            stack = [combo[0]]
            while stack:
                u = stack.pop()
                for w in adj[u] & chosen:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == r:
                return True
    return False


def wcdim_fraction_elimination(n: int, edges) -> tuple[int, int, int]:
    """(mis count, constraint rank, nullity) via full-matrix elimination."""
    mis = all_mis_powerset(n, edges)
    rows = []
    for m in mis[1:]:
        row = [Fraction(0)] * n
        for v in m:
            row[v] += 1
        for v in mis[0]:
            row[v] -= 1
        rows.append(row)
    rank = 0
    for col in range(n):
        pivot = None
        for i in range(rank, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return len(mis), rank, n - rank
