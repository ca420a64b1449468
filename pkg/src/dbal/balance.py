"""Balanced pairs and the levels at which a graph is distance-balanced.

For a pair ``u, v`` the vertex set splits into those strictly closer to ``u``,
those strictly closer to ``v``, and the equidistant rest.  The pair is balanced
when the first two parts have equal size; a graph is balanced at level ``l``
when every pair at distance ``l`` is.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadParams, Disconnected, LevelOutOfRange, SameVertex
from .generators import GPParams
from .graph import UNREACHABLE, DistanceMatrix, Graph, bfs_distances, require_connected


@dataclass(frozen=True)
class PairBalance:
    u: int
    v: int
    distance: int
    closer_to_u: int
    closer_to_v: int
    equidistant: int

    @property
    def balanced(self) -> bool:
        return self.closer_to_u == self.closer_to_v


@dataclass(frozen=True)
class BalanceProfile:
    """Diameter, the balanced levels, and one witness per unbalanced level.

    The witness for level ``l`` is the lexicographically least pair ``u < v``
    at distance ``l`` that is not balanced.  Profiles produced from a formula
    rather than a computation carry no witnesses.
    """

    n: int
    diameter: int
    levels: tuple[int, ...]
    witnesses: dict[int, PairBalance] = field(default_factory=dict)

    @property
    def highly(self) -> bool:
        return self.levels == tuple(range(1, self.diameter + 1))

    @property
    def signature(self) -> tuple[int, tuple[int, ...]]:
        return (self.diameter, self.levels)

    def __hash__(self) -> int:
        return hash((self.n, self.diameter, self.levels))


def _rows(g: Graph, u: int, v: int, dm: DistanceMatrix | None):
    if dm is not None:
        du, dv = np.asarray(dm[u]), np.asarray(dm[v])
    else:
        du = np.array(bfs_distances(g, u))
        dv = np.array(bfs_distances(g, v))
    if (du == UNREACHABLE).any():
        raise Disconnected("graph is not connected")
    return du, dv


def w_partition(g: Graph, u: int, v: int, dm: DistanceMatrix | None = None) -> PairBalance:
    """Count the vertices closer to ``u``, closer to ``v``, and equidistant."""
    if u == v:
        raise SameVertex(f"pair needs two distinct vertices, got {u} twice")
    du, dv = _rows(g, u, v, dm)
    cu = int((du < dv).sum())
    cv = int((du > dv).sum())
    return PairBalance(u, v, int(du[v]), cu, cv, g.n - cu - cv)


def closer_counts(dm: DistanceMatrix) -> np.ndarray:
    """Matrix ``C`` with ``C[u, v]`` = number of vertices strictly closer to u than to v."""
    d = dm.dist
    n = d.shape[0]
    out = np.empty((n, n), dtype=np.int64)
    for u in range(n):
        out[u] = (d[u][None, :] < d).sum(axis=1)
    return out


def _profile_from_counts(n: int, d: np.ndarray, counts: np.ndarray) -> BalanceProfile:
    diam = int(d.max()) if n else 0
    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    bad = upper & (counts != counts.T)
    witnesses = {}
    # argwhere is row-major, so the first hit per level is the lexicographic minimum
    for u, v in np.argwhere(bad):
        lvl = int(d[u, v])
        if lvl not in witnesses:
            cu, cv = int(counts[u, v]), int(counts[v, u])
            witnesses[lvl] = PairBalance(int(u), int(v), lvl, cu, cv, n - cu - cv)
    levels = tuple(l for l in range(1, diam + 1) if l not in witnesses)
    return BalanceProfile(n, diam, levels, dict(sorted(witnesses.items())))


def balance_profile(g: Graph, dm: DistanceMatrix | None = None) -> BalanceProfile:
    dm = require_connected(g, dm)
    return _profile_from_counts(g.n, dm.dist, closer_counts(dm))


def is_l_distance_balanced(
    g: Graph, level: int, dm: DistanceMatrix | None = None
) -> tuple[bool, PairBalance | None]:
    """Return ``(balanced, witness)``; the witness is the least unbalanced pair, if any."""
    dm = require_connected(g, dm)
    d = dm.dist
    diam = int(d.max()) if g.n else 0
    if not 1 <= level <= diam:
        raise LevelOutOfRange(f"level {level} outside 1..{diam}")
    for u in range(g.n):
        for v in np.flatnonzero(d[u] == level):
            v = int(v)
            if v <= u:
                continue
            pb = w_partition(g, u, v, dm)
            if not pb.balanced:
                return False, pb
    return True, None


def shell_sizes(dm: DistanceMatrix, u: int) -> tuple[int, ...]:
    return tuple(int(c) for c in np.bincount(dm.dist[u]))


def is_distance_degree_regular(g: Graph, dm: DistanceMatrix | None = None) -> bool:
    dm = require_connected(g, dm)
    return len({shell_sizes(dm, u) for u in range(g.n)}) <= 1


# -- generalized Petersen fast path -----------------------------------------


def gp_distance_rows(params: GPParams) -> tuple[np.ndarray, np.ndarray]:
    """BFS rows from ``u_0`` and ``v_0`` of GP(n, k); every other row is a rotation."""
    from .generators import gp

    g = gp(params)
    return np.array(bfs_distances(g, 0)), np.array(bfs_distances(g, params.n))


def gp_diameter(params: GPParams) -> int:
    du, dv = gp_distance_rows(params)
    return int(max(du.max(), dv.max()))


def gp_mixed_pairs(params: GPParams, rows=None) -> list[PairBalance]:
    """PairBalance of ``(u_0, v_j)`` for every ``j`` in Z_n, in order of ``j``."""
    n = params.n
    du, dv = rows if rows is not None else gp_distance_rows(params)
    out = []
    for j in range(n):
        # d(v_j, u_i) = d(v_0, u_{i-j}) and d(v_j, v_i) = d(v_0, v_{i-j})
        dvj = np.concatenate([np.roll(dv[:n], j), np.roll(dv[n:], j)])
        cu = int((du < dvj).sum())
        cv = int((du > dvj).sum())
        out.append(PairBalance(0, n + j, int(du[n + j]), cu, cv, 2 * n - cu - cv))
    return out


def gp_balance_profile(params: GPParams | tuple[int, int]) -> BalanceProfile:
    """Balance profile of GP(n, k) from the ``n`` mixed pairs ``(u_0, v_j)`` alone.

    The rotation and reflection of the index set are automorphisms swapping any
    two outer (or any two inner) vertices, so only spoke-crossing pairs can be
    unbalanced, and rotation carries each of those to some ``(u_0, v_j)``.
    """
    if not isinstance(params, GPParams):
        params = GPParams(*params)
    du, dv = rows = gp_distance_rows(params)
    diam = int(max(du.max(), dv.max()))
    witnesses: dict[int, PairBalance] = {}
    for pb in gp_mixed_pairs(params, rows):
        if not pb.balanced and pb.distance not in witnesses:
            witnesses[pb.distance] = pb
    levels = tuple(l for l in range(1, diam + 1) if l not in witnesses)
    return BalanceProfile(2 * params.n, diam, levels, dict(sorted(witnesses.items())))


def gp2_mixed_distance(n: int, i: int) -> int:
    """Closed form for d(u_0, v_i) in GP(n, 2), valid for ``0 <= i <= n/2``."""
    if n < 5 or not 0 <= 2 * i <= n:
        raise BadParams(f"need n >= 5 and 0 <= i <= n/2, got n={n}, i={i}")
    if i % 2 == 0:
        return 1 + i // 2
    return 2 + (i - 1) // 2
