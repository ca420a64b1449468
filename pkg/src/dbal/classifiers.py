"""Structural classifiers that predict balance profiles without counting pairs.

* diameter 2: balanced at level 2 exactly for joins of regular graphs, and at
  level 1 exactly for regular graphs;
* bipartite diameter 3: four mutually exclusive outcomes decided by degrees
  and by the pairs at distance 3;
* GP(n, 2): a closed-form classification by ``n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .balance import BalanceProfile, gp_diameter
from .errors import BadParams, NotBipartite, WrongDiameter
from .generators import GPParams
from .graph import (
    DistanceMatrix,
    Graph,
    bipartition,
    complement,
    connected_components,
    degree_sequence,
    induced_subgraph,
    is_regular,
    require_connected,
)


def join_factorization(g: Graph) -> list[list[int]]:
    """Vertex sets of the finest join decomposition of ``g``.

    These are the connected components of the complement; ``g`` is the join of
    the subgraphs they induce.  A single set means ``g`` is not a join.
    """
    return connected_components(complement(g))


class DiamTwoKind(enum.Enum):
    REGULAR = "regular"
    NONREGULAR_JOIN_OF_REGULARS = "nonregular-join-of-regulars"
    NOT_JOIN_OF_REGULARS = "not-join-of-regulars"


@dataclass(frozen=True)
class JoinFactor:
    vertices: tuple[int, ...]
    degree: int | None  # internal degree when the induced subgraph is regular


@dataclass(frozen=True)
class DiamTwoClassification:
    kind: DiamTwoKind
    factors: tuple[JoinFactor, ...]

    @property
    def predicted_levels(self) -> tuple[int, ...]:
        return {
            DiamTwoKind.REGULAR: (1, 2),
            DiamTwoKind.NONREGULAR_JOIN_OF_REGULARS: (2,),
            DiamTwoKind.NOT_JOIN_OF_REGULARS: (),
        }[self.kind]


def _require_diameter(g: Graph, want: int, dm: DistanceMatrix | None) -> DistanceMatrix:
    dm = require_connected(g, dm)
    diam = int(dm.dist.max()) if g.n else 0
    if diam != want:
        raise WrongDiameter(f"expected diameter {want}, got {diam}")
    return dm


def classify_diameter_two(g: Graph, dm: DistanceMatrix | None = None) -> DiamTwoClassification:
    _require_diameter(g, 2, dm)
    factors = []
    for comp in join_factorization(g):
        sub, _ = induced_subgraph(g, comp)
        degs = set(degree_sequence(sub))
        factors.append(JoinFactor(tuple(comp), degs.pop() if len(degs) == 1 else None))
    if is_regular(g):
        kind = DiamTwoKind.REGULAR
    elif len(factors) >= 2 and all(f.degree is not None for f in factors):
        kind = DiamTwoKind.NONREGULAR_JOIN_OF_REGULARS
    else:
        kind = DiamTwoKind.NOT_JOIN_OF_REGULARS
    return DiamTwoClassification(kind, tuple(factors))


class DiamThreeCase(enum.Enum):
    HIGHLY = "highly"
    ONLY_2 = "only-2"
    ONLY_3 = "only-3"
    NONE = "none"


_CASE_LEVELS = {
    DiamThreeCase.HIGHLY: (1, 2, 3),
    DiamThreeCase.ONLY_2: (2,),
    DiamThreeCase.ONLY_3: (3,),
    DiamThreeCase.NONE: (),
}


@dataclass(frozen=True)
class DiamThreeBipartiteClassification:
    case: DiamThreeCase
    size_x: int
    size_y: int
    degree_x: int | None  # common degree on side X, None if it varies
    degree_y: int | None

    @property
    def predicted_levels(self) -> tuple[int, ...]:
        return _CASE_LEVELS[self.case]


def _common(values) -> int | None:
    vals = set(values)
    return vals.pop() if len(vals) == 1 else None


def classify_diameter_three_bipartite(
    g: Graph, dm: DistanceMatrix | None = None
) -> DiamThreeBipartiteClassification:
    dm = _require_diameter(g, 3, dm)
    parts = bipartition(g)
    if parts is None:
        raise NotBipartite("graph has an odd cycle")
    xs, ys = sorted(parts.side_x), sorted(parts.side_y)
    deg = degree_sequence(g)
    kx, ky = _common(deg[u] for u in xs), _common(deg[v] for v in ys)
    nx, ny = len(xs), len(ys)

    sides_constant = kx is not None and ky is not None
    level1 = sides_constant and (kx == ky or (2 * kx == ny and 2 * ky == nx))
    level2 = sides_constant
    d = dm.dist
    level3 = all(
        2 * deg[u] + nx == 2 * deg[v] + ny for u in xs for v in ys if d[u, v] == 3
    )

    if level1:
        case = DiamThreeCase.HIGHLY
    elif level2 and level3:
        raise AssertionError("balanced at levels 2 and 3 but not 1; impossible for bipartite diameter 3")
    elif level2:
        case = DiamThreeCase.ONLY_2
    elif level3:
        case = DiamThreeCase.ONLY_3
    else:
        case = DiamThreeCase.NONE
    return DiamThreeBipartiteClassification(case, nx, ny, kx, ky)


def gp2_predicted_profile(n: int) -> BalanceProfile:
    """Balance profile of GP(n, 2) from the classification by ``n``.

    Only the diameter is computed (by BFS); the levels follow from ``n``.  The
    returned profile has no witnesses.
    """
    if n < 5:
        raise BadParams("GP(n, 2) needs n >= 5")
    diam = gp_diameter(GPParams(n, 2))
    if n in (5, 7, 10):
        levels = tuple(range(1, diam + 1))
    elif n in (9, 11):
        levels = (diam - 1, diam)
    else:
        levels = (diam,)
    return BalanceProfile(2 * n, diam, levels, {})
