"""Graph families: generalized Petersen graphs, Cayley graphs, joins, classics.

Labelling conventions (all results refer to these):

* ``gp(n, k)``: outer vertex ``u_i`` is ``i``, inner vertex ``v_i`` is ``n + i``.
* ``hypercube(d)``: vertex = bitmask, adjacent iff Hamming distance 1.
* ``complete_bipartite(a, b)``: side A is ``0..a-1``, side B is ``a..a+b-1``.
* ``join`` / ``disjoint_union``: parts relabelled consecutively in list order.
* Cayley graphs: vertex ``i`` is group element ``i`` of the table.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BadParams,
    ClosureTooLarge,
    EmptyList,
    FormatError,
    IdentityInSet,
    InvalidGroupTable,
    NotGenerating,
    NotInverseClosed,
)
from .graph import Graph, build_graph, is_connected, read_edge_list


# -- generalized Petersen graphs --------------------------------------------


@dataclass(frozen=True)
class GPParams:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3 or self.k < 1 or 2 * self.k >= self.n:
            raise BadParams(f"GP({self.n},{self.k}) needs n >= 3 and 1 <= k < n/2")


def gp_edges(n: int, k: int) -> list[tuple[int, int]]:
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))  # outer
        edges.append((n + i, n + (i + k) % n))  # inner
        edges.append((i, n + i))  # spoke
    return edges


def gp(n: int | GPParams, k: int | None = None) -> Graph:
    """The generalized Petersen graph GP(n, k); accepts ``gp(n, k)`` or ``gp(GPParams)``."""
    params = n if isinstance(n, GPParams) else GPParams(n, k)
    return build_graph(2 * params.n, gp_edges(params.n, params.k))


# -- finite groups ----------------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """A finite group as a multiplication table over element indices ``0..m-1``.

    ``product[x][y]`` is the index of ``x * y``.  The constructor checks the
    group axioms; associativity is exhaustive up to order 64 and sampled with
    1000 random triples above that.
    """

    product: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    element_names: tuple[str, ...] | None = None

    @property
    def order(self) -> int:
        return len(self.product)

    def __post_init__(self) -> None:
        m = len(self.product)
        full = set(range(m))
        if m == 0:
            raise InvalidGroupTable("group must be nonempty")
        for row in self.product:
            if len(row) != m or set(row) != full:
                raise InvalidGroupTable("product table is not a Latin square")
        for col in range(m):
            if {self.product[r][col] for r in range(m)} != full:
                raise InvalidGroupTable("product table is not a Latin square")
        e = self.identity
        if not 0 <= e < m or any(
            self.product[e][x] != x or self.product[x][e] != x for x in range(m)
        ):
            raise InvalidGroupTable("identity is not neutral")
        if len(self.inverse) != m or any(
            self.product[x][self.inverse[x]] != e for x in range(m)
        ):
            raise InvalidGroupTable("inverse array is wrong")
        if self.element_names is not None and len(self.element_names) != m:
            raise InvalidGroupTable("element_names has the wrong length")
        p = self.product
        if m <= 64:
            triples: Iterable = itertools.product(range(m), repeat=3)
        else:
            rng = random.Random(0)
            triples = [(rng.randrange(m), rng.randrange(m), rng.randrange(m)) for _ in range(1000)]
        for x, y, z in triples:
            if p[p[x][y]][z] != p[x][p[y][z]]:
                raise InvalidGroupTable(f"not associative at ({x}, {y}, {z})")

    @classmethod
    def from_product(cls, product: Sequence[Sequence[int]], identity: int,
                     element_names: Sequence[str] | None = None) -> GroupTable:
        """Build a table, deriving the inverse array from ``product``."""
        product = tuple(tuple(int(x) for x in row) for row in product)
        m = len(product)
        if not 0 <= identity < m:
            raise InvalidGroupTable("identity out of range")
        inverse = []
        for x in range(m):
            try:
                inverse.append(product[x].index(identity))
            except ValueError:
                raise InvalidGroupTable(f"element {x} has no inverse") from None
        names = tuple(element_names) if element_names is not None else None
        return cls(product, identity, tuple(inverse), names)

    def mul(self, x: int, y: int) -> int:
        return self.product[x][y]

    def is_abelian(self) -> bool:
        m = self.order
        return all(self.product[x][y] == self.product[y][x] for x in range(m) for y in range(x))

    def index(self, name: str) -> int:
        if self.element_names is None:
            raise KeyError(name)
        return self.element_names.index(name)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise BadParams("cyclic group order must be >= 1")
    product = [[(x + y) % n for y in range(n)] for x in range(n)]
    return GroupTable.from_product(product, 0)


def dihedral_group(n: int) -> GroupTable:
    """D_n of order 2n.  Element ``i`` is r^i, element ``n + i`` is t r^i."""
    if n < 1:
        raise BadParams("dihedral group needs n >= 1")

    def mul(x: int, y: int) -> int:
        a, i = divmod(x, n)
        b, j = divmod(y, n)
        # t^a r^i t^b r^j = t^(a+b) r^((-1)^b i + j), using r t = t r^-1
        exp = ((-i if b else i) + j) % n
        return ((a + b) % 2) * n + exp

    product = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = [f"r^{i}" for i in range(n)] + [f"tr^{i}" for i in range(n)]
    return GroupTable.from_product(product, 0, names)


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    """G x H with pair ``(x, y)`` at index ``x * |H| + y``."""
    mh = h.order
    m = g.order * mh
    product = []
    for a in range(m):
        x1, y1 = divmod(a, mh)
        row = []
        for b in range(m):
            x2, y2 = divmod(b, mh)
            row.append(g.product[x1][x2] * mh + h.product[y1][y2])
        product.append(row)
    return GroupTable.from_product(product, g.identity * mh + h.identity)


# -- permutation groups -----------------------------------------------------

Perm = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 10080


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Image tuple (0-based) of a permutation given in 1-based cycle notation."""
    img = list(range(degree))
    for cyc in cycles:
        pts = [p - 1 for p in cyc]
        if any(not 0 <= p < degree for p in pts) or len(set(pts)) != len(pts):
            raise BadParams(f"bad cycle {tuple(cyc)} for degree {degree}")
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a] = b
    return tuple(img)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse cycle notation such as ``"(1 2)(3 4)"`` or ``"()"``."""
    text = text.strip()
    if not text or text.count("(") != text.count(")"):
        raise FormatError(f"bad cycle notation {text!r}")
    cycles = []
    for chunk in text.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise FormatError(f"bad cycle notation {text!r}")
        body = chunk[1:-1].replace(",", " ").split()
        try:
            cycles.append([int(p) for p in body])
        except ValueError:
            raise FormatError(f"bad cycle notation {text!r}") from None
    return perm_from_cycles(degree, cycles)


def perm_to_cycles(p: Perm) -> str:
    """1-based cycle notation, fixed points omitted, ``"()"`` for the identity."""
    seen = set()
    parts = []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = p[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = p[x]
        parts.append("(" + " ".join(str(c + 1) for c in cyc) + ")")
    return "".join(parts) or "()"


def compose(p: Perm, q: Perm) -> Perm:
    """The product ``p * q``: apply ``p`` first, then ``q``."""
    return tuple(q[x] for x in p)


def permutation_group_closure(
    degree: int, gens: Sequence[Perm], cap: int = DEFAULT_CLOSURE_CAP
) -> tuple[GroupTable, list[Perm]]:
    """Enumerate the group generated by ``gens`` breadth-first.

    Elements are numbered in discovery order: the identity, then the distinct
    generators in the given order, then products ``x * g`` as the queue is
    processed.  Products compose left to right (``x * g`` applies ``x`` first).
    """
    ident = tuple(range(degree))
    for g in gens:
        if sorted(g) != list(ident):
            raise BadParams(f"{g} is not a permutation of {degree} points")
    elements = [ident]
    index = {ident: 0}
    for g in gens:
        g = tuple(g)
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    queue = deque(range(len(elements)))
    while queue:
        x = elements[queue.popleft()]
        for g in gens:
            y = compose(x, tuple(g))
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureTooLarge(f"group order exceeds cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                queue.append(index[y])
    product = [[index[compose(x, y)] for y in elements] for x in elements]
    names = [perm_to_cycles(p) for p in elements]
    return GroupTable.from_product(product, 0, names), elements


# -- Cayley graphs ----------------------------------------------------------


@dataclass(frozen=True)
class CayleySpec:
    group: GroupTable
    connection_set: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "connection_set", frozenset(self.connection_set))
        grp = self.group
        for s in self.connection_set:
            if not 0 <= s < grp.order:
                raise BadParams(f"connection element {s} out of range")
        if grp.identity in self.connection_set:
            raise IdentityInSet("connection set contains the identity")
        for s in self.connection_set:
            if grp.inverse[s] not in self.connection_set:
                raise NotInverseClosed(f"inverse of element {s} missing from connection set")


def cayley(spec: CayleySpec) -> Graph:
    """Cay(G; S): ``x ~ y`` iff ``x^-1 y`` is in S.  Raises NotGenerating if disconnected."""
    grp = spec.group
    edges = [
        (x, grp.product[x][s]) for x in range(grp.order) for s in spec.connection_set
    ]
    g = build_graph(grp.order, edges)
    if not is_connected(g):
        raise NotGenerating("connection set does not generate the group")
    return g


def circulant(n: int, steps: Iterable[int]) -> Graph:
    """Cay(Z_n; {+-s}) for the given steps."""
    conn = set()
    for s in steps:
        s %= n
        conn.add(s)
        conn.add((-s) % n)
    return cayley(CayleySpec(cyclic_group(n), frozenset(conn)))


def load_cayley_json(path) -> CayleySpec:
    """Read ``{"order", "product", "identity", "gens"}``; ``gens`` is the connection set."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
        order = int(doc["order"])
        product = doc["product"]
        identity = int(doc["identity"])
        gens = [int(x) for x in doc["gens"]]
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"bad Cayley file {path}: {exc}") from None
    if len(product) != order:
        raise FormatError(f"product table has {len(product)} rows, expected {order}")
    return CayleySpec(GroupTable.from_product(product, identity), frozenset(gens))


def dump_cayley_json(spec: CayleySpec) -> str:
    grp = spec.group
    return json.dumps({
        "order": grp.order,
        "product": [list(row) for row in grp.product],
        "identity": grp.identity,
        "gens": sorted(spec.connection_set),
    })


# -- joins, unions, classic families ----------------------------------------


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for part in parts:
        edges.extend((u + offset, v + offset) for u, v in part.edges())
        offset += part.n
    return build_graph(offset, edges)


def join(parts: Sequence[Graph]) -> Graph:
    """Disjoint union of ``parts`` plus every edge between different parts."""
    if not parts:
        raise EmptyList("join needs at least one part")
    edges = list(disjoint_union(parts).edges())
    starts = list(itertools.accumulate([0] + [p.n for p in parts]))
    for a, b in itertools.combinations(range(len(parts)), 2):
        for u in range(starts[a], starts[a + 1]):
            for v in range(starts[b], starts[b + 1]):
                edges.append((u, v))
    return build_graph(starts[-1], edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise BadParams("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices (length ``n - 1``)."""
    if n < 1:
        raise BadParams("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise BadParams("complete graph needs n >= 1")
    return build_graph(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParams("complete bipartite graph needs a, b >= 1")
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    if d < 0:
        raise BadParams("hypercube dimension must be >= 0")
    n = 1 << d
    return build_graph(n, [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)])


# -- generator strings ------------------------------------------------------


def _ints(text: str, count: int | None, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise FormatError(f"bad {what} arguments: {text!r}") from None
    if count is not None and len(vals) != count:
        raise FormatError(f"{what} takes {count} argument(s), got {text!r}")
    return vals


def from_spec(spec: str) -> Graph:
    """Build a graph from a generator string.

    Accepted forms: ``gp:n,k``, ``cycle:n``, ``path:n``, ``complete:n``,
    ``kbip:a,b``, ``cube:d``, ``circulant:n:s1,s2,...``, ``cayley:@file.json``
    and ``edges:@file`` (edge-list format).
    """
    kind, sep, rest = spec.partition(":")
    if not sep or not rest:
        raise FormatError(f"bad generator string {spec!r}")
    if kind == "gp":
        n, k = _ints(rest, 2, kind)
        return gp(n, k)
    if kind in ("cycle", "path", "complete", "cube"):
        (x,) = _ints(rest, 1, kind)
        return {"cycle": cycle, "path": path, "complete": complete, "cube": hypercube}[kind](x)
    if kind == "kbip":
        a, b = _ints(rest, 2, kind)
        return complete_bipartite(a, b)
    if kind == "circulant":
        n_text, sep, steps = rest.partition(":")
        if not sep:
            raise FormatError(f"circulant needs n:s1,s2,... got {rest!r}")
        (n,) = _ints(n_text, 1, kind)
        if n < 1:
            raise BadParams("circulant needs n >= 1")
        return circulant(n, _ints(steps, None, kind))
    if kind in ("cayley", "edges"):
        if not rest.startswith("@"):
            raise FormatError(f"{kind} expects @file, got {rest!r}")
        if kind == "cayley":
            return cayley(load_cayley_json(rest[1:]))
        try:
            return read_edge_list(rest[1:])
        except OSError as exc:
            raise FormatError(str(exc)) from None
    raise FormatError(f"unknown generator {kind!r}")
