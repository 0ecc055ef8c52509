"""Graph values, named graph families, and matching utilities.

Graphs are immutable: a vertex count ``order`` plus a tuple of edges with
dense integer ids (``edges[i].id == i``).  Endpoints are stored normalized
``u < v``.  Loops are always rejected; parallel edges are permitted only
when ``allow_parallel`` is set, which is needed solely for edge-multiplied
multigraphs.

Edge-list text format::

    n m [multi]
    u v          # one line per edge, 0-based, id = line order
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import FormatError, InvalidFamilyParams, InvalidVertex

FAMILIES = ("complete", "complete_bipartite", "cycle", "path", "circulant3")


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    @property
    def endpoints(self) -> frozenset[int]:
        return frozenset((self.u, self.v))


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple[Edge, ...]
    allow_parallel: bool = False

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"graph order must be >= 1, got {self.order}")
        seen: set[tuple[int, int]] = set()
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise ValueError(f"edge ids must be dense: edges[{i}].id == {e.id}")
            if not (0 <= e.u < e.v < self.order):
                raise ValueError(f"bad edge {e}: need 0 <= u < v < {self.order}")
            if (e.u, e.v) in seen and not self.allow_parallel:
                raise ValueError(f"duplicate edge {{{e.u},{e.v}}} in a simple graph")
            seen.add((e.u, e.v))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], tuple[int, ...]]:
        index: dict[tuple[int, int], list[int]] = {}
        for e in self.edges:
            index.setdefault((e.u, e.v), []).append(e.id)
        return {k: tuple(v) for k, v in index.items()}

    def edge_ids_between(self, a: int, b: int) -> tuple[int, ...]:
        """Ids of all edges with endpoints {a, b} (several when parallel)."""
        u, v = min(a, b), max(a, b)
        return self._pair_index.get((u, v), ())


def _graph_from_pairs(order: int, pairs: Iterable[tuple[int, int]],
                      allow_parallel: bool = False) -> Graph:
    edges = tuple(Edge(i, min(a, b), max(a, b)) for i, (a, b) in enumerate(pairs))
    return Graph(order, edges, allow_parallel)


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of a named graph family instance."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidFamilyParams(f"unknown family {self.family!r}")
        n_params = 2 if self.family == "complete_bipartite" else 1
        if len(self.params) != n_params:
            raise InvalidFamilyParams(
                f"{self.family} takes {n_params} parameter(s), got {self.params}")
        lower = {"complete": 1, "complete_bipartite": 1, "cycle": 3,
                 "path": 2, "circulant3": 3}[self.family]
        for p in self.params:
            if p < lower:
                raise InvalidFamilyParams(
                    f"{self.family} requires parameters >= {lower}, got {self.params}")

    def label(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"


def complete(n: int) -> Graph:
    """K_n with lexicographic edge ids: (0,1), (0,2), ..., (n-2,n-1)."""
    if n < 1:
        raise InvalidFamilyParams(f"complete requires n >= 1, got {n}")
    return _graph_from_pairs(n, itertools.combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q}: left vertices 0..p-1, right p..p+q-1, ids row-major."""
    if p < 1 or q < 1:
        raise InvalidFamilyParams(f"complete_bipartite requires p,q >= 1, got ({p},{q})")
    pairs = ((i, p + j) for i in range(p) for j in range(q))
    return _graph_from_pairs(p + q, pairs)


def cycle(n: int) -> Graph:
    """C_n with edge e_i = {i, (i+1) mod n} and id i."""
    if n < 3:
        raise InvalidFamilyParams(f"cycle requires n >= 3, got {n}")
    return _graph_from_pairs(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """P_n with edge e_i = {i, i+1}."""
    if n < 2:
        raise InvalidFamilyParams(f"path requires n >= 2, got {n}")
    return _graph_from_pairs(n, ((i, i + 1) for i in range(n - 1)))


def circulant3(n: int) -> Graph:
    """3-regular bipartite graph on n+n vertices, biadjacency I + P + P^-1.

    Row vertex i is joined to column vertices i-1, i, i+1 (mod n, offset by
    n).  Edge ids run row-major in that listed column order.  For n = 3 the
    edge set coincides with K_{3,3}.
    """
    if n < 3:
        raise InvalidFamilyParams(f"circulant3 requires n >= 3, got {n}")
    pairs = []
    for i in range(n):
        for c in ((i - 1) % n, i, (i + 1) % n):
            pairs.append((i, n + c))
    return _graph_from_pairs(2 * n, pairs)


def build_family(spec: FamilySpec) -> Graph:
    """Instantiate a family spec with its canonical vertex/edge indexing."""
    builders = {
        "complete": complete,
        "complete_bipartite": complete_bipartite,
        "cycle": cycle,
        "path": path,
        "circulant3": circulant3,
    }
    return builders[spec.family](*spec.params)


def multiply(g: Graph, k: int) -> Graph:
    """Multigraph with k parallel copies of every edge of g.

    Copy j of original edge e keeps its endpoints and gets id j*m + e.id.
    """
    if k < 1:
        raise InvalidFamilyParams(f"multiply requires k >= 1, got {k}")
    pairs = [(e.u, e.v) for _ in range(k) for e in g.edges]
    return _graph_from_pairs(g.order, pairs, allow_parallel=True)


def attach_pendants(g: Graph, v: int, t: int) -> Graph:
    """Attach t new degree-1 vertices n..n+t-1 to vertex v."""
    if not (0 <= v < g.order):
        raise InvalidVertex(f"vertex {v} not in [0, {g.order})")
    if t < 1:
        raise InvalidFamilyParams(f"attach_pendants requires t >= 1, got {t}")
    pairs = [(e.u, e.v) for e in g.edges] + [(v, g.order + j) for j in range(t)]
    return _graph_from_pairs(g.order + t, pairs, allow_parallel=g.allow_parallel)


def adjacent(e: Edge, f: Edge) -> bool:
    """True iff two distinct edges share an endpoint.

    Parallel copies share both endpoints and are therefore adjacent.
    """
    return bool(e.endpoints & f.endpoints)


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.order
    for e in g.edges:
        deg[e.u] += 1
        deg[e.v] += 1
    return deg


def is_connected(g: Graph) -> bool:
    """Connectivity over vertices (isolated vertices count)."""
    if g.order == 1:
        return True
    neigh: dict[int, set[int]] = {v: set() for v in range(g.order)}
    for e in g.edges:
        neigh[e.u].add(e.v)
        neigh[e.v].add(e.u)
    seen = {0}
    stack = [0]
    while stack:
        for w in neigh[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.order


def is_tree(g: Graph) -> bool:
    return not g.allow_parallel and g.num_edges == g.order - 1 and is_connected(g)


def max_matching_size(g: Graph) -> int:
    """Size of a maximum matching, computed exactly.

    Parallel edges never co-occur in a matching, so the computation runs on
    the underlying simple graph.  Exhaustive branch over the lowest-index
    matchable vertex with memoization on the remaining vertex set; fine for
    the desk-scale graphs this package deals with.
    """
    adj = [0] * g.order
    for e in g.edges:
        adj[e.u] |= 1 << e.v
        adj[e.v] |= 1 << e.u
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        while mask:
            low = mask & -mask
            v = low.bit_length() - 1
            if adj[v] & mask:
                break
            mask ^= low  # unmatchable vertex, drop it
        else:
            return 0
        cached = memo.get(mask)
        if cached is not None:
            return cached
        rest = mask ^ low
        result = best(rest)
        nb = adj[v] & rest
        while nb:
            ub = nb & -nb
            nb ^= ub
            result = max(result, 1 + best(rest ^ ub))
        memo[mask] = result
        return result

    return best((1 << g.order) - 1)


def random_tree(order: int, rng: random.Random) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if order < 2:
        raise InvalidFamilyParams(f"random_tree requires order >= 2, got {order}")
    if order == 2:
        return _graph_from_pairs(2, [(0, 1)])
    seq = [rng.randrange(order) for _ in range(order - 2)]
    degree = [1] * order
    for x in seq:
        degree[x] += 1
    pairs = []
    for x in seq:
        leaf = min(v for v in range(order) if degree[v] == 1)
        pairs.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    last = [v for v in range(order) if degree[v] == 1]
    pairs.append((last[0], last[1]))
    return _graph_from_pairs(order, pairs)


def write_edge_list(g: Graph) -> str:
    header = f"{g.order} {g.num_edges}"
    if g.allow_parallel:
        header += " multi"
    lines = [header] + [f"{e.u} {e.v}" for e in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format; raises FormatError with line numbers."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped))
    if not rows:
        raise FormatError("empty edge-list file")
    lineno, header = rows[0]
    parts = header.split()
    allow_parallel = False
    if len(parts) == 3 and parts[2] == "multi":
        allow_parallel = True
        parts = parts[:2]
    if len(parts) != 2:
        raise FormatError("header must be 'n m' or 'n m multi'", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FormatError("header must contain integers", lineno) from None
    body = rows[1:]
    if len(body) != m:
        raise FormatError(f"expected {m} edge lines, found {len(body)}", lineno)
    pairs = []
    for lineno, row in body:
        bits = row.split()
        if len(bits) != 2:
            raise FormatError("edge line must be 'u v'", lineno)
        try:
            u, v = int(bits[0]), int(bits[1])
        except ValueError:
            raise FormatError("edge endpoints must be integers", lineno) from None
        if u == v:
            raise FormatError("loops are not allowed", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"endpoint out of range [0, {n})", lineno)
        pairs.append((u, v))
    try:
        return _graph_from_pairs(n, pairs, allow_parallel)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
