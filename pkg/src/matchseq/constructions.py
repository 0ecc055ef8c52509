"""Explicit edge orderings achieving the known ms/cms values of named families.

Every function returns an :class:`EdgeOrdering` whose matching number, as
computed by the independent checker, equals the family's known value
exactly.  The schemes:

* complete graphs: rotate a base (near-)perfect matching around the vertex
  circle, concatenating the rotated blocks; for even order the aligned
  blocks form a 1-factorization, for odd order they are the 2m+1
  near-perfect matchings.
* odd complete graphs, linear: decompose into Hamilton cycles by rotating a
  zigzag cycle, traversing each cycle by alternate edges (two passes around
  the odd cycle), and concatenating the cycles.
* doubled odd complete multigraphs: continue the same rotation for a second
  sweep of the Hamilton cycles, which supplies each edge's parallel copy
  and makes every block junction a rotated image of the first one, so the
  ordering closes up cyclically.
* complete bipartite, cycles, paths, circulant cubic bipartite: closed-form
  diagonal labelings of the biadjacency matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidFamilyParams, NoKnownFormula, SearchBudgetExceeded
from .graphs import (FamilySpec, Graph, circulant3, complete,
                     complete_bipartite, cycle, multiply, path)
from .orderings import (CYCLIC, LINEAR, EdgeOrdering, Mode, matching_number,
                        with_mode)


def _ids_for(g: Graph, pairs: Sequence[tuple[int, int]]) -> tuple[int, ...]:
    out = []
    for a, b in pairs:
        ids = g.edge_ids_between(a, b)
        if not ids:
            raise ValueError(f"no edge {{{a},{b}}} in graph")
        out.append(ids[0])
    return tuple(out)


@dataclass(frozen=True)
class RotationScheme:
    """A base matching swept around the vertex circle by a rotation.

    ``rotation[v]`` is the image of vertex v.  Applying the rotation
    ``block_count`` times must map the base matching back onto itself;
    ``blocks()`` checks that closure and yields the rotated blocks whose
    concatenation is the ordering.
    """

    base_matching: tuple[tuple[int, int], ...]
    rotation: tuple[int, ...]
    block_count: int

    @property
    def block_size(self) -> int:
        return len(self.base_matching)

    def blocks(self) -> list[tuple[tuple[int, int], ...]]:
        out = []
        block = list(self.base_matching)
        for _ in range(self.block_count):
            out.append(tuple(block))
            block = [(self.rotation[a], self.rotation[b]) for a, b in block]
        if {frozenset(e) for e in block} != \
                {frozenset(e) for e in self.base_matching}:
            raise ValueError("rotation does not close up after block_count steps")
        return out

    def ordering(self, g: Graph, mode: Mode) -> EdgeOrdering:
        pairs = [pair for block in self.blocks() for pair in block]
        return EdgeOrdering(g, _ids_for(g, pairs), mode)


# ---------------------------------------------------------------------------
# complete graphs, cyclic

def cms_complete_even(m: int) -> EdgeOrdering:
    """Cyclic ordering of K_{2m} with matching number exactly m-1.

    Base perfect matching {0,1},{2,2m-1},{3,2m-2},...,{m,m+1}; vertex 0 is
    the hub, vertices 1..2m-1 rotate by phi(v) = 1 + (v mod (2m-1)).  Block
    k lists phi^k of the base edges, so the 2m-1 aligned blocks are a
    1-factorization of K_{2m}.
    """
    if m < 2:
        raise InvalidFamilyParams(f"cms_complete_even requires m >= 2, got {m}")
    base = ((0, 1),) + tuple((j, 2 * m + 1 - j) for j in range(2, m + 1))
    phi = (0,) + tuple(1 + (v % (2 * m - 1)) for v in range(1, 2 * m))
    scheme = RotationScheme(base, phi, 2 * m - 1)
    return scheme.ordering(complete(2 * m), CYCLIC)


def cms_complete_odd(m: int) -> EdgeOrdering:
    """Cyclic ordering of K_{2m+1} with matching number exactly m-1.

    Base near-perfect matching {1,2m},{2,2m-1},...,{m,m+1} (vertex 0
    isolated), rotated by phi(v) = (v+1) mod (2m+1).  The 2m+1 aligned
    blocks partition the edges and their isolated vertices sweep all of
    0..2m.
    """
    if m < 2:
        raise InvalidFamilyParams(f"cms_complete_odd requires m >= 2, got {m}")
    n = 2 * m + 1
    base = tuple((j, 2 * m + 1 - j) for j in range(1, m + 1))
    phi = tuple((v + 1) % n for v in range(n))
    scheme = RotationScheme(base, phi, n)
    return scheme.ordering(complete(n), CYCLIC)


# ---------------------------------------------------------------------------
# complete graphs of odd order, linear, via Hamilton-cycle decomposition

def _zigzag_cycle(m: int) -> list[tuple[int, int]]:
    # Hamilton cycle (c, 0, 1, 2m-1, 2, 2m-2, ..., m+1, m, c) with hub c = 2m.
    c = 2 * m
    verts = [c, 0]
    lo, hi = 1, 2 * m - 1
    while lo <= hi:
        verts.append(lo)
        lo += 1
        if lo <= hi:
            verts.append(hi)
            hi -= 1
    return [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def _hamilton_blocks(m: int, count: int) -> list[tuple[int, int]]:
    """First ``count`` rotated Hamilton cycles, each in alternate-edge order.

    The alternate-edge traversal of an odd cycle (edge indices 0, 2, 4, ...
    taken twice around) keeps any m consecutive of its 2m+1 edges disjoint.
    theta rotates the rim 0..2m-1 by one step and fixes the hub, and the
    traversal start is locked at edge 0: with that start every window
    spanning a block boundary is a matching as well, which the fixture
    tests pin down.
    """
    cycle_edges = _zigzag_cycle(m)
    n_edges = len(cycle_edges)
    traversal = [cycle_edges[(2 * j) % n_edges] for j in range(n_edges)]
    c = 2 * m

    def theta(v: int, k: int) -> int:
        return c if v == c else (v + k) % (2 * m)

    pairs = []
    for k in range(count):
        pairs.extend((theta(a, k), theta(b, k)) for a, b in traversal)
    return pairs


def ms_complete_odd_walecki(m: int) -> EdgeOrdering:
    """Linear ordering of K_{2m+1} with matching number exactly m.

    Concatenates the m rotated Hamilton cycles in alternate-edge order.
    Read cyclically the same sequence drops below m: the wrap from the last
    cycle back to the first breaks, which is what the doubled-multigraph
    construction repairs.
    """
    if m < 2:
        raise InvalidFamilyParams(f"ms_complete_odd_walecki requires m >= 2, got {m}")
    g = complete(2 * m + 1)
    return EdgeOrdering(g, _ids_for(g, _hamilton_blocks(m, m)), LINEAR)


def cms_doubled_complete_odd(m: int) -> EdgeOrdering:
    """Cyclic ordering of the doubled multigraph 2K_{2m+1} with value m.

    Runs the Hamilton-cycle sweep twice: blocks m..2m-1 revisit the same
    cycles rotated onward, covering each edge's parallel copy.  Since the
    rim rotation has order 2m, every junction (including the wrap) is a
    rotated image of the first one, so all windows of size m stay matchings.
    A verbatim repeat of the linear sequence would not close up: its wrap
    junction is the one that already fails in the single cyclic read.
    """
    if m < 2:
        raise InvalidFamilyParams(f"cms_doubled_complete_odd requires m >= 2, got {m}")
    g2 = multiply(complete(2 * m + 1), 2)
    seen: dict[tuple[int, int], int] = {}
    seq = []
    for a, b in _hamilton_blocks(m, 2 * m):
        key = (min(a, b), max(a, b))
        copy = seen.get(key, 0)
        seen[key] = copy + 1
        seq.append(g2.edge_ids_between(a, b)[copy])
    return EdgeOrdering(g2, tuple(seq), CYCLIC)


# ---------------------------------------------------------------------------
# complete bipartite graphs

def ms_complete_bipartite(p: int, q: int) -> EdgeOrdering:
    """Linear ordering of K_{p,q} with matching number q-1 (p=q) or min(p,q).

    With a <= b sides, labels sweep diagonals of the a x b biadjacency
    grid.  Square case: cell (i, (i+k) mod b) gets label k*b + i + 1.
    Rectangular case: diagonals in order 0, b-1, b-2, ..., 1, so consecutive
    blocks shift by -1 (mod b) and a window of size a can never hit one row
    or column twice.
    """
    if p < 1 or q < 1:
        raise InvalidFamilyParams(f"ms_complete_bipartite requires p,q >= 1, got ({p},{q})")
    g = complete_bipartite(p, q)
    a, b = min(p, q), max(p, q)
    labels: dict[tuple[int, int], int] = {}  # (row, col) on the a x b grid
    if a == b:
        for i in range(a):
            for k in range(b):
                labels[(i, (i + k) % b)] = k * b + i + 1
    else:
        offsets = [0] + list(range(b - 1, 0, -1))
        for blk, d in enumerate(offsets):
            for i in range(a):
                labels[(i, (i + d) % b)] = blk * a + i + 1
    seq: list[int] = [0] * (p * q)
    for (r, c), label in labels.items():
        if p <= q:
            eid = r * q + c
        else:  # grid is transposed relative to the host graph
            eid = c * q + r
        seq[label - 1] = eid
    return EdgeOrdering(g, tuple(seq), LINEAR)


# ---------------------------------------------------------------------------
# cycles and paths

def _even_cycle_labels(q: int) -> tuple[dict[int, int], dict[int, int], int]:
    """Labels (diag, superdiag, wrap cell) for the C_{2q} biadjacency schemes.

    Two diagonal labelings, chosen by q mod 4 to match the locked fixtures;
    scheme A keeps all same-line label differences at +-(q-1) mod 2q, scheme
    B at +-(q-1) or q, so either way every q-1 cyclically consecutive labels
    sit in distinct rows and columns.  Scheme A is only a permutation of
    1..2q when q is even; scheme B works for every q >= 2.
    """
    diag: dict[int, int] = {}
    sup: dict[int, int] = {}
    if q % 4 == 0:
        diag[1] = 1
        for i in range(2, q + 1):
            diag[i] = 2 * q + 3 - 2 * i
        for i in range(1, q):
            sup[i] = q + 2 - 2 * i if i <= q // 2 else 3 * q + 2 - 2 * i
        wrap = q + 2
    else:
        h = (q + 1) // 2
        for i in range(1, h + 1):
            diag[i] = 2 * i - 1
        for i in range(h + 1, q + 1):
            diag[i] = 2 * (q // 2) - 2 * (i - h - 1)
        for i in range(1, q):
            sup[i] = q + 2 * i if i <= q // 2 else 3 * q + 1 - 2 * i
        wrap = q + 1
    return diag, sup, wrap


def cms_cycle(n: int) -> EdgeOrdering:
    """Cyclic ordering of C_n with matching number exactly floor((n-1)/2).

    Odd n: go around the cycle twice taking alternate edges, i.e. label t
    names edge e_{2(t-1) mod n}.  Even n = 2q: diagonal labeling of the
    I + P biadjacency matrix per :func:`_even_cycle_labels`.
    """
    if n < 3:
        raise InvalidFamilyParams(f"cms_cycle requires n >= 3, got {n}")
    g = cycle(n)
    if n % 2 == 1:
        seq = tuple((2 * t) % n for t in range(n))
        return EdgeOrdering(g, seq, CYCLIC)
    q = n // 2
    diag, sup, wrap = _even_cycle_labels(q)
    seq_list = [0] * n
    for i in range(1, q + 1):
        seq_list[diag[i] - 1] = (2 * i - 3) % n
    for i in range(1, q):
        seq_list[sup[i] - 1] = 2 * i - 2
    seq_list[wrap - 1] = n - 2
    return EdgeOrdering(g, tuple(seq_list), CYCLIC)


def _path_sequence(n: int) -> tuple[int, ...]:
    seq: list[int] = [0] * (n - 1)
    if n % 2 == 0:
        # diag (i,i) = q-i for i<q, super (i,i+1) = 2q-1-i, corner (q,q) = 2q-1
        q = n // 2
        for i in range(1, q):
            seq[(q - i) - 1] = 2 * (q - i)
        seq[2 * q - 2] = 0  # corner: label 2q-1 on edge e_0
        for i in range(1, q):
            seq[(2 * q - 1 - i) - 1] = 2 * (q - i) - 1
    else:
        # diag (i,i) = q+1-i, super (i,i+1) = 2q+1-i
        q = n // 2
        for i in range(1, q + 1):
            seq[(q + 1 - i) - 1] = 2 * (q - i) + 1
            seq[(2 * q + 1 - i) - 1] = 2 * (q - i)
    return tuple(seq)


def ms_path(n: int) -> EdgeOrdering:
    """Linear ordering of P_n attaining (n-2)/2 (even n) or (n-1)/2 (odd n)."""
    if n < 2:
        raise InvalidFamilyParams(f"ms_path requires n >= 2, got {n}")
    return EdgeOrdering(path(n), _path_sequence(n), LINEAR)


def cms_path(n: int) -> EdgeOrdering:
    """Cyclic reading of the path labeling.

    Even n keeps the linear value (n-2)/2; odd n drops to (n-3)/2, which is
    the best any cyclic ordering of an odd path can do (floor 1 for n = 3).
    """
    if n < 2:
        raise InvalidFamilyParams(f"cms_path requires n >= 2, got {n}")
    return EdgeOrdering(path(n), _path_sequence(n), CYCLIC)


# ---------------------------------------------------------------------------
# circulant cubic bipartite graphs

def _circulant_labels(n: int) -> tuple[dict[int, int], dict[int, int], dict[int, int]]:
    """Positions for the three wrapped diagonals of the I + P + P^-1 matrix.

    Returns per-row labels for the main diagonal, the P diagonal (cell
    (r, r+1), wrapping to (n, 1)) and the P^-1 diagonal (cell (r, r-1),
    wrapping to (1, n)), 1-based rows.  All same-row/column label pairs end
    up at cyclic distance >= n-1 mod 3n, with n-1 attained.
    """
    diag: dict[int, int] = {}
    P: dict[int, int] = {}
    Pinv: dict[int, int] = {}
    for r in range(1, n + 1):
        diag[r] = r if r < n else (3 * n if n % 2 else 2 * n)
        if r == n:
            P[r] = n + 1
        elif r % 2 == 1:
            P[r] = 2 * n + r + 1
        else:
            P[r] = n + r
        if r == 1:
            Pinv[r] = n
        elif r % 2 == 0:
            Pinv[r] = 2 * n + r - 1
        else:
            Pinv[r] = n + r
    return diag, P, Pinv


def ms_circulant3(n: int, mode: Mode = CYCLIC) -> EdgeOrdering:
    """Ordering of circulant3(n) with matching number exactly n-1.

    The closed-form three-diagonal labeling covers every n >= 3 and is
    self-checked; if the check ever failed the exact solver would be asked
    for a replacement witness (ascending-id DFS, i.e. greedy-first).
    """
    if n < 3:
        raise InvalidFamilyParams(f"ms_circulant3 requires n >= 3, got {n}")
    g = circulant3(n)
    diag, P, Pinv = _circulant_labels(n)
    seq = [0] * (3 * n)
    for r in range(1, n + 1):
        i = r - 1
        seq[diag[r] - 1] = 3 * i + 1   # cell (r, r)
        seq[P[r] - 1] = 3 * i + 2      # cell (r, r+1) wrapping
        seq[Pinv[r] - 1] = 3 * i       # cell (r, r-1) wrapping
    ordering = EdgeOrdering(g, tuple(seq), mode)
    if matching_number(ordering).value == n - 1:
        return ordering
    return _search_circulant3(g, n, mode)


def _search_circulant3(g: Graph, n: int, mode: Mode) -> EdgeOrdering:
    from .solver import SolveBudget, VALUE_FOUND, exists_ordering

    result = exists_ordering(g, n - 1, CYCLIC, SolveBudget())
    if result.status != VALUE_FOUND:
        raise SearchBudgetExceeded(
            f"no circulant3({n}) witness with value {n - 1} found in budget")
    return with_mode(result.witness, mode)


# ---------------------------------------------------------------------------
# biadjacency layouts and a family dispatcher

def biadjacency_layout(spec: FamilySpec) -> tuple[list[int], list[int]]:
    """Row/column vertex order under which the constructions' matrices print.

    Only bipartite-representable families have one: complete_bipartite,
    circulant3, even cycles, and paths.
    """
    family, params = spec.family, spec.params
    if family == "complete_bipartite":
        p, q = params
        return list(range(p)), list(range(p, p + q))
    if family == "circulant3":
        (n,) = params
        return list(range(n)), list(range(n, 2 * n))
    if family == "cycle":
        (n,) = params
        if n % 2 == 1:
            raise InvalidFamilyParams("odd cycles are not bipartite")
        q = n // 2
        return ([2 * (i - 1) for i in range(1, q + 1)],
                [(2 * j - 3) % n for j in range(1, q + 1)])
    if family == "path":
        (n,) = params
        q = n // 2
        if n % 2 == 0:
            return ([2 * (q - i) for i in range(1, q + 1)],
                    [2 * (q - j) + 1 for j in range(1, q + 1)])
        return ([2 * (q - i) + 1 for i in range(1, q + 1)],
                [2 * (q - j + 1) for j in range(1, q + 2)])
    raise InvalidFamilyParams(f"{family} has no biadjacency layout")


def family_ordering(family: str, params: tuple[int, ...], mode: Mode) -> EdgeOrdering:
    """Dispatch a family name + parameters + mode to its construction.

    Accepts the five named families plus ``doubled_complete`` (odd order,
    cyclic only).  Raises NoKnownFormula for combinations without a
    recorded construction (e.g. cyclic complete bipartite).
    """
    if family == "doubled_complete":
        (n,) = params
        if n < 5 or n % 2 == 0:
            raise InvalidFamilyParams(
                f"doubled_complete requires odd n >= 5, got {n}")
        if mode != CYCLIC:
            raise NoKnownFormula("doubled_complete orderings are cyclic only")
        return cms_doubled_complete_odd((n - 1) // 2)
    spec = FamilySpec(family, params)  # validates name and bounds
    if family == "complete":
        (n,) = params
        if n < 2:
            raise InvalidFamilyParams("complete needs n >= 2 for an ordering")
        if n <= 3:
            g = complete(n)
            return EdgeOrdering(g, tuple(range(g.num_edges)), mode)
        if n % 2 == 0:
            return with_mode(cms_complete_even(n // 2), mode)
        if mode == CYCLIC:
            return cms_complete_odd((n - 1) // 2)
        return ms_complete_odd_walecki((n - 1) // 2)
    if family == "complete_bipartite":
        if mode != LINEAR:
            raise NoKnownFormula("complete bipartite orderings are linear only")
        return ms_complete_bipartite(*params)
    if family == "cycle":
        return with_mode(cms_cycle(*params), mode)
    if family == "path":
        return ms_path(*params) if mode == LINEAR else cms_path(*params)
    if family == "circulant3":
        return ms_circulant3(*params, mode=mode)
    raise InvalidFamilyParams(f"unknown family {family!r}")
