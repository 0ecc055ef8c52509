"""Closed-form value tables, the verification harness, and experiment drivers.

``predicted`` returns the known ms/cms value of a family instance,
``verify_families`` cross-checks construction output against those values
(and, on small instances, against the exact solver), and the ``explore_*``
functions produce raw data for the open questions about multigraph copies,
the ms-cms gap, and doubled graphs.  Explorers are data producers, not
theorem provers: rows that run out of budget are flagged unresolved rather
than extrapolated.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .constructions import family_ordering
from .errors import InvalidFamilyParams, NoKnownFormula
from .graphs import (FamilySpec, Graph, _graph_from_pairs, attach_pendants,
                     degrees, is_connected, is_tree, max_matching_size,
                     multiply)
from .orderings import CYCLIC, LINEAR, Mode, matching_number
from .solver import VALUE_FOUND, SolveBudget, cms_exact, ms_exact


@dataclass(frozen=True)
class PredictedValue:
    family: str
    params: tuple[int, ...]
    mode: Mode
    value: int
    provenance: str


def predicted(family: str | FamilySpec, mode: Mode,
              params: tuple[int, ...] | None = None) -> PredictedValue:
    """Known value for a family/mode, or NoKnownFormula.

    Accepts a FamilySpec or a family name plus params; the extra name
    ``doubled_complete`` covers the doubled odd complete multigraph.
    Degenerate instances whose general formula would fall below 1 (single
    edges, the 2-edge path read cyclically) are matchings or floor cases
    and are reported with value 1.
    """
    if isinstance(family, FamilySpec):
        family, params = family.family, family.params
    if params is None:
        raise ValueError("params required when family is given by name")

    def pv(value: int, why: str) -> PredictedValue:
        return PredictedValue(family, params, mode, value, why)

    if family == "complete":
        (n,) = params
        if n == 2:
            return pv(1, "K_2 is a single edge, hence a matching: value m = 1")
        if n < 2:
            raise NoKnownFormula("complete graphs below order 2 have no edges")
        if mode == LINEAR:
            return pv((n - 1) // 2, "ms(K_n) = floor((n-1)/2)")
        if n == 3:
            return pv(1, "cms(K_3) = 1")
        if n % 2 == 0:
            return pv((n - 1) // 2, "cms(K_n) = floor((n-1)/2) for even n >= 4")
        return pv((n - 3) // 2, "cms(K_n) = floor((n-3)/2) for odd n >= 5")
    if family == "complete_bipartite":
        p, q = min(params), max(params)
        if mode != LINEAR:
            raise NoKnownFormula("no cyclic value on record for complete bipartite")
        if p == q == 1:
            return pv(1, "K_{1,1} is a single edge: value m = 1")
        if p == q:
            return pv(q - 1, "ms(K_{q,q}) = q - 1")
        return pv(p, "ms(K_{p,q}) = min(p,q) when p != q")
    if family == "cycle":
        (n,) = params
        if n < 3:
            raise NoKnownFormula("cycles need n >= 3")
        return pv((n - 1) // 2, "cms(C_n) = ms(C_n) = floor((n-1)/2)")
    if family == "path":
        (n,) = params
        if n < 2:
            raise NoKnownFormula("paths need n >= 2")
        if n == 2:
            return pv(1, "P_2 is a single edge: value m = 1")
        if n % 2 == 0:
            return pv((n - 2) // 2, "cms(P_n) = ms(P_n) = (n-2)/2 for even n")
        if mode == LINEAR:
            return pv((n - 1) // 2, "ms(P_n) = (n-1)/2 for odd n")
        if n == 3:
            return pv(1, "cms(P_3) = 1 (value floor; both edges meet)")
        return pv((n - 3) // 2, "cms(P_n) = (n-3)/2 for odd n >= 5")
    if family == "circulant3":
        (n,) = params
        if n < 3:
            raise NoKnownFormula("circulant3 needs n >= 3")
        return pv(n - 1, "cms = ms = n - 1 for the I+P+P^-1 cubic bipartite graph")
    if family == "doubled_complete":
        (n,) = params
        if n < 5 or n % 2 == 0 or mode != CYCLIC:
            raise NoKnownFormula("doubled complete value on record: cyclic, odd n >= 5")
        return pv((n - 1) // 2, "cms(2K_{2m+1}) = m")
    raise NoKnownFormula(f"no formula table for family {family!r}")


# ---------------------------------------------------------------------------
# verification harness

@dataclass(frozen=True)
class VerificationRow:
    family: str
    params: tuple[int, ...]
    mode: Mode
    predicted: int
    constructed: int
    exact: int | None
    passed: bool
    citation: str
    runtime_ms: float
    nodes: int

    @property
    def case(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))}) {self.mode}"

    def to_json_obj(self) -> dict:
        return {
            "case": self.case,
            "predicted": self.predicted,
            "constructed": self.constructed,
            "exact": self.exact,
            "status": "pass" if self.passed else "fail",
            "citation": self.citation,
            "runtime_ms": round(self.runtime_ms, 3),
            "nodes": self.nodes,
        }


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple[VerificationRow, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json_obj(self) -> dict:
        return {"all_pass": self.all_pass,
                "rows": [r.to_json_obj() for r in self.rows]}

    def to_text(self) -> str:
        header = f"{'case':<28} {'pred':>4} {'built':>5} {'exact':>5} {'status':<6} {'ms':>8} {'nodes':>9}"
        lines = [header, "-" * len(header)]
        for r in self.rows:
            exact = "-" if r.exact is None else str(r.exact)
            lines.append(
                f"{r.case:<28} {r.predicted:>4} {r.constructed:>5} {exact:>5} "
                f"{'pass' if r.passed else 'FAIL':<6} {r.runtime_ms:>8.1f} {r.nodes:>9}")
        lines.append(f"{len(self.rows)} cases, "
                     f"{'all pass' if self.all_pass else 'FAILURES PRESENT'}")
        return "\n".join(lines) + "\n"


# case descriptor: (family, params, mode, run_exact, max_nodes, max_seconds)
def _run_case(desc: tuple) -> VerificationRow:
    family, params, mode, run_exact, max_nodes, max_seconds = desc
    started = time.perf_counter()
    pred = predicted(family, mode, params)
    ordering = family_ordering(family, params, mode)
    constructed = matching_number(ordering).value
    exact = None
    nodes = 0
    if run_exact:
        solve = ms_exact if mode == LINEAR else cms_exact
        res = solve(ordering.graph, SolveBudget(max_nodes, max_seconds))
        nodes = res.nodes_explored
        exact = res.value if res.status == VALUE_FOUND else None
    passed = constructed == pred.value and (exact is None or exact == pred.value)
    return VerificationRow(family, params, mode, pred.value, constructed, exact,
                           passed, pred.provenance,
                           (time.perf_counter() - started) * 1000.0, nodes)


def _env_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MATCHSEQ_THREADS", "1")))
    except ValueError:
        return 1


def verify_families(max_complete: int = 8, max_cycle: int = 16,
                    max_bipartite: int = 8, max_circulant: int = 8,
                    doubled_ms: tuple[int, ...] = (2, 3),
                    exact_up_to_edges: int = 12,
                    budget: SolveBudget = SolveBudget(),
                    jobs: int | None = None) -> VerificationReport:
    """Check constructed value == predicted for every family in range.

    Instances with at most ``exact_up_to_edges`` edges are additionally
    solved exactly and must agree.  Rows are independent; MATCHSEQ_THREADS
    (or ``jobs``) > 1 fans them out over a process pool.  The assembled
    report is sorted, so output does not depend on the worker count.
    """
    descs: list[tuple] = []

    def add(family: str, params: tuple[int, ...], mode: Mode, n_edges: int):
        descs.append((family, params, mode, n_edges <= exact_up_to_edges,
                      budget.max_nodes, budget.max_seconds))

    for n in range(3, max_complete + 1):
        m_edges = n * (n - 1) // 2
        add("complete", (n,), LINEAR, m_edges)
        add("complete", (n,), CYCLIC, m_edges)
    for p in range(1, max_bipartite + 1):
        for q in range(p, max_bipartite + 1):
            add("complete_bipartite", (p, q), LINEAR, p * q)
    for n in range(3, max_cycle + 1):
        add("cycle", (n,), LINEAR, n)
        add("cycle", (n,), CYCLIC, n)
    for n in range(2, max_cycle + 1):
        add("path", (n,), LINEAR, n - 1)
        add("path", (n,), CYCLIC, n - 1)
    for n in range(3, max_circulant + 1):
        add("circulant3", (n,), LINEAR, 3 * n)
        add("circulant3", (n,), CYCLIC, 3 * n)
    for m in doubled_ms:
        add("doubled_complete", (2 * m + 1,), CYCLIC, 2 * m * (2 * m + 1))

    jobs = jobs if jobs is not None else _env_jobs()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_case, descs))
    else:
        rows = [_run_case(d) for d in descs]
    rows.sort(key=lambda r: (r.family, r.params, r.mode))
    return VerificationReport(tuple(rows))


# ---------------------------------------------------------------------------
# pendant-edge lemma (trees)

@dataclass(frozen=True)
class PendantLemmaReport:
    order: int
    vertex: int
    linear_pendants: int
    linear_value: int | None
    cyclic_pendants: int
    cyclic_value: int | None
    passed: bool


def pendant_lemma_check(tree: Graph, vertex: int | None = None,
                        budget: SolveBudget = SolveBudget()) -> PendantLemmaReport:
    """Exact check that n+1 pendants force ms = 1 and n+2 force cms = 1.

    Scoped to trees: with m = n-1 original edges the pendant edges always
    outnumber them, so some two pendants (which all share the chosen
    vertex) must sit in one window.  The pendants attach to the
    maximum-degree vertex unless one is given.
    """
    if not is_tree(tree):
        raise InvalidFamilyParams("pendant_lemma_check requires a tree")
    n = tree.order
    if vertex is None:
        deg = degrees(tree)
        vertex = max(range(n), key=lambda v: (deg[v], -v))
    linear_host = attach_pendants(tree, vertex, n + 1)
    cyclic_host = attach_pendants(tree, vertex, n + 2)
    res_lin = ms_exact(linear_host, budget)
    res_cyc = cms_exact(cyclic_host, budget)
    lin_val = res_lin.value if res_lin.status == VALUE_FOUND else None
    cyc_val = res_cyc.value if res_cyc.status == VALUE_FOUND else None
    return PendantLemmaReport(n, vertex, n + 1, lin_val, n + 2, cyc_val,
                              lin_val == 1 and cyc_val == 1)


# ---------------------------------------------------------------------------
# open-question explorers

@dataclass(frozen=True)
class Q1Row:
    k: int
    ms_value: int | None
    cms_value: int | None
    resolved: bool
    ms_reached: bool | None
    cms_reached: bool | None


@dataclass(frozen=True)
class Q1Result:
    matching_number: int
    rows: tuple[Q1Row, ...]


def explore_q1(g: Graph, k_max: int, budget: SolveBudget = SolveBudget()) -> Q1Result:
    """Exact ms/cms of kG for k = 1..k_max, flagging whether the matching
    number of g is reached."""
    p = max_matching_size(g)
    rows = []
    for k in range(1, k_max + 1):
        gk = multiply(g, k)
        res_ms = ms_exact(gk, budget)
        res_cms = cms_exact(gk, budget)
        resolved = res_ms.status == VALUE_FOUND and res_cms.status == VALUE_FOUND
        rows.append(Q1Row(
            k,
            res_ms.value if res_ms.status == VALUE_FOUND else None,
            res_cms.value if res_cms.status == VALUE_FOUND else None,
            resolved,
            (res_ms.value == p) if res_ms.status == VALUE_FOUND else None,
            (res_cms.value == p) if res_cms.status == VALUE_FOUND else None))
    return Q1Result(p, tuple(rows))


@dataclass(frozen=True)
class Q2Row:
    edges: tuple[tuple[int, int], ...]
    ms_value: int | None
    cms_value: int | None
    resolved: bool

    @property
    def gap(self) -> int | None:
        if self.ms_value is None or self.cms_value is None:
            return None
        return self.ms_value - self.cms_value


@dataclass(frozen=True)
class Q2Result:
    n_max: int
    rows: tuple[Q2Row, ...]
    partial: bool

    @property
    def max_gap(self) -> int:
        gaps = [r.gap for r in self.rows if r.gap is not None]
        return max(gaps, default=0)

    @property
    def witnesses(self) -> tuple[Q2Row, ...]:
        top = self.max_gap
        return tuple(r for r in self.rows if r.gap == top)


def _canonical_edge_subsets(n: int):
    """Yield one representative edge set per isomorphism class on n labels.

    A subset is kept iff its edge bitmask is minimal over all vertex
    permutations.  A sorted-degree-sequence prefilter skips most of the
    permutation work; the permutation test keeps the dedup sound (degree
    sequences alone can merge non-isomorphic graphs).
    """
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in itertools.permutations(range(n)):
        perm_maps.append(tuple(index[tuple(sorted((perm[u], perm[v])))]
                               for u, v in pairs))
    seen_degseq_min: dict[tuple[int, ...], list[int]] = {}
    for mask in range(1, 1 << len(pairs)):
        deg = [0] * n
        members = [i for i in range(len(pairs)) if mask >> i & 1]
        for i in members:
            u, v = pairs[i]
            deg[u] += 1
            deg[v] += 1
        key = tuple(sorted(deg))
        bucket = seen_degseq_min.setdefault(key, [])
        minimal = True
        for pm in perm_maps:
            mapped = 0
            for i in members:
                mapped |= 1 << pm[i]
            if mapped < mask:
                minimal = False
                break
        if minimal:
            bucket.append(mask)
            yield [pairs[i] for i in members]


def explore_q2(n_max: int, budget: SolveBudget = SolveBudget(),
               connected_only: bool = False) -> Q2Result:
    """Exhaust graphs on at most n_max vertices and report the largest
    ms - cms gap with every extremal witness."""
    if n_max > 7:
        raise InvalidFamilyParams("explore_q2 enumerates up to 7 vertices")
    t0 = time.perf_counter()
    rows = []
    partial = False
    for pair_list in _canonical_edge_subsets(n_max):
        if time.perf_counter() - t0 > budget.max_seconds:
            partial = True
            break
        g = _graph_from_pairs(n_max, pair_list)
        if connected_only:
            relabel = {v: i for i, v in
                       enumerate(sorted({v for p in pair_list for v in p}))}
            sub = _graph_from_pairs(len(relabel),
                                    [(relabel[a], relabel[b]) for a, b in pair_list])
            if not is_connected(sub):
                continue
        res_ms = ms_exact(g, budget)
        res_cms = cms_exact(g, budget)
        resolved = res_ms.status == VALUE_FOUND and res_cms.status == VALUE_FOUND
        partial = partial or not resolved
        rows.append(Q2Row(
            tuple(pair_list),
            res_ms.value if res_ms.status == VALUE_FOUND else None,
            res_cms.value if res_cms.status == VALUE_FOUND else None,
            resolved))
    return Q2Result(n_max, tuple(rows), partial)


@dataclass(frozen=True)
class Q3Result:
    ms_single: int | None
    cms_doubled: int | None
    resolved: bool

    @property
    def equal(self) -> bool | None:
        if not self.resolved:
            return None
        return self.ms_single == self.cms_doubled


def explore_q3(g: Graph, budget: SolveBudget = SolveBudget()) -> Q3Result:
    """Compare cms(2G) with ms(G), both exact."""
    res_ms = ms_exact(g, budget)
    res_cms = cms_exact(multiply(g, 2), budget)
    resolved = res_ms.status == VALUE_FOUND and res_cms.status == VALUE_FOUND
    return Q3Result(res_ms.value if res_ms.status == VALUE_FOUND else None,
                    res_cms.value if res_cms.status == VALUE_FOUND else None,
                    resolved)
