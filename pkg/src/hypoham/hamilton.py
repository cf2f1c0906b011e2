"""Exhaustive Hamiltonian cycle/path search with neighbor-count pruning.

The searcher grows a partial path and cuts a branch as soon as some vertex
outside it has fewer than two neighbors that are either off the path or an
endpoint of it (for cycles; the path variant allows one such vertex, the
future endpoint).  The counts are maintained incrementally: pushing a new
endpoint w after e only changes the count of off-path neighbors of e, which
keeps the per-node cost at one adjacency scan.

Verdicts are exhaustive unless a node budget is given, in which case an
exceeded budget raises SearchBudgetExceeded ("inconclusive") rather than
returning a misleading None.  Independent naive oracles (plain backtracking,
no pruning, no shared machinery) are provided for cross-checking on small
graphs.

Deleting a vertex never copies the graph: searches take a ``banned`` vertex
and mask it out of the adjacency view.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .plane import GraphError, PlaneGraph, SimpleGraph


class TooLarge(GraphError):
    """Naive oracle invoked beyond its guaranteed-feasible size."""


class SearchBudgetExceeded(GraphError):
    """Node budget ran out; the search result is inconclusive."""


_ORACLE_MAX = 24


def _adjacency(g) -> list[list[int]]:
    if isinstance(g, PlaneGraph):
        return [sorted(s) for s in g.neighbor_sets()]
    if isinstance(g, SimpleGraph):
        return [list(t) for t in g.adj]
    raise TypeError(f"expected PlaneGraph or SimpleGraph, got {type(g).__name__}")


def _masked(adj: list[list[int]], banned: int | None):
    if banned is None:
        return adj, list(range(len(adj)))
    out = [[w for w in row if w != banned] for row in adj]
    out[banned] = []
    return out, [v for v in range(len(adj)) if v != banned]


class _Engine:
    """One search run: partial path plus incremental neighbor counts.

    c[x], for x off the path, counts neighbors of x that are off the path or
    the current extension endpoint; nlow/nzero count off-path vertices with
    c <= 1 / c == 0.
    """

    def __init__(self, adj, active, budget, prune, check):
        self.adj = adj
        self.active = active
        self.budget = budget
        self.prune = prune
        self.check = check
        self.nodes = 0

    def init_state(self, s: int) -> None:
        n = len(self.adj)
        self.c = [0] * n
        self.off = bytearray(n)
        for x in self.active:
            self.c[x] = len(self.adj[x])
            self.off[x] = 1
        self.off[s] = 0
        self.nlow = sum(1 for x in self.active if x != s and self.c[x] <= 1)
        self.nzero = sum(1 for x in self.active if x != s and self.c[x] == 0)
        self.path = [s]

    def push(self, w: int, keep_endpoint: bool) -> None:
        # w becomes the endpoint; the old endpoint e loses its bonus unless kept
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise SearchBudgetExceeded(f"node budget {self.budget} exceeded")
        e = self.path[-1]
        cw = self.c[w]
        self.off[w] = 0
        if cw <= 1:
            self.nlow -= 1
            if cw == 0:
                self.nzero -= 1
        if not keep_endpoint:
            c, off = self.c, self.off
            for x in self.adj[e]:
                if off[x]:
                    cx = c[x] = c[x] - 1
                    if cx == 1:
                        self.nlow += 1
                    elif cx == 0:
                        self.nzero += 1
        self.path.append(w)
        if self.check:
            self._verify()

    def pop(self, keep_endpoint: bool) -> None:
        w = self.path.pop()
        e = self.path[-1]
        if not keep_endpoint:
            c, off = self.c, self.off
            for x in self.adj[e]:
                if off[x]:
                    cx = c[x]
                    c[x] = cx + 1
                    if cx == 1:
                        self.nlow -= 1
                    elif cx == 0:
                        self.nzero -= 1
        self.off[w] = 1
        cw = self.c[w]
        if cw <= 1:
            self.nlow += 1
            if cw == 0:
                self.nzero += 1

    def candidates(self, e: int) -> list[int]:
        # fail-first: fewest usable neighbors explored first
        c, off = self.c, self.off
        out = [w for w in self.adj[e] if off[w]]
        out.sort(key=c.__getitem__)
        return out

    def _verify(self) -> None:
        # recount from scratch; debug-mode invariant of the bookkeeping
        e = self.path[-1]
        s = self.path[0]
        nlow = nzero = 0
        for x in self.active:
            if not self.off[x]:
                continue
            cx = sum(1 for y in self.adj[x] if self.off[y] or y == e or
                     (self.keep_start_bonus and y == s))
            assert cx == self.c[x], f"counter drift at {x}: {cx} != {self.c[x]}"
            if cx <= 1:
                nlow += 1
                if cx == 0:
                    nzero += 1
        assert nlow == self.nlow and nzero == self.nzero, "aggregate drift"

    keep_start_bonus = False


def _cycle_search(adj, active, budget, prune, check) -> list[int] | None:
    n_act = len(active)
    if n_act < 3:
        return None
    if any(len(adj[v]) < 2 for v in active):
        return None
    s = min(active, key=lambda v: len(adj[v]))
    adj_s = adj[s]
    pos = {w: i for i, w in enumerate(adj_s)}

    eng = _Engine(adj, active, budget, prune, check)
    eng.keep_start_bonus = True  # s stays an endpoint for the whole run
    result: list[int] | None = None

    def rec(e: int, first_pos: int) -> bool:
        nonlocal result
        if len(eng.path) == n_act:
            p = pos.get(e)
            if p is not None and p > first_pos:
                result = list(eng.path)
                return True
            return False
        for w in eng.candidates(e):
            keep = e == s
            eng.push(w, keep)
            ok = False
            if not (prune and eng.nlow > 0):
                ok = rec(w, first_pos)
            eng.pop(keep)
            if ok:
                return True
        return False

    eng.init_state(s)
    for i, u in enumerate(adj_s):
        if i == len(adj_s) - 1:
            break  # no later neighbor left to close the cycle
        eng.push(u, True)
        ok = not (prune and eng.nlow > 0) and rec(u, i)
        eng.pop(True)
        if ok:
            return result
    return None


def _path_search(adj, active, budget, prune, check, start=None, target=None):
    n_act = len(active)
    if n_act == 0:
        return None
    if n_act == 1:
        v = active[0]
        if (start is None or start == v) and (target is None or target == v):
            return [v]
        return None

    eng = _Engine(adj, active, budget, prune, check)
    result: list[int] | None = None

    def rec(e: int, s: int) -> bool:
        nonlocal result
        if len(eng.path) == n_act:
            if target is not None:
                ok = e == target
            else:
                ok = e > s  # each path reported once, from its smaller end
            if ok:
                result = list(eng.path)
            return ok
        last_slot = len(eng.path) == n_act - 1
        for w in eng.candidates(e):
            if target is not None and w == target and not last_slot:
                continue
            eng.push(w, False)
            ok = False
            if not (prune and (eng.nzero > 0 or eng.nlow > 1)):
                ok = rec(w, s)
            eng.pop(False)
            if ok:
                return True
        return False

    starts = [start] if start is not None else list(active)
    for s in starts:
        if target is not None and s == target:
            continue
        eng.init_state(s)
        if prune and (eng.nzero > 0 or eng.nlow > 1):
            continue
        if rec(s, s):
            return result
    return None


# ---- public search API ----

def find_hamiltonian_cycle(g, banned: int | None = None, *,
                           node_budget: int | None = None,
                           prune: bool = True,
                           check_invariants: bool = False) -> list[int] | None:
    """A Hamiltonian cycle of g (minus ``banned``) as a vertex list, or None.

    None is an exhaustive-search certificate of non-Hamiltonicity; with a
    node budget the search raises SearchBudgetExceeded instead of guessing.
    """
    adj, active = _masked(_adjacency(g), banned)
    return _cycle_search(adj, active, node_budget, prune, check_invariants)


def find_hamiltonian_path(g, banned: int | None = None, *,
                          node_budget: int | None = None,
                          prune: bool = True,
                          check_invariants: bool = False) -> list[int] | None:
    adj, active = _masked(_adjacency(g), banned)
    return _path_search(adj, active, node_budget, prune, check_invariants)


def find_hamiltonian_path_between(g, u: int, v: int, *,
                                  node_budget: int | None = None,
                                  prune: bool = True) -> list[int] | None:
    if u == v:
        raise GraphError("endpoints must differ")
    adj, active = _masked(_adjacency(g), None)
    return _path_search(adj, active, node_budget, prune, False,
                        start=u, target=v)


def is_hamiltonian(g, **kw) -> bool:
    return find_hamiltonian_cycle(g, **kw) is not None


def is_traceable(g, **kw) -> bool:
    return find_hamiltonian_path(g, **kw) is not None


# ---- hypohamiltonicity / hypotraceability ----

@dataclass
class HypoReport:
    """Outcome of a hypohamiltonicity or hypotraceability test.

    witnesses maps each deleted vertex to its Hamiltonian cycle (or path) in
    g - v.  search_exhausted records that every negative verdict inside the
    test came from a completed exhaustive search.
    """
    verdict: str
    witnesses: dict[int, list[int]] = field(default_factory=dict)
    certificate: list[int] | None = None
    failed_vertex: int | None = None
    search_exhausted: bool = True

    def __bool__(self) -> bool:
        return self.verdict in ("hypohamiltonian", "hypotraceable")


def is_hypohamiltonian(g, *, node_budget: int | None = None) -> HypoReport:
    """Test whether g is non-Hamiltonian while every g - v is Hamiltonian.

    Deleted vertices are tried in vertex order with early exit on the first
    non-Hamiltonian g - v; its index is reported as failed_vertex.
    """
    cyc = find_hamiltonian_cycle(g, node_budget=node_budget)
    if cyc is not None:
        return HypoReport("hamiltonian", certificate=cyc)
    n = g.n
    witnesses: dict[int, list[int]] = {}
    for v in range(n):
        c = find_hamiltonian_cycle(g, banned=v, node_budget=node_budget)
        if c is None:
            return HypoReport("neither", witnesses=witnesses, failed_vertex=v)
        witnesses[v] = c
    return HypoReport("hypohamiltonian", witnesses=witnesses)


def is_hypotraceable(g, *, node_budget: int | None = None) -> HypoReport:
    p = find_hamiltonian_path(g, node_budget=node_budget)
    if p is not None:
        return HypoReport("traceable", certificate=p)
    n = g.n
    witnesses: dict[int, list[int]] = {}
    for v in range(n):
        pth = find_hamiltonian_path(g, banned=v, node_budget=node_budget)
        if pth is None:
            return HypoReport("neither", witnesses=witnesses, failed_vertex=v)
        witnesses[v] = pth
    return HypoReport("hypotraceable", witnesses=witnesses)


# ---- witness validation ----

def is_cycle_witness(g, cycle: list[int], banned: int | None = None) -> bool:
    """True if ``cycle`` is a Hamiltonian cycle of g minus ``banned``."""
    adj, active = _masked(_adjacency(g), banned)
    if sorted(cycle) != sorted(active) or len(cycle) < 3:
        return False
    sets = [set(row) for row in adj]
    return all(cycle[(i + 1) % len(cycle)] in sets[cycle[i]]
               for i in range(len(cycle)))


def is_path_witness(g, path: list[int], banned: int | None = None) -> bool:
    adj, active = _masked(_adjacency(g), banned)
    if sorted(path) != sorted(active):
        return False
    if len(path) == 1:
        return True
    sets = [set(row) for row in adj]
    return all(path[i + 1] in sets[path[i]] for i in range(len(path) - 1))


# ---- independent naive oracles (no pruning, no shared state) ----

def oracle_hamiltonian_cycle(g, banned: int | None = None) -> list[int] | None:
    adj, active = _masked(_adjacency(g), banned)
    if len(active) > _ORACLE_MAX:
        raise TooLarge(f"oracle limited to n <= {_ORACLE_MAX}")
    if len(active) < 3:
        return None
    s = active[0]
    want = len(active)
    visited = {s}
    path = [s]

    def go(v: int) -> bool:
        if len(path) == want:
            return s in adj[v]
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                path.append(w)
                if go(w):
                    return True
                path.pop()
                visited.remove(w)
        return False

    return path if go(s) else None


def oracle_hamiltonian_path(g, banned: int | None = None) -> list[int] | None:
    adj, active = _masked(_adjacency(g), banned)
    if len(active) > _ORACLE_MAX:
        raise TooLarge(f"oracle limited to n <= {_ORACLE_MAX}")
    if not active:
        return None
    want = len(active)

    def go(v: int) -> bool:
        if len(path) == want:
            return True
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                path.append(w)
                if go(w):
                    return True
                path.pop()
                visited.remove(w)
        return False

    for s in active:
        visited = {s}
        path = [s]
        if go(s):
            return path
    return None


def longest_cycle(g) -> int | None:
    """Number of vertices on a longest cycle, or None if g is acyclic."""
    adj, active = _masked(_adjacency(g), None)
    if len(active) > _ORACLE_MAX:
        raise TooLarge(f"oracle limited to n <= {_ORACLE_MAX}")
    best = None

    def go(root: int, v: int, depth: int) -> None:
        nonlocal best
        for w in adj[v]:
            if w == root and depth >= 3:
                if best is None or depth > best:
                    best = depth
            elif w > root and w not in visited:
                visited.add(w)
                go(root, w, depth + 1)
                visited.remove(w)

    for root in active:
        visited = {root}
        go(root, root, 1)
    return best


def longest_path(g) -> int:
    """Number of vertices on a longest path (1 for an edgeless graph)."""
    adj, active = _masked(_adjacency(g), None)
    if len(active) > _ORACLE_MAX:
        raise TooLarge(f"oracle limited to n <= {_ORACLE_MAX}")
    if not active:
        return 0
    best = 1

    def go(v: int, depth: int) -> None:
        nonlocal best
        if depth > best:
            best = depth
        for w in adj[v]:
            if w not in visited:
                visited.add(w)
                go(w, depth + 1)
                visited.remove(w)

    for s in active:
        visited = {s}
        go(s, 1)
    return best
