"""Plane-embedded multigraphs represented as rotation systems.

A plane multigraph is stored as a dart structure: every edge contributes two
darts (directed half-edges), each dart knows its origin vertex, its twin and
the next dart in the clockwise rotation at its origin.  Faces are the orbits
of ``d -> next(twin(d))``, and a rotation system describes a sphere embedding
exactly when Euler's formula n - m + f = 2 holds.  That check is run on every
construction, so any surgery that goes through the constructor is verified to
stay in genus zero.

Vertices are 0-based and dense.  Graphs are immutable after construction;
operations that modify a graph return a new one.
"""
from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class GraphError(Exception):
    """Base class for everything raised by this package."""


class InconsistentRotation(GraphError):
    """Rotation lists disagree (mismatched incidences, bad indices, ...)."""


class NotPlanar(GraphError):
    """The rotation system does not describe a connected sphere embedding."""


class Disconnected(GraphError):
    """Operation requires a connected graph."""


# Cap on the pairing search for multigraph rotation input.  Parallel edges
# make the dart pairing ambiguous; we try the nesting convention first and
# backtrack over the remaining bijections, but refuse pathological blowups.
_MAX_PAIRING_ATTEMPTS = 20000


@dataclass(frozen=True)
class Dart:
    """Read-only view of one dart: origin vertex, twin dart, rotation successor."""
    id: int
    origin: int
    twin: int
    next: int


class SimpleGraph:
    """Abstract (unembedded) simple graph with sorted adjacency lists."""

    __slots__ = ("n", "adj", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        seen = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InconsistentRotation(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InconsistentRotation(f"loop at {u} not allowed in SimpleGraph")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(xs)) for xs in adj)
        self._edge_count = len(seen)

    @classmethod
    def from_adjacency(cls, adj: Sequence[Sequence[int]]) -> "SimpleGraph":
        edges = [(u, v) for u, xs in enumerate(adj) for v in xs if u < v]
        # symmetric closure: also accept one-sided lists
        edges += [(v, u) for u, xs in enumerate(adj) for v in xs if v < u]
        return cls(len(adj), edges)

    @property
    def m(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, m={self.m})"


class PlaneGraph:
    """Immutable plane multigraph (dart structure, validated genus zero)."""

    __slots__ = ("n", "m", "_origin", "_twin", "_next", "_prev", "_first",
                 "_faces", "_face_of", "_code")

    def __init__(self, n: int, origin: Sequence[int], twin: Sequence[int],
                 nxt: Sequence[int], first: Sequence[int]):
        # Direct constructor for dart surgery; validates everything, so every
        # transform that builds a PlaneGraph gets an Euler check for free.
        nd = len(origin)
        if nd % 2 or len(twin) != nd or len(nxt) != nd:
            raise InconsistentRotation("dart arrays must have equal even length")
        self.n = n
        self.m = nd // 2
        self._origin = tuple(origin)
        self._twin = tuple(twin)
        self._next = tuple(nxt)
        self._first = tuple(first)
        self._faces = None
        self._face_of = None
        self._code = None
        self._validate()
        prev = [0] * nd
        for d in range(nd):
            prev[self._next[d]] = d
        self._prev = tuple(prev)

    # ---- construction helpers ----

    def _validate(self) -> None:
        n, nd = self.n, 2 * self.m
        if len(self._first) != n:
            raise InconsistentRotation("need one first dart per vertex")
        for d in range(nd):
            t = self._twin[d]
            if not 0 <= t < nd or t == d or self._twin[t] != d:
                raise InconsistentRotation(f"twin is not an involution at dart {d}")
            if not 0 <= self._origin[d] < n:
                raise InconsistentRotation(f"bad origin at dart {d}")
        # next must permute the darts within each vertex's star, covering it
        seen = [False] * nd
        for v, d0 in enumerate(self._first):
            if nd == 0:
                break
            if self._origin[d0] != v:
                raise InconsistentRotation(f"first dart of vertex {v} has wrong origin")
            d = d0
            while True:
                if seen[d] or self._origin[d] != v:
                    raise InconsistentRotation(f"rotation at vertex {v} is broken")
                seen[d] = True
                d = self._next[d]
                if d == d0:
                    break
        if nd and not all(seen):
            raise InconsistentRotation("rotation orbits do not cover all darts")
        if n == 0:
            raise InconsistentRotation("empty graph")
        if nd == 0 and n > 1:
            raise NotPlanar("graph is disconnected (isolated vertices)")
        if nd and n > 1:
            comp = [False] * n
            stack = [0]
            comp[0] = True
            adj = self.neighbor_sets()
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if not comp[w]:
                        comp[w] = True
                        stack.append(w)
            if not all(comp):
                raise NotPlanar("graph is disconnected")
        if self.n - self.m + self.face_count != 2:
            raise NotPlanar(
                f"Euler check failed: n={self.n} m={self.m} f={self.face_count}")

    # ---- basic accessors ----

    def dart(self, d: int) -> Dart:
        return Dart(d, self._origin[d], self._twin[d], self._next[d])

    def origin(self, d: int) -> int:
        return self._origin[d]

    def twin(self, d: int) -> int:
        return self._twin[d]

    def next(self, d: int) -> int:
        return self._next[d]

    def prev(self, d: int) -> int:
        return self._prev[d]

    def head(self, d: int) -> int:
        """Vertex the dart points to."""
        return self._origin[self._twin[d]]

    def first_dart(self, v: int) -> int:
        return self._first[v]

    def darts_at(self, v: int) -> list[int]:
        """Darts with origin v, in rotation order starting at the stored first dart."""
        if self.m == 0:
            return []
        out = []
        d0 = self._first[v]
        d = d0
        while True:
            out.append(d)
            d = self._next[d]
            if d == d0:
                break
        return out

    def degree(self, v: int) -> int:
        return len(self.darts_at(v))

    def neighbors(self, v: int) -> list[int]:
        """Neighbor list in rotation order; repeats reflect parallel edges/loops."""
        return [self.head(d) for d in self.darts_at(v)]

    def rotations(self) -> list[list[int]]:
        return [self.neighbors(v) for v in range(self.n)]

    def neighbor_sets(self) -> list[set[int]]:
        """Underlying simple adjacency (loops removed)."""
        out: list[set[int]] = [set() for _ in range(self.n)]
        for d in range(2 * self.m):
            u, w = self._origin[d], self.head(d)
            if u != w:
                out[u].add(w)
        return out

    @property
    def is_simple(self) -> bool:
        seen = set()
        for d in range(2 * self.m):
            u, w = self._origin[d], self.head(d)
            if u == w:
                return False
            if u < w:
                if (u, w) in seen:
                    return False
                seen.add((u, w))
        return True

    def to_simple(self) -> SimpleGraph:
        return SimpleGraph(self.n, [(self._origin[d], self.head(d))
                                    for d in range(2 * self.m)
                                    if self._origin[d] != self.head(d)])

    # ---- faces ----

    @property
    def face_count(self) -> int:
        return len(self.face_list()) if self.m else 1

    def face_list(self) -> list[list[int]]:
        """Faces as dart walks; orbit of d -> next(twin(d)), ordered by least dart."""
        if self._faces is None:
            nd = 2 * self.m
            face_of = [-1] * nd
            faces = []
            nxt, twin = self._next, self._twin
            for d0 in range(nd):
                if face_of[d0] >= 0:
                    continue
                walk = []
                d = d0
                idx = len(faces)
                while face_of[d] < 0:
                    face_of[d] = idx
                    walk.append(d)
                    d = nxt[twin[d]]
                if d != d0:
                    raise InconsistentRotation("face walk does not close")
                faces.append(walk)
            self._faces = faces
            self._face_of = face_of
        return self._faces

    def face_of(self, d: int) -> int:
        self.face_list()
        return self._face_of[d]

    def face_vertices(self, face_index: int) -> list[int]:
        return [self._origin[d] for d in self.face_list()[face_index]]

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m}, f={self.face_count})"


def _normalize_rotations(rotations) -> list[list[int]]:
    if isinstance(rotations, Mapping):
        keys = sorted(rotations)
        index = {k: i for i, k in enumerate(keys)}
        try:
            return [[index[w] for w in rotations[k]] for k in keys]
        except KeyError as exc:
            raise InconsistentRotation(f"neighbor {exc.args[0]} is not a vertex")
    out = [list(xs) for xs in rotations]
    n = len(out)
    for v, xs in enumerate(out):
        for w in xs:
            if not isinstance(w, int) or not 0 <= w < n:
                raise InconsistentRotation(f"bad neighbor {w!r} at vertex {v}")
    return out


def build_plane_graph(rotations) -> PlaneGraph:
    """Build a validated PlaneGraph from per-vertex neighbor lists.

    ``rotations`` gives, for every vertex, its neighbors in clockwise rotation
    order: a list of lists (0-based) or a mapping keyed by arbitrary sortable
    vertex names (sorted order defines the 0-based numbering).  Parallel edges
    and loops are allowed; occurrence lists are paired by the nesting
    convention first, falling back to a bounded search over pairings until the
    Euler check passes.

    Raises:
        InconsistentRotation: incidence counts disagree or indices are bad.
        NotPlanar: no pairing yields a connected genus-zero embedding.
    """
    rot = _normalize_rotations(rotations)
    n = len(rot)
    if n == 0:
        raise InconsistentRotation("empty graph")

    # dart ids follow input order: darts of vertex v occupy a contiguous block
    offsets = [0] * n
    total = 0
    for v in range(n):
        offsets[v] = total
        total += len(rot[v])
    if total == 0:
        if n == 1:
            return PlaneGraph(1, (), (), (), (0,))
        raise NotPlanar("graph is disconnected (no edges)")

    # incidence bookkeeping per unordered pair / loop class
    at: dict[tuple[int, int], list[int]] = {}
    loops: dict[int, list[int]] = {}
    for v in range(n):
        for i, w in enumerate(rot[v]):
            d = offsets[v] + i
            if w == v:
                loops.setdefault(v, []).append(d)
            else:
                at.setdefault((v, w), []).append(d)
    for (v, w), ds in at.items():
        other = at.get((w, v))
        if other is None or len(other) != len(ds):
            raise InconsistentRotation(
                f"vertex {v} lists {w} {len(ds)} times but not vice versa")
    for v, ds in loops.items():
        if len(ds) % 2:
            raise InconsistentRotation(f"odd loop incidence at vertex {v}")

    origin = [0] * total
    nxt = [0] * total
    first = [0] * n
    for v in range(n):
        k = len(rot[v])
        first[v] = offsets[v]
        for i in range(k):
            d = offsets[v] + i
            origin[d] = v
            nxt[d] = offsets[v] + (i + 1) % k

    # classes whose dart pairing is ambiguous get a list of candidate pairings
    fixed: list[tuple[int, int]] = []
    choice_classes: list[list[list[tuple[int, int]]]] = []
    for (v, w), ds in sorted(at.items()):
        if v > w:
            continue
        es = at[(w, v)]
        k = len(ds)
        if k == 1:
            fixed.append((ds[0], es[0]))
        else:
            options = []
            for perm in itertools.permutations(range(k)):
                pairing = [(ds[i], es[perm[i]]) for i in range(k)]
                options.append(pairing)
            # nesting convention (reverse order) first
            options.sort(key=lambda p: 0 if all(
                p[i][1] == es[k - 1 - i] for i in range(k)) else 1)
            choice_classes.append(options)
    for v, ds in sorted(loops.items()):
        if len(ds) == 2:
            fixed.append((ds[0], ds[1]))
        else:
            options = [list(zip(m[::2], m[1::2]))
                       for m in _perfect_matchings(ds)]
            choice_classes.append(options)

    attempts = 0
    for combo in itertools.product(*choice_classes):
        attempts += 1
        if attempts > _MAX_PAIRING_ATTEMPTS:
            raise NotPlanar("no planar dart pairing found within search budget")
        twin = [-1] * total
        for a, b in fixed:
            twin[a], twin[b] = b, a
        for pairing in combo:
            for a, b in pairing:
                twin[a], twin[b] = b, a
        try:
            return PlaneGraph(n, origin, twin, nxt, first)
        except NotPlanar:
            continue
    raise NotPlanar("no dart pairing satisfies Euler's formula")


def _perfect_matchings(items: list[int]):
    """All perfect matchings of an even-length list, flattened pairwise."""
    if not items:
        yield []
        return
    a, rest = items[0], items[1:]
    for i, b in enumerate(rest):
        for sub in _perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [a, b] + sub


# ---- spec-level operations ----

def faces(g: PlaneGraph) -> list[list[int]]:
    """Faces of g as dart walks (see PlaneGraph.face_list)."""
    return g.face_list()


def dual(g: PlaneGraph) -> PlaneGraph:
    """Plane dual: one vertex per face, one edge per primal edge.

    Dart ids are reused one-to-one; the rotation at a dual vertex follows the
    primal face walk.  The orientation convention flips under dualization,
    which is invisible modulo reflection-inclusive canonical codes, and
    dual(dual(g)) is plane-isomorphic to g.
    """
    if g.m == 0:
        raise NotPlanar("dual of an edgeless graph is not defined here")
    g.face_list()
    nd = 2 * g.m
    face_of = [g.face_of(d) for d in range(nd)]
    nxt = [0] * nd
    first = [-1] * g.face_count
    for walk in g.face_list():
        k = len(walk)
        for i, d in enumerate(walk):
            nxt[d] = walk[(i + 1) % k]
        first[face_of[walk[0]]] = walk[0]
    return PlaneGraph(g.face_count, face_of, g._twin, nxt, first)


def girth(g) -> int | None:
    """Length of a shortest cycle; None for forests.

    Accepts PlaneGraph or SimpleGraph.  Loops give girth 1 and parallel edges
    girth 2; beyond that the underlying simple graph is searched by BFS.
    """
    if isinstance(g, PlaneGraph):
        pairs = Counter()
        for d in range(2 * g.m):
            u, w = g.origin(d), g.head(d)
            if u == w:
                return 1
            pairs[(min(u, w), max(u, w))] += 1
        if pairs and max(pairs.values()) > 2:  # each edge contributes two darts
            return 2
        adj = [sorted(s) for s in g.neighbor_sets()]
        n = g.n
    else:
        adj = [list(xs) for xs in g.adj]
        n = g.n
    best = None
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        q = deque([root])
        while q:
            u = q.popleft()
            if best is not None and dist[u] * 2 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    q.append(w)
                elif parent[u] != w and parent[w] != u:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def face_sequence(g: PlaneGraph) -> Counter:
    """Multiset of face sizes as a Counter {size: count}."""
    if g.m == 0:
        return Counter()
    return Counter(len(walk) for walk in g.face_list())


def degree_sequence(g) -> Counter:
    """Multiset of vertex degrees as a Counter {degree: count}."""
    if isinstance(g, PlaneGraph):
        return Counter(g.degree(v) for v in range(g.n))
    return Counter(g.degree(v) for v in range(g.n))


def format_multiset(counts: Mapping[int, int]) -> str:
    """Table notation for degree/face multisets: "5×4, 22×5" (count×value)."""
    return ", ".join(f"{counts[s]}×{s}" for s in sorted(counts) if counts[s])


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    lambda_: int
    delta: int


def connectivity(g) -> ConnectivityReport:
    """Exact vertex/edge connectivity and minimum degree.

    Vertex connectivity is found by looking for cuts of increasing size
    (articulation point after deleting a small vertex set); since kappa is at
    most the minimum degree on non-complete graphs this terminates quickly at
    desk scale.  Edge connectivity is max-flow from a fixed minimum-degree
    source, with parallel-edge multiplicities as capacities.

    Raises:
        Disconnected: g has more than one component.
    """
    if isinstance(g, PlaneGraph):
        caps: dict[tuple[int, int], int] = {}
        for d in range(2 * g.m):
            u, w = g.origin(d), g.head(d)
            if u != w:
                caps[(u, w)] = caps.get((u, w), 0) + 1
        adj = [sorted(s) for s in g.neighbor_sets()]
        degs = [g.degree(v) for v in range(g.n)]
        n = g.n
    else:
        adj = [list(xs) for xs in g.adj]
        caps = {(u, w): 1 for u in range(g.n) for w in adj[u]}
        degs = [len(xs) for xs in adj]
        n = g.n

    if n == 0:
        raise Disconnected("empty graph")
    if n > 1:
        seen = [False] * n
        seen[0] = True
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        if not all(seen):
            raise Disconnected("graph is not connected")

    delta = min(degs)
    if n == 1:
        return ConnectivityReport(0, 0, delta)

    delta_simple = min(len(xs) for xs in adj)
    if all(len(xs) == n - 1 for xs in adj):
        kappa = n - 1
    else:
        kappa = delta_simple
        done = False
        for k in range(1, delta_simple + 1):
            if done:
                break
            for removed in itertools.combinations(range(n), k - 1):
                if _has_articulation(adj, set(removed)):
                    kappa = k
                    done = True
                    break

    src = degs.index(delta)
    lam = None
    for t in range(n):
        if t == src:
            continue
        flow = _max_flow(n, adj, caps, src, t, lam)
        if lam is None or flow < lam:
            lam = flow
    return ConnectivityReport(kappa, lam, delta)


def is_three_connected(g) -> bool:
    """Fast gate for kappa >= 3 (simple underlying graph, n >= 4)."""
    if isinstance(g, PlaneGraph):
        adj = [sorted(s) for s in g.neighbor_sets()]
    else:
        adj = [list(xs) for xs in g.adj]
    n = len(adj)
    if n < 4 or min(len(xs) for xs in adj) < 3:
        return False
    if _has_articulation(adj, set()):  # also catches disconnected
        return False
    for v in range(n):
        if _has_articulation(adj, {v}):
            return False
    return True


def _has_articulation(adj: list[list[int]], removed: set[int]) -> bool:
    """True if the graph minus ``removed`` is disconnected or has a cut vertex.

    Iterative lowpoint DFS; assumes at least 2 vertices remain.
    """
    n = len(adj)
    alive = [v for v in range(n) if v not in removed]
    if len(alive) < 2:
        return False
    num = [-1] * n
    low = [0] * n
    parent = [-1] * n
    counter = 0
    root = alive[0]
    stack: list[tuple[int, int]] = [(root, 0)]
    iters = [iter(adj[root])]
    num[root] = low[root] = counter
    counter += 1
    root_children = 0
    order = [root]
    while stack:
        v, _ = stack[-1]
        advanced = False
        for w in iters[-1]:
            if w in removed:
                continue
            if num[w] < 0:
                num[w] = low[w] = counter
                counter += 1
                parent[w] = v
                if v == root:
                    root_children += 1
                stack.append((w, 0))
                iters.append(iter(adj[w]))
                order.append(w)
                advanced = True
                break
            elif w != parent[v] and num[w] < low[v]:
                low[v] = num[w]
        if not advanced:
            stack.pop()
            iters.pop()
            if stack:
                p = stack[-1][0]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= num[p]:
                    return True
    if counter < len(alive):
        return True  # disconnected after removal
    return root_children > 1


def _max_flow(n: int, adj: list[list[int]], caps: dict, s: int, t: int,
              cutoff: int | None) -> int:
    """Edmonds-Karp with integer capacities; stops early at ``cutoff``."""
    residual = dict(caps)
    flow = 0
    while cutoff is None or flow < cutoff:
        parent = [-1] * n
        parent[s] = s
        q = deque([s])
        while q and parent[t] < 0:
            u = q.popleft()
            for w in adj[u]:
                if parent[w] < 0 and residual.get((u, w), 0) > 0:
                    parent[w] = u
                    q.append(w)
        if parent[t] < 0:
            break
        bottleneck = None
        v = t
        while v != s:
            u = parent[v]
            c = residual[(u, v)]
            if bottleneck is None or c < bottleneck:
                bottleneck = c
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[(u, v)] -= bottleneck
            residual[(v, u)] = residual.get((v, u), 0) + bottleneck
            v = u
        flow += bottleneck
    return flow


def canonical_code(g: PlaneGraph) -> bytes:
    """Canonical certificate of the plane graph up to plane isomorphism.

    Minimizes a BFS labeling code over every start dart and both orientations,
    so two plane graphs get equal codes exactly when some sphere homeomorphism
    (possibly orientation-reversing) maps one rotation system onto the other.
    Start darts are restricted to minimum-degree vertices, which is invariant
    under isomorphism and keeps the constant factor down.

    The byte layout is a planar_code record body (n, then relabeled 1-based
    neighbor lists each terminated by 0), so codes double as storable records
    for n <= 255.
    """
    if g._code is not None:
        return g._code
    if g.n > 255:
        raise GraphError("canonical_code supports at most 255 vertices")
    if g.m == 0:
        code = bytes([1])
        g._code = code
        return code

    n = g.n
    degs = [g.degree(v) for v in range(n)]
    dmin = min(degs)
    starts = [d for d in range(2 * g.m) if degs[g._origin[d]] == dmin]
    twin = g._twin
    origin = g._origin
    best: bytes | None = None
    for step in (g._next, g._prev):
        for d0 in starts:
            code = _bfs_code(n, origin, twin, step, d0)
            if best is None or code < best:
                best = code
    g._code = best
    return best


def _bfs_code(n: int, origin, twin, step, d0: int) -> bytes:
    label = [0] * n
    label[origin[d0]] = 1
    entry = [d0]
    out = bytearray([n])
    count = 1
    qi = 0
    while qi < len(entry):
        d = entry[qi]
        qi += 1
        e = d
        while True:
            te = twin[e]
            w = origin[te]
            lw = label[w]
            if lw == 0:
                count += 1
                lw = label[w] = count
                entry.append(te)
            out.append(lw)
            e = step[e]
            if e == d:
                break
        out.append(0)
    return bytes(out)
