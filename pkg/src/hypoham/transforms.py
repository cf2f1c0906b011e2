"""Plane-graph surgeries: 4-face squeeze and its inverse, face ringing,
the four-graph hypotraceable join, vertex insertion, edge contraction.

The embedded operations (deflate_4face, inflate_2path, thomassen) are done
by dart surgery: per-vertex rotation lists are edited and reassembled, so
every output passes the full rotation/Euler validation of the PlaneGraph
constructor.  The abstract operations (join4_hypotraceable, insert_into,
contract_edges) return SimpleGraph.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .plane import GraphError, PlaneGraph, SimpleGraph


class NotAFourFace(GraphError):
    pass


class MergeCreatesLoop(GraphError):
    pass


class InvalidSite(GraphError):
    pass


class NotCubicFace(GraphError):
    pass


class NotCubic(GraphError):
    pass


class ConstructionFailure(GraphError):
    pass


def _assemble(rows: list[list], pairs) -> PlaneGraph:
    """Build a PlaneGraph from per-vertex rotation lists of dart keys and a
    list of twin key pairs.  Keys may be any hashables (old ids, fresh tags)."""
    ids: dict = {}
    origin: list[int] = []
    for v, row in enumerate(rows):
        if not row:
            raise GraphError(f"vertex {v} would be isolated")
        for key in row:
            if key in ids:
                raise GraphError(f"dart key {key!r} used twice")
            ids[key] = len(origin)
            origin.append(v)
    nd = len(origin)
    twin = [-1] * nd
    nxt = [0] * nd
    first = []
    for row in rows:
        first.append(ids[row[0]])
        k = len(row)
        for i, key in enumerate(row):
            nxt[ids[key]] = ids[row[(i + 1) % k]]
    for a, b in pairs:
        twin[ids[a]] = ids[b]
        twin[ids[b]] = ids[a]
    return PlaneGraph(len(rows), origin, twin, nxt, first)


def _arc_between(rot: list[int], start, stop) -> list:
    # elements of the cyclic list strictly after `start`, strictly before `stop`
    i = rot.index(start)
    out = []
    j = (i + 1) % len(rot)
    while rot[j] != stop:
        out.append(rot[j])
        j = (j + 1) % len(rot)
    return out


def four_face_indices(g: PlaneGraph) -> list[int]:
    return [i for i, f in enumerate(g.face_list()) if len(f) == 4]


# ---- 4-face deflation ----

def deflate_4face(g: PlaneGraph, face_index: int,
                  merge_positions: tuple[int, int] = (1, 3)) -> PlaneGraph:
    """Squeeze a 4-face into a path of length 2.

    The face corners v1 v2 v3 v4 (walk order) lose the two corners at
    merge_positions, which collapse into one new vertex adjacent to the
    other two corners once each.  The merged corners must be opposite and
    non-adjacent, else the merge would create a loop.
    """
    walk = list(g.face_list()[face_index])
    if len(walk) != 4:
        raise NotAFourFace(f"face {face_index} has size {len(walk)}")
    p, q = merge_positions
    if (q - p) % 4 != 2:
        raise GraphError(f"merge positions {merge_positions} are not opposite")
    off = (p - 1) % 4
    walk = walk[off:] + walk[:off]
    d1, d2, d3, d4 = walk
    v1, v2, v3, v4 = (g.origin(d) for d in walk)
    if v2 == v4:
        raise MergeCreatesLoop(f"corners {v2} and {v4} coincide")
    if v4 in g.neighbor_sets()[v2]:
        raise MergeCreatesLoop(f"corners {v2} and {v4} are adjacent")

    t1, t2, t3, t4 = (g.twin(d) for d in walk)
    arc_a = _arc_between(g.darts_at(v2), d2, t1)   # v2's darts off the face
    arc_b = _arc_between(g.darts_at(v4), d4, t3)   # v4's darts off the face
    dropped = {d2, t2, d4, t4}

    keep, gone = min(v2, v4), max(v2, v4)

    def relabel(x: int) -> int:
        return x if x < gone else x - 1

    rows: list[list] = [None] * (g.n - 1)
    for x in range(g.n):
        if x in (v2, v4):
            continue
        row = [d for d in g.darts_at(x) if d not in (t4, t2)] \
            if x in (v1, v3) else g.darts_at(x)
        rows[relabel(x)] = list(row)
    rows[relabel(keep)] = [t1, *arc_b, t3, *arc_a]

    kept = [d for d in range(2 * g.m) if d not in dropped]
    pairs = [(d, g.twin(d)) for d in kept if d < g.twin(d)]
    return _assemble(rows, pairs)


def deflate_4face_both(g: PlaneGraph, face_index: int) -> list[PlaneGraph]:
    """Both legal deflations of a 4-face (either opposite pair merged);
    merges that would create a loop are skipped."""
    out = []
    for positions in ((1, 3), (0, 2)):
        try:
            out.append(deflate_4face(g, face_index, positions))
        except MergeCreatesLoop:
            pass
    return out


# ---- 2-path inflation ----

@dataclass(frozen=True)
class InflationSite:
    """Where to split a vertex into an edge of a new 4-face.

    center is the vertex to split; dart_a and dart_b are two of its darts,
    pointing at the corners v1 and v3 of the face to be.  The center's other
    darts fall into the two rotation arcs the pair delimits: the arc after
    dart_a goes to the new corner v4, the arc after dart_b to v2.  Swapping
    dart_a and dart_b renames v2 and v4 but yields the same embedded graph,
    so enumeration emits each unordered pair once.
    """
    center: int
    dart_a: int
    dart_b: int


def enumerate_inflations(g: PlaneGraph) -> list[InflationSite]:
    """Every inflation site of g: all centers, all dart pairs whose heads
    leave the center (loop halves make no valid face corner)."""
    sites = []
    for v in range(g.n):
        cand = [d for d in g.darts_at(v) if g.head(d) != v]
        sites.extend(InflationSite(v, a, b) for a, b in combinations(cand, 2))
    return sites


def inflate_2path(g: PlaneGraph, site: InflationSite) -> PlaneGraph:
    """Expand the center vertex into an edge, wrapping a new 4-face around
    the path v1 - center - v3.  Inverse of deflate_4face at the new face.

    The split keeps the center's label for corner v2 and appends v4 as a
    new last vertex; order and 4-face count both grow by one.
    """
    v5, a, b = site.center, site.dart_a, site.dart_b
    if not 0 <= v5 < g.n:
        raise InvalidSite(f"no vertex {v5}")
    rot = g.darts_at(v5)
    if a == b or a not in rot or b not in rot:
        raise InvalidSite(f"darts {a}, {b} are not a pair at vertex {v5}")
    if g.head(a) == v5 or g.head(b) == v5:
        raise InvalidSite("chosen dart is half of a loop at the center")
    v1, v3 = g.head(a), g.head(b)
    arc_p = _arc_between(rot, a, b)     # joins corner v4
    arc_q = _arc_between(rot, b, a)     # stays with corner v2
    n1, n1t, n2, n2t = "N1", "N1t", "N2", "N2t"

    rows: list[list] = []
    for x in range(g.n):
        if x == v5:
            rows.append([a, n1, *arc_q])
            continue
        row = list(g.darts_at(x))
        if x == v1:
            row.insert(row.index(g.twin(a)), n2t)
        if x == v3:
            row.insert(row.index(g.twin(b)), n1t)
        rows.append(row)
    rows.append([b, n2, *arc_p])

    pairs = [(d, g.twin(d)) for d in range(2 * g.m) if d < g.twin(d)]
    pairs += [(n1, n1t), (n2, n2t)]
    return _assemble(rows, pairs)


# ---- face ringing ----

def thomassen(g: PlaneGraph, face_index: int) -> PlaneGraph:
    """Replace a 4-face with cubic corners by a ringed 4-face.

    Two opposite boundary edges are deleted and a new 4-cycle is laid inside
    the face, each new vertex spoked to one corner.  The new central 4-face
    again has cubic corners, so the operation can be iterated.
    """
    walk = list(g.face_list()[face_index])
    if len(walk) != 4:
        raise NotAFourFace(f"face {face_index} has size {len(walk)}")
    corners = [g.origin(d) for d in walk]
    if len(set(corners)) != 4:
        raise NotAFourFace("face boundary is not a simple 4-cycle")
    bad = [v for v in corners if g.degree(v) != 3]
    if bad:
        raise NotCubicFace(f"corner {bad[0]} has degree {g.degree(bad[0])}")

    e0, e1, e2, e3 = walk
    t0, t2 = g.twin(e0), g.twin(e2)
    # deleted darts are replaced in-place by the spokes
    swap = {e0: "S0", t0: "S1", e2: "S2", t2: "S3"}
    rows = []
    for x in range(g.n):
        rows.append([swap.get(d, d) for d in g.darts_at(x)])
    for i in range(4):
        rows.append([f"ST{i}", f"RT{(i - 1) % 4}", f"R{i}"])

    pairs = [(d, g.twin(d)) for d in range(2 * g.m)
             if d < g.twin(d) and d not in swap and g.twin(d) not in swap]
    pairs += [(f"S{i}", f"ST{i}") for i in range(4)]
    pairs += [(f"R{i}", f"RT{i}") for i in range(4)]
    return _assemble(rows, pairs)


# ---- abstract surgeries ----

def _ordered_neighbors(g, v: int) -> list[int]:
    if isinstance(g, PlaneGraph):
        return [g.head(d) for d in g.darts_at(v)]
    return list(g.neighbors(v))


def _simple_edges(g) -> list[tuple[int, int]]:
    if isinstance(g, PlaneGraph):
        g = g.to_simple()
    return g.edges()


def _cubic_neighbors(g, v: int, what: str) -> list[int]:
    nbrs = _ordered_neighbors(g, v)
    if len(nbrs) != 3 or len(set(nbrs)) != 3 or v in nbrs:
        raise NotCubic(f"{what} {v} must have exactly three distinct neighbors")
    return nbrs


def join4_hypotraceable(g1, w1: int, g2, w2: int,
                        g3, w3: int, g4, w4: int) -> SimpleGraph:
    """Join four graphs with a cubic vertex deleted from each into one graph
    of order sum - 6.

    One pendant neighbor of the deleted vertex is shared between the first
    two graphs and one between the last two; the remaining pendants are
    wired in parallel pairs, first graph to third and second to fourth, so
    the four blocks close into a ring.  With hypohamiltonian inputs the
    result is hypotraceable.
    """
    parts = [(g1, w1), (g2, w2), (g3, w3), (g4, w4)]
    pend = [_cubic_neighbors(g, w, "join vertex") for g, w in parts]

    mapping: list[dict[int, int]] = []
    nxt = 0
    for g, w in parts:
        mp = {}
        for v in range(g.n):
            if v != w:
                mp[v] = nxt
                nxt += 1
        mapping.append(mp)
    # share the first pendant across each half
    alias = {mapping[1][pend[1][0]]: mapping[0][pend[0][0]],
             mapping[3][pend[3][0]]: mapping[2][pend[2][0]]}
    used = sorted(set(alias.get(i, i) for i in range(nxt)))
    compact = {old: new for new, old in enumerate(used)}

    def slot(k: int, v: int) -> int:
        raw = mapping[k][v]
        return compact[alias.get(raw, raw)]

    edges = set()
    for k, (g, w) in enumerate(parts):
        for u, v in _simple_edges(g):
            if w in (u, v):
                continue
            e = (slot(k, u), slot(k, v))
            edges.add((min(e), max(e)))
    ring = [(slot(0, pend[0][1]), slot(2, pend[2][1])),
            (slot(0, pend[0][2]), slot(2, pend[2][2])),
            (slot(1, pend[1][1]), slot(3, pend[3][1])),
            (slot(1, pend[1][2]), slot(3, pend[3][2]))]
    for u, v in ring:
        if u == v or (min(u, v), max(u, v)) in edges:
            raise ConstructionFailure("pendant wiring collides with block edges")
        edges.add((min(u, v), max(u, v)))

    out = SimpleGraph(len(used), sorted(edges))
    want = sum(g.n for g, _ in parts) - 6
    if out.n != want:
        raise ConstructionFailure(f"order {out.n}, expected {want}")
    return out


def insert_into(g, w: int, h) -> SimpleGraph:
    """Replace every vertex of cubic h by a copy of g - w, wiring each
    h-edge to one pendant neighbor of w in each endpoint's copy.

    Pendants are taken in rotation order for plane inputs, sorted order
    otherwise; the k-th edge at an h-vertex uses the k-th pendant.
    """
    pend = _cubic_neighbors(g, w, "insertion vertex")
    h_nbrs = [_cubic_neighbors(h, v, "host vertex") for v in range(h.n)]

    block = g.n - 1
    rank = {}
    for v in range(g.n):
        if v != w:
            rank[v] = len(rank)

    def slot(copy: int, v: int) -> int:
        return copy * block + rank[v]

    edges = []
    inner = [(u, v) for u, v in _simple_edges(g) if w not in (u, v)]
    for copy in range(h.n):
        edges.extend((slot(copy, u), slot(copy, v)) for u, v in inner)
    for p in range(h.n):
        for j, q in enumerate(h_nbrs[p]):
            if p < q:
                jq = h_nbrs[q].index(p)
                edges.append((slot(p, pend[j]), slot(q, pend[jq])))
    return SimpleGraph(h.n * block, edges)


def contract_edges(g, edge_set) -> SimpleGraph:
    """Contract each listed edge of g; parallel edges merge, loops vanish.

    Vertex classes keep the order of their smallest original member.
    """
    if isinstance(g, PlaneGraph):
        g = g.to_simple()
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_set:
        if not (0 <= u < g.n and 0 <= v < g.n) or v not in g.adj[u]:
            raise GraphError(f"({u},{v}) is not an edge")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    roots = sorted(set(find(x) for x in range(g.n)))
    label = {r: i for i, r in enumerate(roots)}
    edges = set()
    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            e = (label[ru], label[rv])
            edges.add((min(e), max(e)))
    return SimpleGraph(len(roots), sorted(edges))
