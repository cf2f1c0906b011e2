"""Named graphs and small parameterized families used as fixtures and seeds.

All plane graphs here are built as explicit rotation systems and therefore
Euler-validated on construction.  The abstract (non-planar) examples are
SimpleGraphs.
"""
from __future__ import annotations

from .plane import PlaneGraph, SimpleGraph, build_plane_graph, dual


def _from_oriented_faces(n: int, face_cycles) -> PlaneGraph:
    """Rotation system from consistently oriented face cycles (simple graphs).

    Every directed edge must occur in exactly one face; the rotation at v then
    satisfies next(v->u) = (v->w) where w follows v in the face containing
    (u, v).  Euler validation happens in the PlaneGraph constructor.
    """
    ids: dict[tuple[int, int], int] = {}
    for cyc in face_cycles:
        for i, u in enumerate(cyc):
            v = cyc[(i + 1) % len(cyc)]
            if (u, v) in ids:
                raise ValueError(f"directed edge {(u, v)} used twice; bad orientation")
            ids[(u, v)] = len(ids)
    origin = [0] * len(ids)
    twin = [0] * len(ids)
    nxt = [0] * len(ids)
    first = [-1] * n
    for (u, v), d in ids.items():
        origin[d] = u
        twin[d] = ids[(v, u)]
        if first[u] < 0:
            first[u] = d
    for cyc in face_cycles:
        k = len(cyc)
        for i, u in enumerate(cyc):
            v = cyc[(i + 1) % k]
            w = cyc[(i + 2) % k]
            nxt[ids[(v, u)]] = ids[(v, w)]
    return PlaneGraph(n, origin, twin, nxt, first)


def petersen() -> SimpleGraph:
    """The Petersen graph: smallest hypohamiltonian graph (10 vertices)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]            # outer 5-cycle
    edges += [(i, i + 5) for i in range(5)]                 # spokes
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]   # inner pentagram
    return SimpleGraph(10, edges)


def k4() -> SimpleGraph:
    return SimpleGraph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def tetrahedron() -> PlaneGraph:
    return build_plane_graph([[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]])


def single_edge() -> PlaneGraph:
    return build_plane_graph([[1], [0]])


def cycle(k: int) -> PlaneGraph:
    if k < 3:
        raise ValueError("cycle needs k >= 3")
    return build_plane_graph([[(i - 1) % k, (i + 1) % k] for i in range(k)])


def path_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])


def star(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i + 1) for i in range(leaves)])


def prism(k: int) -> PlaneGraph:
    """Circular prism C_k x K_2: vertices 0..k-1 outer ring, k..2k-1 inner."""
    if k < 3:
        raise ValueError("prism needs k >= 3")
    rot = []
    for i in range(k):
        rot.append([(i + 1) % k, (i - 1) % k, i + k])
    for i in range(k):
        rot.append([k + (i - 1) % k, k + (i + 1) % k, i])
    return build_plane_graph(rot)


def cube() -> PlaneGraph:
    return prism(4)


def octahedron() -> PlaneGraph:
    return dual(cube())


def gyroelongated_dipyramid(k: int) -> PlaneGraph:
    """Antiprism over C_k with a pyramid apex glued onto each k-gonal cap.

    Every ring vertex has degree 5 and the two apexes have degree k, so k = 5
    gives the icosahedron and k = 6 the unique 14-vertex triangulation with
    minimum degree 5.
    """
    if k < 3:
        raise ValueError("needs k >= 3")
    # vertices: 0..k-1 top ring, k..2k-1 bottom ring, 2k top apex, 2k+1 bottom;
    # top i sits between bottom k+(i-1) and k+i
    top, bottom = 2 * k, 2 * k + 1
    fc = []
    for i in range(k):
        j = (i + 1) % k
        fc.append((top, i, j))                        # top cap
        fc.append((j, i, k + i))                      # band, apex up
        fc.append((i, k + (i - 1) % k, k + i))        # band, apex down
        fc.append((bottom, k + j, k + i))             # bottom cap
    return _from_oriented_faces(2 * k + 2, fc)


def icosahedron() -> PlaneGraph:
    return gyroelongated_dipyramid(5)


def dodecahedron() -> PlaneGraph:
    return dual(icosahedron())


def k5_rotation() -> list[list[int]]:
    """A rotation system of K5; building it must fail the genus-zero check."""
    return [[w for w in range(5) if w != v] for v in range(5)]
