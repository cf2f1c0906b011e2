"""Face-count obstructions to Hamiltonicity in plane graphs.

For a Hamiltonian cycle of a plane graph, the faces inside and outside the
cycle satisfy sum_i (i-2)(f_i - f'_i) = 0, where f_i / f'_i count i-faces on
each side.  Whether ANY split of a face-size multiset can satisfy that
identity is a bounded-multiplicity subset-sum question: items of weight i-2
with multiplicity F_i, target half the total.  An infeasible multiset proves
every plane graph carrying it is non-Hamiltonian.

Two structural families are always infeasible: graphs where every face size
but one leaves weight divisible by 3 (the lone exceptional face forces a
nonzero sum mod 3), and odd-order graphs with all faces even (parity).
classify_grinbergian detects these; verify_completeness checks exhaustively
that, up to a given order, they are the ONLY infeasible face multisets
satisfiable by 3-connected simple plane graphs.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterator, Mapping

from .plane import GraphError, PlaneGraph, face_sequence, is_three_connected
from .hamilton import is_cycle_witness, is_hypohamiltonian


class NotHamiltonian(GraphError):
    """The supplied vertex sequence is not a Hamiltonian cycle of the graph."""


class NotSimple(GraphError):
    pass


class NotThreeConnected(GraphError):
    pass


class PreconditionFailed(GraphError):
    pass


def is_neutral_size(i: int) -> bool:
    """Face sizes whose weight i - 2 is divisible by 3.

    Faces of neutral size contribute 0 mod 3 to the signed face sum no
    matter which side of the cycle they are on.
    """
    return i % 3 == 2


@dataclass(frozen=True)
class GrinbergSplit:
    """Face counts per size on the two sides of a (hypothetical) cycle."""
    inside: Mapping[int, int]
    outside: Mapping[int, int]

    def __post_init__(self):
        for part in (self.inside, self.outside):
            if any(c < 0 for c in part.values()):
                raise GraphError("negative face count in split")

    def face_counts(self) -> Counter:
        total = Counter(self.inside)
        total.update(self.outside)
        return total

    def signed_sum(self) -> int:
        sizes = set(self.inside) | set(self.outside)
        return sum((i - 2) * (self.inside.get(i, 0) - self.outside.get(i, 0))
                   for i in sizes)


@dataclass(frozen=True)
class GrinbergianVerdict:
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    NOT = "NotGrinbergian"

    kind: str
    exceptional_face: int | None = None
    witness_split: GrinbergSplit | None = None


def cycle_face_split(g: PlaneGraph, cycle: list[int]) -> GrinbergSplit:
    """Classify every face of g as inside or outside the Hamiltonian cycle.

    Sides are the two components of the dual restricted to edges not on the
    cycle; the side containing face 0 is called outside.
    """
    if not g.is_simple:
        raise NotSimple("face split needs a simple plane graph")
    if not is_cycle_witness(g, cycle):
        raise NotHamiltonian(f"not a Hamiltonian cycle: {cycle}")
    k = len(cycle)
    on_cycle = set()
    for i in range(k):
        a, b = cycle[i], cycle[(i + 1) % k]
        on_cycle.add((a, b) if a < b else (b, a))

    nf = g.face_count
    side = [-1] * nf
    side[0] = 0
    queue = deque([0])
    while queue:
        fid = queue.popleft()
        for d in g.face_list()[fid]:
            u, v = g.origin(d), g.head(d)
            if ((u, v) if u < v else (v, u)) in on_cycle:
                continue
            other = g.face_of(g.twin(d))
            if side[other] == -1:
                side[other] = side[fid]
                queue.append(other)
    if any(s == -1 for s in side):
        for fid in range(nf):
            if side[fid] == -1:
                side[fid] = 1
    inside: Counter = Counter()
    outside: Counter = Counter()
    for fid in range(nf):
        size = len(g.face_list()[fid])
        (outside if side[fid] == 0 else inside)[size] += 1
    if not inside:
        raise NotHamiltonian("cycle does not separate the faces")
    return GrinbergSplit(dict(inside), dict(outside))


def grinberg_sum(g: PlaneGraph, cycle: list[int]) -> int:
    """Signed face sum sum_i (i-2)(f_i - f'_i) over the cycle's two sides."""
    return cycle_face_split(g, cycle).signed_sum()


def grinberg_feasible(fs: Mapping[int, int]) -> GrinbergSplit | None:
    """A zero-sum split of the face multiset, or None if none exists.

    Subset-sum with F_i items of weight i - 2 per size i, target half the
    total weight; bitmask DP with power-of-two bundling, witness rebuilt by
    walking the DP stages backwards.
    """
    fs = {i: c for i, c in fs.items() if c}
    if any(i < 3 for i in fs):
        raise GraphError("face sizes must be >= 3")
    total = sum((i - 2) * c for i, c in fs.items())
    if total % 2:
        return None
    half = total // 2

    chunks: list[tuple[int, int]] = []  # (size, bundled multiplicity)
    for i in sorted(fs):
        left, k = fs[i], 1
        while left:
            take = min(k, left)
            chunks.append((i, take))
            left -= take
            k <<= 1
    stages = [1]
    mask = 1
    for i, take in chunks:
        mask |= mask << ((i - 2) * take)
        stages.append(mask)
    if not (mask >> half) & 1:
        return None

    inside: Counter = Counter()
    rem = half
    for idx in range(len(chunks) - 1, -1, -1):
        i, take = chunks[idx]
        w = (i - 2) * take
        if rem >= w and (stages[idx] >> (rem - w)) & 1:
            inside[i] += take
            rem -= w
    outside = {i: fs[i] - inside[i] for i in fs}
    split = GrinbergSplit(dict(inside), outside)
    assert split.signed_sum() == 0
    return split


def classify_grinbergian(g: PlaneGraph) -> GrinbergianVerdict:
    """Type1 / Type2 / NotGrinbergian for a simple 3-connected plane graph.

    Type1: every face but one has neutral size.  Type2: every face even, odd
    order.  Anything else is NotGrinbergian, with a zero-sum split attached
    when one exists.
    """
    if not g.is_simple:
        raise NotSimple("classification defined for simple graphs")
    if not is_three_connected(g):
        raise NotThreeConnected("classification defined for 3-connected graphs")
    sizes = [len(f) for f in g.face_list()]
    exceptional = [fid for fid, s in enumerate(sizes) if not is_neutral_size(s)]
    if len(exceptional) == 1:
        return GrinbergianVerdict(GrinbergianVerdict.TYPE1,
                                  exceptional_face=exceptional[0])
    if g.n % 2 == 1 and all(s % 2 == 0 for s in sizes):
        return GrinbergianVerdict(GrinbergianVerdict.TYPE2)
    return GrinbergianVerdict(GrinbergianVerdict.NOT,
                              witness_split=grinberg_feasible(face_sequence(g)))


@dataclass(frozen=True)
class Type1Report:
    """Structural facts about the exceptional face of a Type1 graph."""
    exceptional_face: int
    face_size: int
    order: int
    min_degree_on_face: int

    @property
    def face_size_residue_ok(self) -> bool:
        # weight of the exceptional face is 2 mod 3, i.e. size is 1 mod 3
        return self.face_size % 3 == 1

    @property
    def order_multiple_of_three(self) -> bool:
        return self.order % 3 == 0

    @property
    def min_degree_ok(self) -> bool:
        return self.min_degree_on_face >= 4

    def violations(self) -> list[str]:
        out = []
        if not self.face_size_residue_ok:
            out.append(f"exceptional face size {self.face_size} != 1 mod 3")
        if not self.order_multiple_of_three:
            out.append(f"order {self.order} not a multiple of 3")
        if not self.min_degree_ok:
            out.append(f"degree {self.min_degree_on_face} < 4 on exceptional face")
        return out

    @property
    def ok(self) -> bool:
        return not self.violations()


def check_type1_properties(g: PlaneGraph, *,
                           node_budget: int | None = None) -> Type1Report:
    """Exceptional-face facts for a Type1 graph verified non-Hamiltonian
    with all one-vertex deletions Hamiltonian."""
    verdict = classify_grinbergian(g)
    if verdict.kind != GrinbergianVerdict.TYPE1:
        raise PreconditionFailed(f"classification is {verdict.kind}, not Type1")
    rep = is_hypohamiltonian(g, node_budget=node_budget)
    if rep.verdict != "hypohamiltonian":
        raise PreconditionFailed(f"graph is {rep.verdict}")
    fid = verdict.exceptional_face
    verts = g.face_vertices(fid)
    return Type1Report(
        exceptional_face=fid,
        face_size=len(g.face_list()[fid]),
        order=g.n,
        min_degree_on_face=min(g.degree(v) for v in set(verts)),
    )


# ---- exhaustive face-multiset scan ----

def enumerate_face_sequences(n_max: int, f_values=None,
                             ) -> Iterator[tuple[int, tuple[int, ...]]]:
    """All face-size multisets a 3-connected simple plane graph of order
    <= n_max could carry, as (n, nonincreasing sizes).

    With f faces and m edges: n = m - f + 2, every size in [3, n], total
    size 2m, and 3f/2 <= m <= 3f - 6 (the two Euler-side bounds; they
    mirror m <= 3n - 6 and min degree 3 on the primal side).
    """
    for f in (sorted(f_values) if f_values is not None else range(4, 2 * n_max)):
        m_lo = (3 * f + 1) // 2
        m_hi = min(3 * f - 6, n_max + f - 2)
        for m in range(m_lo, m_hi + 1):
            n = m - f + 2
            if n < 4:
                continue
            yield from ((n, seq) for seq in _partitions(2 * m, f, min(n, 2 * m - 3 * (f - 1))))


def _partitions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    # nonincreasing sequences of `parts` sizes in [3, cap] summing to total
    seq: list[int] = []

    def rec(rem: int, k: int, hi: int):
        if k == 0:
            if rem == 0:
                yield tuple(seq)
            return
        lo = max(3, rem - hi * (k - 1))
        top = min(hi, rem - 3 * (k - 1))
        for s in range(top, lo - 1, -1):
            seq.append(s)
            yield from rec(rem - s, k - 1, s)
            seq.pop()

    yield from rec(total, parts, cap)


def _sequence_is_grinbergian_form(n: int, sizes: tuple[int, ...]) -> bool:
    exceptional = sum(1 for s in sizes if not is_neutral_size(s))
    if exceptional == 1:
        return True
    return n % 2 == 1 and all(s % 2 == 0 for s in sizes)


def _scan_range(args) -> tuple[int, list[tuple[int, tuple[int, ...]]]]:
    n_max, f_values = args
    examined = 0
    bad = []
    for n, sizes in enumerate_face_sequences(n_max, f_values):
        examined += 1
        if _sequence_is_grinbergian_form(n, sizes):
            continue
        if grinberg_feasible(Counter(sizes)) is None:
            bad.append((n, sizes))
    return examined, bad


def verify_completeness(n_max: int, *, workers: int | None = None,
                        ) -> list[tuple[int, tuple[int, ...]]]:
    """Face multisets up to order n_max that are split-infeasible without
    being of Type1/Type2 shape.  Expected empty.

    A nonempty answer would exhibit a non-Hamiltonicity obstruction that the
    two structural families do not explain.
    """
    f_all = set(range(4, 2 * n_max))
    if not workers or workers <= 1:
        return _scan_range((n_max, None))[1]
    import multiprocessing as mp
    buckets: list[set[int]] = [set() for _ in range(workers)]
    for i, f in enumerate(sorted(f_all)):
        buckets[i % workers].add(f)
    with mp.Pool(workers) as pool:
        parts = pool.map(_scan_range, [(n_max, b) for b in buckets if b])
    out: list[tuple[int, tuple[int, ...]]] = []
    for _, bad in parts:
        out.extend(bad)
    out.sort()
    return out


def completeness_report(n_max: int) -> Iterator[tuple[int, int, int]]:
    """Per-order scan summary: (n, sequences examined, counterexamples)."""
    by_n: dict[int, list[int]] = {}
    for n, sizes in enumerate_face_sequences(n_max):
        row = by_n.setdefault(n, [0, 0])
        row[0] += 1
        if not _sequence_is_grinbergian_form(n, sizes) and \
                grinberg_feasible(Counter(sizes)) is None:
            row[1] += 1
    for n in sorted(by_n):
        yield n, by_n[n][0], by_n[n][1]
