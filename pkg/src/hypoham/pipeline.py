"""Level-by-level generation of 4-face-deflatable plane graphs.

The base level of each chain is the dual of a seed set: simple connected
plane graphs with minimum degree 5 and a prescribed face count.  Each
further level applies every 2-path inflation to every member of the
previous level and deduplicates by canonical code, raising the order and
the 4-face count by one per step.  Hypohamiltonian members are found by
filtering each level (simplicity, then 3-connectivity, then exhaustive
search) and are archived with their per-vertex witness cycles.

A catalog directory holds one subdirectory per level: the members in
planar_code, the hypohamiltonian subset, witness cycles, and a JSON
manifest with counts, sequence summaries, timing, and completeness flags.
Levels whose seeds are known-complete and whose parents are complete are
marked exhaustive; search-budget misses only demote the hypo subset, not
the membership list, so child levels stay exhaustive.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .plane import (GraphError, PlaneGraph, canonical_code, degree_sequence,
                    dual, face_sequence, format_multiset, is_three_connected)
from .planarcode import load_planar_code, write_planar_code
from .hamilton import HypoReport, SearchBudgetExceeded, is_hypohamiltonian
from .transforms import enumerate_inflations, inflate_2path


class SeedValidationFailure(GraphError):
    pass


class MissingSeeds(GraphError):
    pass


class UnknownLevel(GraphError):
    pass


class BudgetExhausted(GraphError):
    """Some searches hit the node budget; the catalog on disk is valid but
    the affected levels are flagged hypo-incomplete."""

    def __init__(self, message: str, catalog: "Catalog | None" = None):
        super().__init__(message)
        self.catalog = catalog


@dataclass(frozen=True)
class LevelKey:
    """Level coordinates: order n and 4-face count f; the chain containing
    the level starts at order n - f."""
    n: int
    f: int

    def __post_init__(self):
        if self.n < 20:
            raise GraphError(f"levels start at order 20, got {self.n}")
        if not 0 <= self.f <= self.n - 20:
            raise GraphError(f"4-face count {self.f} outside [0, {self.n - 20}]")

    @property
    def base_n(self) -> int:
        return self.n - self.f

    @property
    def dirname(self) -> str:
        return f"n{self.n}_f{self.f}"


def seed_level(d5_graphs: Sequence[PlaneGraph],
               n: int | None = None) -> list[PlaneGraph]:
    """Dualize a min-degree-5 seed set into the base level of order n.

    Every seed must be simple with minimum degree 5 and exactly n faces
    (so its dual has n vertices); duplicates collapse by canonical code.
    """
    out: dict[bytes, PlaneGraph] = {}
    for g in d5_graphs:
        if not g.is_simple:
            raise SeedValidationFailure("seed graph is not simple")
        mind = min(g.degree(v) for v in range(g.n))
        if mind < 5:
            raise SeedValidationFailure(f"seed has a degree-{mind} vertex")
        if n is None:
            n = g.face_count
        if g.face_count != n:
            raise SeedValidationFailure(
                f"seed has {g.face_count} faces, expected {n}")
        d = dual(g)
        out[canonical_code(d)] = d
    return [out[c] for c in sorted(out)]


def _inflate_all(g: PlaneGraph) -> list[tuple[bytes, PlaneGraph]]:
    pairs = []
    for site in enumerate_inflations(g):
        h = inflate_2path(g, site)
        pairs.append((canonical_code(h), h))
    return pairs


def next_level(prev: Sequence[PlaneGraph],
               workers: int | None = None) -> list[PlaneGraph]:
    """All inflations of all members of a level, deduplicated by canonical
    code and sorted by it, so the result is worker-count independent."""
    merged: dict[bytes, PlaneGraph] = {}
    if workers and workers > 1 and len(prev) > 1:
        import multiprocessing as mp
        with mp.Pool(workers) as pool:
            for pairs in pool.imap_unordered(_inflate_all, prev):
                merged.update(pairs)
    else:
        for g in prev:
            merged.update(_inflate_all(g))
    return [merged[c] for c in sorted(merged)]


def _filter_one(args) -> tuple[int, str, HypoReport | None]:
    idx, g, node_budget = args
    if not g.is_simple:
        return idx, "not_simple", None
    if not is_three_connected(g):
        return idx, "not_3connected", None
    try:
        rep = is_hypohamiltonian(g, node_budget=node_budget)
    except SearchBudgetExceeded:
        return idx, "inconclusive", None
    if rep.verdict == "hypohamiltonian":
        return idx, "hypohamiltonian", rep
    return idx, rep.verdict, None


def filter_hypo(level: Sequence[PlaneGraph], *,
                node_budget: int | None = None,
                workers: int | None = None,
                ) -> tuple[list[tuple[int, HypoReport]], list[int]]:
    """Hypohamiltonian members of a level with their witness reports.

    Gates run cheapest first: simplicity, 3-connectivity, then the
    exhaustive search.  Returns (hits, inconclusive indices); an index is
    inconclusive when its search hit the node budget.
    """
    tasks = [(i, g, node_budget) for i, g in enumerate(level)]
    if workers and workers > 1 and len(tasks) > 1:
        import multiprocessing as mp
        with mp.Pool(workers) as pool:
            results = pool.map(_filter_one, tasks)
    else:
        results = [_filter_one(t) for t in tasks]
    hits = [(i, rep) for i, tag, rep in results if tag == "hypohamiltonian"]
    inconclusive = [i for i, tag, _ in results if tag == "inconclusive"]
    return sorted(hits), sorted(inconclusive)


# ---- catalog persistence ----

@dataclass(frozen=True)
class StatsRow:
    face_seq: str
    degree_seq: str
    count: int


def _sequence_rows(graphs: Sequence[PlaneGraph]) -> list[StatsRow]:
    groups: dict[tuple, int] = {}
    for g in graphs:
        key = (tuple(sorted(degree_sequence(g).items())),
               tuple(sorted(face_sequence(g).items())))
        groups[key] = groups.get(key, 0) + 1
    rows = []
    for (deg, fac) in sorted(groups):
        rows.append(StatsRow(format_multiset(dict(fac)),
                             format_multiset(dict(deg)),
                             groups[(deg, fac)]))
    return rows


class Catalog:
    """Directory of generated levels: graphs.pc, hypo.pc, witnesses.txt and
    manifest.json per level subdirectory n{N}_f{F}."""

    def __init__(self, root: str | Path):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    def level_dir(self, key: LevelKey) -> Path:
        return self.root / key.dirname

    def has_level(self, key: LevelKey) -> bool:
        return (self.level_dir(key) / "manifest.json").is_file()

    def read_manifest(self, key: LevelKey) -> dict:
        path = self.level_dir(key) / "manifest.json"
        if not path.is_file():
            raise UnknownLevel(f"no level {key.dirname} in {self.root}")
        return json.loads(path.read_text())

    def load_graphs(self, key: LevelKey) -> list[PlaneGraph]:
        return load_planar_code((self.level_dir(key) / "graphs.pc").read_bytes())

    def load_hypo(self, key: LevelKey) -> list[PlaneGraph]:
        return load_planar_code((self.level_dir(key) / "hypo.pc").read_bytes())

    def write_level(self, key: LevelKey, graphs: Sequence[PlaneGraph],
                    hypo: Sequence[tuple[int, HypoReport]],
                    *, exhaustive: bool, inconclusive: Sequence[int] = (),
                    seconds: float = 0.0, note: str = "") -> None:
        d = self.level_dir(key)
        d.mkdir(parents=True, exist_ok=True)
        (d / "graphs.pc").write_bytes(write_planar_code(graphs))
        hypo_graphs = [graphs[i] for i, _ in hypo]
        (d / "hypo.pc").write_bytes(write_planar_code(hypo_graphs))
        lines = []
        for i, rep in hypo:
            lines.append(f"# graph {i}")
            for v in sorted(rep.witnesses):
                cyc = " ".join(str(x) for x in rep.witnesses[v])
                lines.append(f"{v}: {cyc}")
        (d / "witnesses.txt").write_text("\n".join(lines) + ("\n" if lines else ""))
        manifest = {
            "n": key.n,
            "f": key.f,
            "count": len(graphs),
            "hypo_count": len(hypo),
            "exhaustive": bool(exhaustive),
            "hypo_exhaustive": not inconclusive,
            "inconclusive": list(inconclusive),
            "seconds": round(seconds, 3),
            "rows": [row.__dict__ for row in _sequence_rows(graphs)],
            "hypo_rows": [row.__dict__ for row in _sequence_rows(hypo_graphs)],
            "note": note,
        }
        (d / "manifest.json").write_text(json.dumps(manifest, indent=1,
                                                    ensure_ascii=False) + "\n")

    def level_keys(self) -> list[LevelKey]:
        keys = []
        for p in self.root.iterdir():
            if p.is_dir() and p.name.startswith("n") and "_f" in p.name:
                try:
                    n_s, f_s = p.name[1:].split("_f")
                    keys.append(LevelKey(int(n_s), int(f_s)))
                except (ValueError, GraphError):
                    continue
        return sorted(keys, key=lambda k: (k.n, k.f))

    def hypo_union(self, n: int) -> list[PlaneGraph]:
        """All archived hypohamiltonian graphs of order n across 4-face
        counts.  Levels differ in 4-face count, so no cross-level dedup is
        needed."""
        out = []
        for key in self.level_keys():
            if key.n == n and self.has_level(key):
                out.extend(self.load_hypo(key))
        return out


# ---- the driver ----

def _normalize_seeds(seeds) -> dict[int, tuple[list[PlaneGraph], bool, str]]:
    norm = {}
    for base_n, value in seeds.items():
        note = ""
        if isinstance(value, tuple):
            if len(value) == 3:
                graphs, exhaustive, note = value
            else:
                graphs, exhaustive = value
        else:
            graphs, exhaustive = value, False
        norm[int(base_n)] = (list(graphs), bool(exhaustive), note)
    return norm


def run_pipeline(seeds: Mapping, n_target: int, *,
                 f_max: int | None = None,
                 budget: int | None = None,
                 root: str | Path = "catalog",
                 workers: int | None = None,
                 resume: bool = True) -> Catalog:
    """Populate a catalog with every level of order n_target reachable from
    the given seed bases (mapping base order -> graphs, optionally with an
    exhaustiveness flag and note).

    For 4-face count f the chain runs from base order n_target - f upward.
    `budget` caps search nodes per hypohamiltonicity query; queries that
    hit it leave their graph unresolved and the level flagged, and the run
    ends by raising BudgetExhausted (catalog intact).  With `resume`,
    levels already on disk are reloaded instead of recomputed, except
    non-exhaustive levels, which are rebuilt rather than trusted as
    parents.
    """
    seeds = _normalize_seeds(seeds)
    f_hi = n_target - 20 if f_max is None else min(f_max, n_target - 20)
    bases = [n_target - f for f in range(f_hi + 1) if n_target - f >= 20]
    usable = [b for b in bases if b in seeds]
    if not usable:
        raise MissingSeeds(
            f"no seed base among {bases} available for order {n_target}")

    catalog = Catalog(root)
    budget_hit: list[LevelKey] = []
    for base_n in sorted(usable, reverse=True):
        graphs_list, exhaustive, note = seeds[base_n]
        level = None
        for n in range(base_n, n_target + 1):
            key = LevelKey(n, n - base_n)
            if resume and catalog.has_level(key):
                manifest = catalog.read_manifest(key)
                if (manifest["exhaustive"] or not exhaustive) \
                        and not manifest["inconclusive"]:
                    level = catalog.load_graphs(key)
                    continue
            t0 = time.time()
            if level is None:
                level = seed_level(graphs_list, base_n)
            else:
                level = next_level(level, workers=workers)
            hypo, inconclusive = filter_hypo(level, node_budget=budget,
                                             workers=workers)
            catalog.write_level(key, level, hypo, exhaustive=exhaustive,
                                inconclusive=inconclusive,
                                seconds=time.time() - t0, note=note)
            if inconclusive:
                budget_hit.append(key)
    if budget_hit:
        names = ", ".join(k.dirname for k in budget_hit)
        raise BudgetExhausted(f"search budget hit in levels: {names}", catalog)
    return catalog


def stats(catalog: Catalog, key: LevelKey) -> list[StatsRow]:
    """Hypohamiltonian-member summary rows of a stored level, grouped by
    (face sequence, degree sequence) and sorted by degree sequence."""
    manifest = catalog.read_manifest(key)
    return [StatsRow(**row) for row in manifest["hypo_rows"]]


# ---- bundled seed fixtures ----

def bundled_seeds() -> dict[int, tuple[list[PlaneGraph], bool, str]]:
    """Seed sets shipped with the package, keyed by face count.

    Orders 20-22 and 24 are complete: 21 and 22 are genuinely empty (Euler
    counting leaves no candidate order), 20 and 24 are the unique
    minimum-degree-5 triangulations on 12 and 14 vertices.  Larger seed
    sets must be generated externally.
    """
    from importlib import resources
    out: dict[int, tuple[list[PlaneGraph], bool, str]] = {}
    data = resources.files("hypoham") / "data"
    meta = json.loads((data / "seeds.json").read_text())
    for base_n, info in meta.items():
        graphs = load_planar_code((data / info["file"]).read_bytes())
        out[int(base_n)] = (graphs, info["exhaustive"], info.get("note", ""))
    return out
