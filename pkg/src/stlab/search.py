"""Brute-force enumeration oracle over all digraphs of small order.

Every loop-free digraph on n labelled vertices is one integer mask over
the n(n-1) ordered pairs, taken in row-major order skipping the diagonal
(bit u*(n-1) + (v if v < u else v - 1) is the arc (u, v)).  The sweep is
vectorized with numpy over contiguous mask ranges; invariants stay exact
because every quantity is a small integer.

The mask space is cut into fixed 2^18-mask chunks regardless of worker
count, each chunk reduces to (local max, attaining masks), and the merge
takes the global max and unions the witnesses, so reports are identical
for any number of workers.  Witnesses are deduplicated up to isomorphism
via canonical labelling: minimum row serialization over all vertex
relabellings compatible with iterated (outdegree, indegree) colour
refinement, which is exact (no hashing heuristics).
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from stlab.digraph import Digraph, is_weakly_connected

ENUM_CAP = 6
ISO_CAP = 10
CHUNK_BITS = 18
OBJECTIVES = ("LE", "M1", "ARCS")
SCOPES = ("all", "connected_only")


# ---------------------------------------------------------------------------
# Mask encoding


def pair_order(n: int) -> list[tuple[int, int]]:
    """The fixed bit order: ordered pairs row-major, diagonal skipped."""
    return [(u, v) for u in range(n) for v in range(n) if v != u]


def pair_index(n: int, u: int, v: int) -> int:
    return u * (n - 1) + (v if v < u else v - 1)


def digraph_from_mask(n: int, mask: int) -> Digraph:
    w = n - 1
    group = (1 << w) - 1
    rows = []
    for u in range(n):
        grp = (mask >> (u * w)) & group
        rows.append((grp & ((1 << u) - 1)) | ((grp >> u) << (u + 1)))
    return Digraph(n, tuple(rows))


def mask_of_digraph(g: Digraph) -> int:
    w = g.n - 1
    mask = 0
    for u, row in enumerate(g.rows):
        grp = (row & ((1 << u) - 1)) | ((row >> (u + 1)) << u)
        mask |= grp << (u * w)
    return mask


def enumerate_digraphs(n: int):
    """Yield every loop-free digraph on n labelled vertices exactly once."""
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"enumeration is capped at n <= {ENUM_CAP}, got {n}")
    for mask in range(1 << (n * (n - 1))):
        yield digraph_from_mask(n, mask)


@lru_cache(maxsize=None)
def cycle_arc_masks(n: int, length: int) -> tuple[int, ...]:
    """Arc masks of every directed cycle of exactly ``length`` on n vertices.

    Each cycle appears once, anchored at its minimum vertex.  Empty when
    length > n (no such cycle fits).
    """
    if length < 2:
        raise ValueError(f"cycle length must be >= 2, got {length}")
    masks = []
    for anchor in range(n):
        for tail in itertools.permutations(range(anchor + 1, n), length - 1):
            seq = (anchor,) + tail
            m = 0
            for i in range(length):
                m |= 1 << pair_index(n, seq[i], seq[(i + 1) % length])
            masks.append(m)
    return tuple(masks)


# ---------------------------------------------------------------------------
# Vectorized sweep


@lru_cache(maxsize=None)
def _pop_table(bits: int) -> np.ndarray:
    return np.array([v.bit_count() for v in range(1 << bits)], dtype=np.int64)


def _scan_chunk(args: tuple) -> tuple[int | None, list[int], int]:
    """Reduce one contiguous mask range to (local max, attaining masks, count)."""
    n, lo, hi, forbidden_len, objective, connected_only = args
    masks = np.arange(lo, hi, dtype=np.int64)
    searched = hi - lo

    free = np.ones(masks.shape, dtype=bool)
    if forbidden_len <= n:
        for cm in cycle_arc_masks(n, forbidden_len):
            free &= (masks & cm) != cm
    if not free.any():
        return (None, [], searched)

    w = n - 1
    pop = _pop_table(w)
    group = (1 << w) - 1
    values = np.zeros(masks.shape, dtype=np.int64)
    for u in range(n):
        deg = pop[(masks >> (u * w)) & group]
        values += deg if objective == "ARCS" else deg * deg
    if objective == "LE":
        for u in range(n):
            for v in range(u + 1, n):
                both = (masks >> pair_index(n, u, v)) & (masks >> pair_index(n, v, u)) & 1
                values += 2 * both

    if not connected_only:
        vmax = int(values[free].max())
        hits = np.flatnonzero(free & (values == vmax))
        return (vmax, [int(i) + lo for i in hits], searched)

    free_values = values[free]
    free_masks = np.flatnonzero(free) + lo
    for v in np.unique(free_values)[::-1]:
        candidates = free_masks[free_values == v]
        good = [int(m) for m in candidates if is_weakly_connected(digraph_from_mask(n, int(m)))]
        if good:
            return (int(v), good, searched)
    return (None, [], searched)


@dataclass(frozen=True)
class ExtremalSearchReport:
    """Outcome of one exhaustive extremal search.

    Witnesses are the canonical representatives of every isomorphism class
    attaining the maximum, sorted by canonical bytes, so reports are fully
    deterministic.  elapsed_ms is wall-clock bookkeeping only and is kept
    out of the canonical JSON rendering.
    """

    n: int
    forbidden_len: int
    objective: str
    scope: str
    max_value: int
    witnesses: tuple[Digraph, ...]
    searched_count: int
    elapsed_ms: int


def search_extremal(
    n: int,
    forbidden_len: int,
    objective: str,
    scope: str = "all",
    jobs: int = 1,
    allow_slow: bool = False,
) -> ExtremalSearchReport:
    """Exact maximum of the objective over all forbidden-cycle-free digraphs.

    objective is one of LE, M1, ARCS (case-insensitive); scope "all" or
    "connected_only".  forbidden_len may exceed n, in which case nothing is
    excluded.  n = 6 sweeps 2^30 masks and must be enabled with allow_slow.
    """
    obj = str(objective).upper()
    if obj not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    if forbidden_len < 2:
        raise ValueError(f"forbidden cycle length must be >= 2, got {forbidden_len}")
    if not 1 <= n <= ENUM_CAP:
        raise ValueError(f"search is capped at n <= {ENUM_CAP}, got {n}")
    if n == ENUM_CAP and not allow_slow:
        raise ValueError("n=6 sweeps 2^30 masks; enable it explicitly with allow_slow")
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")

    start = time.perf_counter()
    total = 1 << (n * (n - 1))
    step = 1 << CHUNK_BITS
    tasks = [
        (n, lo, min(lo + step, total), forbidden_len, obj, scope == "connected_only")
        for lo in range(0, total, step)
    ]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as pool:
            results = list(pool.map(_scan_chunk, tasks))
    else:
        results = [_scan_chunk(task) for task in tasks]

    best: int | None = None
    witness_masks: list[int] = []
    searched = 0
    for local_max, local_masks, count in results:
        searched += count
        if local_max is None:
            continue
        if best is None or local_max > best:
            best = local_max
            witness_masks = list(local_masks)
        elif local_max == best:
            witness_masks.extend(local_masks)
    if best is None:
        raise RuntimeError("no digraph satisfied the scope; this should be impossible")

    unique: dict[bytes, CanonicalForm] = {}
    for mask in witness_masks:
        form = canonical_label(digraph_from_mask(n, mask))
        unique[form.data] = form
    witnesses = tuple(unique[data].to_digraph() for data in sorted(unique))
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    return ExtremalSearchReport(
        n=n,
        forbidden_len=forbidden_len,
        objective=obj,
        scope=scope,
        max_value=int(best),
        witnesses=witnesses,
        searched_count=searched,
        elapsed_ms=elapsed_ms,
    )


# ---------------------------------------------------------------------------
# Isomorphism and canonical labelling


def _refine_colors(graphs: list[Digraph]) -> list[list[int]]:
    """Joint iterated colour refinement; ranks are comparable across graphs."""
    items = [(gi, v) for gi, g in enumerate(graphs) for v in range(g.n)]
    keys = {
        (gi, v): (graphs[gi].out_degree(v), graphs[gi].in_degree(v)) for gi, v in items
    }
    colors = {}
    distinct = 0
    while True:
        ranking = {key: rank for rank, key in enumerate(sorted(set(keys.values())))}
        colors = {item: ranking[keys[item]] for item in items}
        if len(ranking) == distinct:
            break
        distinct = len(ranking)
        keys = {}
        for gi, v in items:
            g = graphs[gi]
            out_c = tuple(sorted(colors[(gi, w)] for w in g.out_neighbors(v)))
            in_c = tuple(sorted(colors[(gi, w)] for w in g.in_neighbors(v)))
            keys[(gi, v)] = (colors[(gi, v)], out_c, in_c)
    return [[colors[(gi, v)] for v in range(g.n)] for gi, g in enumerate(graphs)]


def _permuted_rows(g: Digraph, perm: list[int]) -> tuple[int, ...]:
    rows = [0] * g.n
    for u in range(g.n):
        target = 0
        word = g.rows[u]
        while word:
            low = word & -word
            target |= 1 << perm[low.bit_length() - 1]
            word ^= low
        rows[perm[u]] = target
    return tuple(rows)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant serialization: equal bytes iff isomorphic."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    def to_digraph(self) -> Digraph:
        n = self.data[0]
        rows = tuple(
            int.from_bytes(self.data[1 + 2 * u : 3 + 2 * u], "big") for u in range(n)
        )
        return Digraph(n, rows)


def canonical_label(g: Digraph) -> CanonicalForm:
    """Minimum row serialization over refinement-compatible relabellings."""
    if g.n > ISO_CAP:
        raise ValueError(f"canonical labelling is capped at n <= {ISO_CAP}, got {g.n}")
    colors = _refine_colors([g])[0]
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(colors[v], []).append(v)
    ordered_classes = [classes[c] for c in sorted(classes)]
    best: tuple[int, ...] | None = None
    perm = [0] * g.n
    for pick in itertools.product(*(itertools.permutations(c) for c in ordered_classes)):
        pos = 0
        for block in pick:
            for v in block:
                perm[v] = pos
                pos += 1
        rows = _permuted_rows(g, perm)
        if best is None or rows < best:
            best = rows
    data = bytes([g.n]) + b"".join(row.to_bytes(2, "big") for row in best)
    return CanonicalForm(data)


def are_isomorphic(g: Digraph, h: Digraph) -> bool:
    """Permutation search pruned by joint colour refinement."""
    if g.n != h.n:
        raise ValueError(f"order mismatch: {g.n} vs {h.n}")
    if g.n > ISO_CAP:
        raise ValueError(f"isomorphism testing is capped at n <= {ISO_CAP}, got {g.n}")
    if g.e != h.e:
        return False
    colors_g, colors_h = _refine_colors([g, h])
    if sorted(colors_g) != sorted(colors_h):
        return False
    candidates: dict[int, list[int]] = {}
    for w, color in enumerate(colors_h):
        candidates.setdefault(color, []).append(w)
    order = sorted(range(g.n), key=lambda v: (len(candidates[colors_g[v]]), v))
    image = [-1] * g.n
    used = [False] * h.n

    def place(idx: int) -> bool:
        if idx == g.n:
            return True
        v = order[idx]
        for w in candidates[colors_g[v]]:
            if used[w]:
                continue
            if any(
                g.has_arc(v, v2) != h.has_arc(w, image[v2])
                or g.has_arc(v2, v) != h.has_arc(image[v2], w)
                for v2 in order[:idx]
            ):
                continue
            image[v] = w
            used[w] = True
            if place(idx + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return place(0)
