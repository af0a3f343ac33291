"""Loop-free digraphs on up to 64 labelled vertices, stored as bit rows.

Vertices are dense integer labels 0..n-1.  Row ``u`` is a plain int whose
bit ``v`` is set exactly when the arc (u, v) is present, so a whole
out-neighbourhood fits in one machine word at the capacity limit.  Digraph
values are immutable and hashable; every structural operation returns a
fresh value, which makes them safe to share across parallel workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def _iter_bits(word: int) -> Iterator[int]:
    while word:
        low = word & -word
        yield low.bit_length() - 1
        word ^= low


@dataclass(frozen=True, order=True)
class Digraph:
    """Immutable digraph; instances compare and sort by (n, rows)."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        for u, row in enumerate(self.rows):
            if row >> self.n:
                raise ValueError(f"row {u} addresses vertices >= n={self.n}")
            if row >> u & 1:
                raise ValueError(f"loop arc ({u}, {u}) is not allowed")

    @cached_property
    def e(self) -> int:
        """Number of arcs."""
        return sum(row.bit_count() for row in self.rows)

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def out_degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def in_degree(self, v: int) -> int:
        return sum(row >> v & 1 for row in self.rows)

    def out_neighbors(self, u: int) -> Iterator[int]:
        return _iter_bits(self.rows[u])

    def in_neighbors(self, v: int) -> Iterator[int]:
        return (u for u in range(self.n) if self.rows[u] >> v & 1)

    def arcs(self) -> Iterator[tuple[int, int]]:
        """All arcs in lexicographic (tail, head) order."""
        for u in range(self.n):
            for v in _iter_bits(self.rows[u]):
                yield (u, v)


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Build a digraph from an arc list.  Duplicate arcs are idempotent.

    Raises ValueError for loops (u, u), out-of-range endpoints, and vertex
    counts outside 1..64.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for u, v in arcs:
        if u == v:
            raise ValueError(f"loop arc ({u}, {u}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
    return Digraph(n, tuple(rows))


def digon_count(g: Digraph) -> int:
    """Number of unordered pairs {u, v} joined by arcs in both directions."""
    total = 0
    for u in range(g.n):
        row = g.rows[u] >> (u + 1)  # partners above u, so each pair counts once
        for off in _iter_bits(row):
            v = u + 1 + off
            if g.rows[v] >> u & 1:
                total += 1
    return total


def permute(g: Digraph, perm: Sequence[int]) -> Digraph:
    """Relabel vertices: arc (u, v) in g becomes (perm[u], perm[v])."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("mapping is not a permutation of 0..n-1")
    rows = [0] * g.n
    for u in range(g.n):
        target = 0
        for v in _iter_bits(g.rows[u]):
            target |= 1 << perm[v]
        rows[perm[u]] = target
    return Digraph(g.n, tuple(rows))


def is_weakly_connected(g: Digraph) -> bool:
    """True iff the underlying undirected graph is connected."""
    und = list(g.rows)
    for u in range(g.n):
        for v in _iter_bits(g.rows[u]):
            und[v] |= 1 << u
    seen = 1
    frontier = 1
    while frontier:
        grown = 0
        for u in _iter_bits(frontier):
            grown |= und[u]
        frontier = grown & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing integer sequence with prefix sums of the t largest.

    ``prefix[t]`` is the sum of the t largest values; ``prefix[0] == 0`` and
    ``prefix[n]`` equals the total.
    """

    values: tuple[int, ...]
    prefix: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < b for a, b in zip(self.values, self.values[1:])):
            raise ValueError("values must be non-increasing")

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> DegreeSequence:
        values = tuple(sorted(degrees, reverse=True))
        prefix = [0]
        for d in values:
            prefix.append(prefix[-1] + d)
        return cls(values, tuple(prefix))

    def __len__(self) -> int:
        return len(self.values)


def out_degree_sequence(g: Digraph) -> DegreeSequence:
    """Descending sequence of all n outdegrees, with prefix sums."""
    return DegreeSequence.from_degrees(g.out_degree(u) for u in range(g.n))
