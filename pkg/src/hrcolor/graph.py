"""Simple undirected graphs with bit-mask vertex sets.

Vertices are 0-based indices. Vertex subsets are stored as integer bit
masks, so set algebra is exact and not capped at machine word size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, slots=True, repr=False)
class VertexSet:
    """Immutable subset of the vertices 0..capacity-1, backed by a bit mask."""

    mask: int
    capacity: int

    def __post_init__(self) -> None:
        if self.capacity < 0:
            raise ValueError("capacity must be non-negative")
        if self.mask < 0 or self.mask >> self.capacity:
            raise ValueError(
                f"mask {self.mask:#x} has members outside 0..{self.capacity - 1}"
            )

    @classmethod
    def from_vertices(cls, vertices: Iterable[int], capacity: int) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < capacity:
                raise ValueError(f"vertex {v} out of range 0..{capacity - 1}")
            mask |= 1 << v
        return cls(mask, capacity)

    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.capacity and bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check_same_universe(self, other: "VertexSet") -> None:
        if self.capacity != other.capacity:
            raise ValueError("vertex sets live in different universes")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.mask | other.mask, self.capacity)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.mask & other.mask, self.capacity)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check_same_universe(other)
        return VertexSet(self.mask & ~other.mask, self.capacity)

    def complement(self) -> "VertexSet":
        return VertexSet(~self.mask & ((1 << self.capacity) - 1), self.capacity)

    def issubset(self, other: "VertexSet") -> bool:
        self._check_same_universe(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference

    def __repr__(self) -> str:
        inner = ", ".join(str(v) for v in self)
        return f"VertexSet({{{inner}}}, capacity={self.capacity})"


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Self-loops and repeated edges are rejected at construction time.
    """

    __slots__ = ("n", "_edges", "_adj", "_closed")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({key[0]},{key[1]})")
            seen.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._edges = tuple(sorted(seen))
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        closed = []
        for u in range(n):
            m = 1 << u
            for w in adj[u]:
                m |= 1 << w
            closed.append(m)
        self._closed = tuple(closed)

    @property
    def num_vertices(self) -> int:
        return self.n

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) pairs with u < v, sorted."""
        return self._edges

    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        self._check_vertex(u)
        return self._adj[u]

    def degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self._adj[u])

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._closed[u] >> v & 1) and u != v

    @property
    def closed_masks(self) -> tuple[int, ...]:
        """Per-vertex closed neighborhoods as raw bit masks."""
        return self._closed

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range 0..{self.n - 1}")

    def closed_neighborhood(self, u: int) -> VertexSet:
        """The vertex u together with all its neighbors."""
        self._check_vertex(u)
        return VertexSet(self._closed[u], self.n)

    def closed_neighborhood_set(self, vertices: VertexSet) -> VertexSet:
        """Union of closed neighborhoods over the given set; empty for the empty set."""
        if vertices.capacity != self.n:
            raise ValueError("vertex set capacity does not match graph size")
        m = 0
        for u in vertices:
            m |= self._closed[u]
        return VertexSet(m, self.n)

    def surviving_components(self, removed: VertexSet) -> list[VertexSet]:
        """Connected components of the subgraph induced on the non-removed vertices.

        Components are listed in ascending order of their smallest vertex.
        Returns an empty list when every vertex is removed.
        """
        if removed.capacity != self.n:
            raise ValueError("vertex set capacity does not match graph size")
        survivors = ~removed.mask & self.full_mask
        closed = self._closed
        out: list[VertexSet] = []
        rem = survivors
        while rem:
            frontier = rem & -rem
            comp = 0
            while frontier:
                comp |= frontier
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    nxt |= closed[b.bit_length() - 1]
                    f ^= b
                frontier = nxt & survivors & ~comp
            out.append(VertexSet(comp, self.n))
            rem &= ~comp
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self._edges)})"


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices, 0-1-...-(n-1)-0."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on n vertices in index order."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    """Complete graph on n vertices."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; vertices of g2 are shifted up by g1.n."""
    shift = g1.n
    edges = list(g1.edges()) + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph(g1.n + g2.n, edges)


def add_isolated_vertex(g: Graph) -> Graph:
    """Same edges, one extra vertex of degree 0."""
    return Graph(g.n + 1, g.edges())


def induced_subgraph(g: Graph, keep: VertexSet) -> Graph:
    """Subgraph induced on `keep`, relabeled to 0..len(keep)-1 in ascending order."""
    if keep.capacity != g.n:
        raise ValueError("vertex set capacity does not match graph size")
    relabel = {v: i for i, v in enumerate(keep)}
    edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges()
        if u in keep and v in keep
    ]
    return Graph(len(relabel), edges)
