"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Every construction used by the domination engine lives here: the classic
families, complement, complementary prism, corona, k-join, and the
edge-list text format.  Graph values are immutable.
"""

from __future__ import annotations

import contextlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_VERTICES = 32
_max_vertices = DEFAULT_MAX_VERTICES


class GraphError(ValueError):
    """Invalid graph construction input."""


class ParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class SizeLimitError(GraphError):
    pass


def max_vertices() -> int:
    return _max_vertices


def set_max_vertices(limit: int) -> None:
    global _max_vertices
    if limit < 0:
        raise ValueError("vertex limit must be nonnegative")
    _max_vertices = limit


@contextlib.contextmanager
def vertex_limit(limit: int) -> Iterator[None]:
    """Temporarily change the maximum supported graph order."""
    old = _max_vertices
    set_max_vertices(limit)
    try:
        yield
    finally:
        set_max_vertices(old)


def check_size(n: int) -> None:
    if n > _max_vertices:
        raise SizeLimitError(f"graph order {n} exceeds the configured limit {_max_vertices}")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``adj[v]`` is the bitmask of ``N(v)``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if a >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(a):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return members(self.adj[v])

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    @property
    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self, degree: int | None = None) -> bool:
        ds = set(self.degrees())
        if len(ds) > 1:
            return False
        return degree is None or not ds or ds == {degree}

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Induced subgraph, relabelled to ``0..len(vertices)-1`` in sorted order."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return new_graph(len(vs), edges)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def new_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph from an edge list; duplicates are merged."""
    if n < 0:
        raise GraphError("vertex count must be nonnegative")
    check_size(n)
    adj = [0] * n
    for i, edge in enumerate(edges):
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {i} ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge {i} is a self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_masks(adj: Sequence[int]) -> Graph:
    check_size(len(adj))
    return Graph(len(adj), tuple(adj))


# Families


def complete(n: int) -> Graph:
    return new_graph(n, itertools.combinations(range(n), 2))


def empty(n: int) -> Graph:
    return new_graph(n)


def cycle(n: int) -> Graph:
    """C_n with edges ``{i, i+1 mod n}``."""
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class PartitionSpec:
    """Part sizes of a complete multipartite graph."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise GraphError("a partition needs at least one part")
        if any(p < 1 for p in self.parts):
            raise GraphError(f"every part must have size >= 1, got {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def p(self) -> int:
        return len(self.parts)

    def blocks(self) -> list[range]:
        """Vertex ranges of each part, parts laid out consecutively."""
        out, start = [], 0
        for size in self.parts:
            out.append(range(start, start + size))
            start += size
        return out


def complete_multipartite(spec: PartitionSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    blocks = spec.blocks()
    edges = [
        (u, v)
        for a, b in itertools.combinations(blocks, 2)
        for u in a
        for v in b
    ]
    return new_graph(spec.n, edges)


def complete_bipartite(n: int, m: int) -> Graph:
    return complete_multipartite((n, m))


def perfect_matching(n: int) -> Graph:
    if n % 2:
        raise GraphError("perfect matching needs an even order")
    return new_graph(n, [(i, i + 1) for i in range(0, n, 2)])


# Derived constructions


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..g.n-1`` followed by ``h`` shifted by ``g.n``."""
    check_size(g.n + h.n)
    adj = list(g.adj) + [a << g.n for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def complementary_prism(g: Graph) -> Graph:
    """G plus its complement on ``n..2n-1``, vertex ``i`` matched to ``i+n``."""
    n = g.n
    check_size(2 * n)
    gbar = complement(g)
    adj = [a | 1 << (v + n) for v, a in enumerate(g.adj)]
    adj += [(a << n) | 1 << v for v, a in enumerate(gbar.adj)]
    return Graph(2 * n, tuple(adj))


def corona_k1(g: Graph) -> Graph:
    """Attach a pendant vertex ``v+n`` to every vertex ``v``."""
    return k_join(g, empty(g.n), 1, JoinAssignment(tuple(frozenset({v}) for v in range(g.n))))


@dataclass(frozen=True)
class JoinAssignment:
    """For each vertex of G, the H-vertices (local indices) it is joined to."""

    targets: tuple[frozenset[int], ...]
    starred: bool = False

    def validate(self, g: Graph, h: Graph, k: int) -> None:
        if len(self.targets) != g.n:
            raise GraphError(f"assignment covers {len(self.targets)} vertices, G has {g.n}")
        for v, t in enumerate(self.targets):
            if any(not 0 <= u < h.n for u in t):
                raise GraphError(f"target of vertex {v} falls outside V(H)")
            if len(t) < k:
                raise GraphError(f"vertex {v} joined to {len(t)} < {k} vertices of H")
            if self.starred and len(t) != k:
                raise GraphError(f"starred join needs exactly {k} targets, vertex {v} has {len(t)}")


def cyclic_assignment(g_order: int, h_order: int, k: int, starred: bool = True) -> JoinAssignment:
    """Vertex ``i`` of G goes to H-vertices ``i, ..., i+k-1 (mod |V(H)|)``."""
    if k > h_order:
        raise GraphError(f"H has {h_order} < {k} vertices")
    return JoinAssignment(
        tuple(frozenset((i + j) % h_order for j in range(k)) for i in range(g_order)),
        starred=starred,
    )


def k_join(g: Graph, h: Graph, k: int, assignment: JoinAssignment) -> Graph:
    """Disjoint union of G (on ``0..g.n-1``) and H (shifted) plus join edges."""
    if k < 1:
        raise GraphError("k must be positive")
    if h.n < k:
        raise GraphError(f"H has {h.n} < {k} vertices")
    assignment.validate(g, h, k)
    base = disjoint_union(g, h)
    adj = list(base.adj)
    for v, targets in enumerate(assignment.targets):
        for u in targets:
            adj[v] |= 1 << (g.n + u)
            adj[g.n + u] |= 1 << v
    return Graph(base.n, tuple(adj))


# Module-level accessors


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return g.min_degree


def max_degree(g: Graph) -> int:
    return g.max_degree


def neighbors(g: Graph, v: int) -> frozenset[int]:
    return g.neighbors(v)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Brute-force isomorphism test, intended for n <= 8."""
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n > 10:
        raise SizeLimitError("brute-force isomorphism is limited to 10 vertices")
    gd, hd = g.degrees(), h.degrees()
    # candidates per vertex must match degree
    cand = [[u for u in range(h.n) if hd[u] == gd[v]] for v in range(g.n)]
    perm = [-1] * g.n
    used = 0

    def extend(v: int) -> bool:
        nonlocal used
        if v == g.n:
            return True
        for u in cand[v]:
            if used >> u & 1:
                continue
            if all(g.has_edge(v, w) == h.has_edge(u, perm[w]) for w in range(v)):
                perm[v] = u
                used |= 1 << u
                if extend(v + 1):
                    return True
                used &= ~(1 << u)
        return False

    return extend(0)


# Edge-list text format


def serialize_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: vertex count, then one ``u v`` per line."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not _is_int(fields[0]) or int(fields[0]) < 0:
                raise ParseError(lineno, f"expected a vertex count, got {line!r}")
            n = int(fields[0])
            if n > _max_vertices:
                raise ParseError(lineno, f"vertex count {n} exceeds the limit {_max_vertices}")
            continue
        if len(fields) != 2 or not all(_is_int(f) for f in fields):
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = int(fields[0]), int(fields[1])
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"endpoint out of range 0..{n - 1}: {line!r}")
        edges.append((u, v))
    if n is None:
        raise ParseError(0, "missing vertex count")
    return new_graph(n, edges)


def _is_int(s: str) -> bool:
    return s.lstrip("-").isdigit()


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_graph(g))


# Bundled instance

_EXAMPLE_48_EDGES_1BASED = [
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (2, 7), (2, 8),
    (3, 9), (3, 10), (3, 11), (3, 12), (4, 13), (4, 14), (4, 15),
    (4, 16), (5, 6), (7, 8), (9, 10), (11, 12), (13, 14), (15, 16),
]

# three disjoint dominating sets, 1-based as published
EXAMPLE_48_DOMATIC_CLASSES_1BASED = (
    (1, 2, 9, 11, 13, 15),
    (3, 5, 7, 14, 16),
    (4, 6, 8, 10, 12),
)


def example48() -> Graph:
    """16-vertex graph with domination number 3 and restrained domination 4.

    Published with labels 1..16; here every label is shifted down by one.
    """
    return new_graph(16, [(u - 1, v - 1) for u, v in _EXAMPLE_48_EDGES_1BASED])


def example48_domatic_classes() -> list[frozenset[int]]:
    return [frozenset(v - 1 for v in c) for c in EXAMPLE_48_DOMATIC_CLASSES_1BASED]


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, by upper-triangle bitstring."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield Graph(n, tuple(adj))
