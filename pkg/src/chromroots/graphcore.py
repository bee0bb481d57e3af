"""Multigraphs, structural predicates, serialization and the named graphs of the construction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

MAX_CLIQUE_CUTSET_N = 22


class GraphError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class MultiGraph:
    """Undirected graph on vertices ``0..n-1``; loops and parallel edges allowed.

    Edge order only matters for subset indexing; equality compares the
    edge multiset.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("negative vertex count")
        es = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in es:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")
        object.__setattr__(self, "edges", es)

    @property
    def m(self) -> int:
        return len(self.edges)

    def _multiset(self) -> Counter:
        return Counter((min(u, v), max(u, v)) for u, v in self.edges)

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._multiset() == other._multiset()

    def __hash__(self):
        return hash((self.n, frozenset(self._multiset().items())))

    def __repr__(self):
        return f"MultiGraph(n={self.n}, m={self.m})"

    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel_edges(self) -> bool:
        return any(c > 1 for c in self._multiset().values())

    def is_simple(self) -> bool:
        return not self.has_loops() and not self.has_parallel_edges()

    def simple_edges(self) -> list[tuple[int, int]]:
        """Distinct non-loop edges as sorted pairs, in sorted order."""
        return sorted({(min(u, v), max(u, v)) for u, v in self.edges if u != v})

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            if u != v:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return adj

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "MultiGraph":
        return MultiGraph(self.n, self.edges + tuple(extra))

    def remove_edge(self, edge: tuple[int, int]) -> "MultiGraph":
        """Drop one copy of ``edge`` (either orientation)."""
        es = list(self.edges)
        u, v = edge
        for i, (a, b) in enumerate(es):
            if (a, b) in ((u, v), (v, u)):
                del es[i]
                return MultiGraph(self.n, tuple(es))
        raise GraphError(f"edge {edge} not present")

    def merge(self, s: int, t: int) -> "MultiGraph":
        """Identify vertex ``t`` into ``s``; an s-t edge becomes a loop."""
        if s == t:
            return self
        relabel = {}
        k = 0
        for v in range(self.n):
            if v == t:
                continue
            relabel[v] = k
            k += 1
        relabel[t] = relabel[s]
        return MultiGraph(self.n - 1, tuple((relabel[u], relabel[v]) for u, v in self.edges))


@dataclass(frozen=True)
class MarkedGraph:
    graph: MultiGraph
    terminals: tuple[int, ...]

    def __post_init__(self):
        ts = tuple(int(t) for t in self.terminals)
        if len(set(ts)) != len(ts):
            raise GraphError("terminals must be distinct")
        for t in ts:
            if not 0 <= t < self.graph.n:
                raise GraphError(f"terminal {t} out of range")
        object.__setattr__(self, "terminals", ts)


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

def _mask_bits(g: MultiGraph, edge_mask) -> list[bool]:
    if isinstance(edge_mask, int):
        if edge_mask < 0 or edge_mask >> g.m:
            raise GraphError("edge mask has bits beyond the edge count")
        return [bool(edge_mask >> i & 1) for i in range(g.m)]
    bits = [bool(b) for b in edge_mask]
    if len(bits) != g.m:
        raise GraphError(f"edge mask length {len(bits)} != edge count {g.m}")
    return bits


def components(g: MultiGraph, edge_mask=None) -> tuple[int, list[int]]:
    """Connected components of (V, selected edges).

    ``edge_mask`` is an int bitset (bit i = edge i) or a bool sequence;
    ``None`` selects every edge.  Labels are numbered by first vertex.
    """
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bits = [True] * g.m if edge_mask is None else _mask_bits(g, edge_mask)
    for (u, v), on in zip(g.edges, bits):
        if on:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
    labels, ids = [], {}
    for v in range(g.n):
        labels.append(ids.setdefault(find(v), len(ids)))
    return len(ids), labels


def _connected_without(adj: list[int], n: int, removed: int) -> bool:
    alive = ((1 << n) - 1) & ~removed
    if not alive:
        return True
    start = alive & -alive
    seen = start
    frontier = start
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = adj[v] & alive & ~seen
        seen |= new
        frontier |= new
    return seen == alive


def is_connected(g: MultiGraph) -> bool:
    return g.n == 0 or components(g)[0] == 1


def is_three_connected(g: MultiGraph) -> bool:
    """True iff g stays connected after deleting any set of at most two vertices."""
    if not g.is_simple():
        raise GraphError("3-connectivity test needs a simple graph")
    if g.n < 4:
        raise GraphError("3-connectivity test needs at least 4 vertices")
    adj = g.adjacency_masks()
    if not _connected_without(adj, g.n, 0):
        return False
    for u in range(g.n):
        if not _connected_without(adj, g.n, 1 << u):
            return False
    for u, v in combinations(range(g.n), 2):
        if not _connected_without(adj, g.n, (1 << u) | (1 << v)):
            return False
    return True


def _cliques(adj: list[int], n: int):
    """Every nonempty clique, as a bitmask."""
    def extend(clique, cand):
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            c = clique | (1 << v)
            yield c
            yield from extend(c, cand & adj[v])

    yield from extend(0, (1 << n) - 1)


def has_clique_cutset(g: MultiGraph) -> bool:
    """True iff some clique S (|S| <= n-2) leaves g - S disconnected."""
    if not g.is_simple():
        raise GraphError("clique-cutset test needs a simple graph")
    if g.n > MAX_CLIQUE_CUTSET_N:
        raise GraphError(f"clique-cutset search is limited to n <= {MAX_CLIQUE_CUTSET_N}")
    if not is_connected(g):
        raise GraphError("clique-cutset test needs a connected graph")
    adj = g.adjacency_masks()
    for s in _cliques(adj, g.n):
        if bin(s).count("1") > g.n - 2:
            continue
        if not _connected_without(adj, g.n, s):
            return True
    return False


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def wheel_graph(k: int) -> MultiGraph:
    """Hub 0 joined to the rim cycle 1..k."""
    if k < 3:
        raise GraphError("wheels need at least 3 spokes")
    rim = [(1 + i, 1 + (i + 1) % k) for i in range(k)]
    return MultiGraph(k + 1, tuple((0, 1 + i) for i in range(k)) + tuple(rim))


def octahedron() -> MultiGraph:
    """K_{2,2,2}: the 6-vertex planar triangulation."""
    opposite = {(0, 1), (2, 3), (4, 5)}
    return MultiGraph(6, tuple(e for e in combinations(range(6), 2) if e not in opposite))


RIM_OFFSET = 2


def gen_X(k: int, rim_offset: int = RIM_OFFSET) -> MultiGraph:
    """The k-spoke wheel with every rim vertex blown up into a K_{3,3}.

    Hub is 0; block x is 6x+1..6x+6 with sides {6x+1,6x+2,6x+3} and
    {6x+4,6x+5,6x+6}.  6x+1 takes the spoke, 6x+3 sends the rim edge to
    6((x+1) mod k) + rim_offset of the next block.  ``rim_offset`` exists
    only so tests can build deliberately wrong variants.
    """
    if k < 1:
        raise GraphError("X(k) needs k >= 1")
    edges = []
    for x in range(k):
        edges.extend((6 * x + 1 + i, 6 * x + 4 + j) for i in range(3) for j in range(3))
        edges.append((0, 6 * x + 1))
        edges.append((6 * x + 3, 6 * ((x + 1) % k) + rim_offset))
    return MultiGraph(6 * k + 1, tuple(edges))


def gen_Xprime(k: int) -> MarkedGraph:
    """X(k) minus the rim edge (6(k-1)+3, 2) from block k-1 back to block 0.

    Terminals are (M, L, R) = (hub, 6(k-1)+3, 2): the two endpoints of the
    omitted edge in the order it is written.  The next K_{3,3} attaches at L.
    """
    g = gen_X(k)
    closing = (6 * (k - 1) + 3, RIM_OFFSET)
    return MarkedGraph(g.remove_edge(closing), (0,) + closing)


def gen_G1() -> MultiGraph:
    """K6 minus the edge 2-3, with two 4-cycles in series (2 ... 6 ... 3) replacing it."""
    k6e = [e for e in combinations(range(6), 2) if e != (2, 3)]
    gadget = [(2, 7), (7, 6), (6, 8), (8, 2), (3, 9), (9, 6), (6, 10), (10, 3)]
    return MultiGraph(11, tuple(k6e + gadget))


def gen_G2() -> MultiGraph:
    """K5 minus the edge 0-4 plus the 6-vertex gadget hanging between 0 and 4."""
    k5e = [e for e in combinations(range(5), 2) if e != (0, 4)]
    gadget = [
        (4, 5), (4, 6), (4, 7),
        (0, 8), (0, 9), (0, 10),
        (10, 5), (10, 6),
        (7, 8), (7, 9),
    ]
    return MultiGraph(11, tuple(k5e + gadget))


H_TRIANGLE = (10, 11, 12)


def gen_H() -> MultiGraph:
    """The 13-vertex, 21-edge graph with a double chromatic root at 2.

    Vertices 10, 11, 12 form its only triangle.
    """
    edges = [
        (0, 1), (0, 2), (0, 4), (1, 3), (1, 9), (2, 3), (2, 5), (4, 5), (4, 7),
        (3, 6), (5, 6), (6, 9), (7, 8), (0, 10), (7, 12), (9, 11), (8, 9), (5, 8),
        (10, 11), (11, 12), (12, 10),
    ]
    return MultiGraph(13, tuple(edges))


def _is_clique(g: MultiGraph, verts: Sequence[int]) -> bool:
    adj = g.adjacency()
    return all(v in adj[u] for u, v in combinations(verts, 2))


def clique_sum(g1: MarkedGraph, g2: MarkedGraph) -> MultiGraph:
    """Glue g2 onto g1, identifying terminal i of g2 with terminal i of g1.

    Edges of g2 inside its clique are dropped (g1 already has them).
    """
    if len(g1.terminals) != len(g2.terminals):
        raise GraphError("clique sizes differ")
    if not _is_clique(g1.graph, g1.terminals) or not _is_clique(g2.graph, g2.terminals):
        raise GraphError("terminals must induce cliques")
    n1 = g1.graph.n
    ident = dict(zip(g2.terminals, g1.terminals))
    relabel = {}
    nxt = n1
    for v in range(g2.graph.n):
        if v in ident:
            relabel[v] = ident[v]
        else:
            relabel[v] = nxt
            nxt += 1
    term = set(g2.terminals)
    extra = [(relabel[u], relabel[v]) for u, v in g2.graph.edges if not (u in term and v in term)]
    return MultiGraph(nxt, g1.graph.edges + tuple(extra))


def glue_copies(mg: MarkedGraph, copies: int) -> MultiGraph:
    """Clique sum of ``copies`` copies of ``mg`` across its marked clique."""
    if copies < 1:
        raise GraphError("need at least one copy")
    acc = mg.graph
    for _ in range(copies - 1):
        acc = clique_sum(MarkedGraph(acc, mg.terminals), mg)
    return acc


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n < 0:
        raise GraphError("negative size")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError("graph too large for graph6")


def write_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise GraphError("graph6 can only encode simple graphs")
    adj = g.adjacency()
    bits = [1 if i in adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[i:i + 6])), 2)) for i in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def parse_graph6(s: str) -> MultiGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise GraphError("graph6 characters must lie in the range 63..126")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 8
        for x in vals[2:8]:
            n = (n << 6) | x
    else:
        if len(vals) < 4:
            raise GraphError("truncated graph6 size header")
        n, pos = 0, 4
        for x in vals[1:4]:
            n = (n << 6) | x
    nbits = n * (n - 1) // 2
    need = -(-nbits // 6)
    data = vals[pos:]
    if len(data) != need:
        raise GraphError(f"graph6 body has {len(data)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte, off = divmod(k, 6)
            if data[byte] >> (5 - off) & 1:
                edges.append((i, j))
            k += 1
    return MultiGraph(n, tuple(edges))


def write_edgelist(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> MultiGraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge list")
    try:
        n, m = (int(x) for x in rows[0])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphError(f"edge list header says {m} edges, found {len(edges)}")
    return MultiGraph(n, tuple(edges))


def parse_graph_text(text: str) -> MultiGraph:
    """Edge list if the first content line is two integers, otherwise graph6."""
    first = next((ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        return parse_edgelist(text)
    return parse_graph6(first)
