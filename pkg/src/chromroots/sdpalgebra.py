"""Same/different colouring pairs of 2-terminal graphs under series and parallel connection."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chromapoly import chromatic_dc
from .exactalg import IntPoly
from .graphcore import MarkedGraph, MultiGraph

_Q = IntPoly.q()
_Q_Q1 = _Q * (_Q - 1)


class SDError(ArithmeticError):
    pass


def _exact(num: IntPoly, den: IntPoly) -> IntPoly:
    quo, rem = num.divrem(den)
    if rem:
        raise SDError(f"inexact division of {num} by {den}")
    return quo


@dataclass(frozen=True)
class SDPair:
    """Colourings with the two terminals coloured the same (S) or differently (D)."""

    S: IntPoly
    D: IntPoly

    def __post_init__(self):
        if self.S % _Q:
            raise SDError("q must divide S")
        if self.D % _Q_Q1:
            raise SDError("q(q-1) must divide D")

    @property
    def total(self) -> IntPoly:
        return self.S + self.D


def sd_parallel(a: SDPair, b: SDPair) -> SDPair:
    return SDPair(_exact(a.S * b.S, _Q), _exact(a.D * b.D, _Q_Q1))


def sd_series(a: SDPair, b: SDPair) -> SDPair:
    ss = _exact(a.S * b.S, _Q)
    dd = _exact(a.D * b.D, _Q_Q1)
    return SDPair(
        ss + dd,
        (_Q - 2) * dd + _exact(a.D * b.S, _Q) + _exact(a.S * b.D, _Q),
    )


VERTEX = SDPair(_Q, IntPoly())
EDGE = SDPair(IntPoly(), IntPoly.falling_factorial(2))


def sd_from_graph(mg: MarkedGraph) -> SDPair:
    """S = P(G/st), D = P(G+st), both by deletion-contraction."""
    if len(mg.terminals) != 2:
        raise ValueError("sd_from_graph needs exactly two terminals")
    s, t = mg.terminals
    g = mg.graph
    return SDPair(chromatic_dc(g.merge(s, t)), chromatic_dc(g.add_edges([(s, t)])))


# ---------------------------------------------------------------------------
# graph-level compositions (terminals identified as in the algebra)
# ---------------------------------------------------------------------------

def _disjoint_union(a: MultiGraph, b: MultiGraph, ident: dict[int, int]) -> tuple[MultiGraph, dict]:
    relabel = {}
    nxt = a.n
    for v in range(b.n):
        if v in ident:
            relabel[v] = ident[v]
        else:
            relabel[v] = nxt
            nxt += 1
    edges = a.edges + tuple((relabel[u], relabel[v]) for u, v in b.edges)
    return MultiGraph(nxt, edges), relabel


def series_graph(a: MarkedGraph, b: MarkedGraph) -> MarkedGraph:
    """Second terminal of ``a`` glued to first terminal of ``b``; ends become terminals."""
    (s1, t1), (s2, t2) = a.terminals, b.terminals
    g, rel = _disjoint_union(a.graph, b.graph, {s2: t1})
    return MarkedGraph(g, (s1, rel[t2]))


def parallel_graph(a: MarkedGraph, b: MarkedGraph) -> MarkedGraph:
    (s1, t1), (s2, t2) = a.terminals, b.terminals
    g, _ = _disjoint_union(a.graph, b.graph, {s2: s1, t2: t1})
    return MarkedGraph(g, (s1, t1))


def k2_marked() -> MarkedGraph:
    return MarkedGraph(MultiGraph(2, ((0, 1),)), (0, 1))


def k_minus_edge_marked(n: int) -> MarkedGraph:
    """K_n without the edge 0-1, terminals 0 and 1."""
    edges = tuple(e for e in combinations(range(n), 2) if e != (0, 1))
    return MarkedGraph(MultiGraph(n, edges), (0, 1))


def k_minus_edge_pair(n: int) -> SDPair:
    """[(q)_{n-1}, (q)_n]: merging gives K_{n-1}, joining gives K_n."""
    return SDPair(IntPoly.falling_factorial(n - 1), IntPoly.falling_factorial(n))


def build_W() -> SDPair:
    path = sd_series(EDGE, EDGE)
    return sd_parallel(path, path)


def build_G1_pair() -> SDPair:
    w = build_W()
    return sd_parallel(k_minus_edge_pair(6), sd_series(w, w))


def build_G1_polynomial() -> IntPoly:
    """(K6 minus e) in parallel with W series W, W = (K2 series K2) parallel (K2 series K2)."""
    return build_G1_pair().total
