"""Transfer matrices for families grown by repeatedly attaching a fixed gadget.

A family member is tracked by its partial chromatic vector: one polynomial
per partition of the terminals.  Attaching the gadget multiplies that row
vector by a matrix T over Laurent polynomials in q; closing the graph (for
X(k): adding the edge LR) is a dot product with a closure vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

from .chromapoly import SetPartition, partial_vector, set_partitions
from .exactalg import (
    IntPoly,
    LaurentPoly,
    PolyMatrix,
    Recurrence,
    dot,
    krylov_min_dependence,
    vec_mat,
    verify_matrix_identity,
)
from .graphcore import MarkedGraph, MultiGraph, gen_Xprime

Endpoint = Union[str, int]

MAX_TERMINALS = 4
MAX_GADGET_EDGES = 20


class TransferError(ValueError):
    pass


@dataclass(frozen=True)
class GadgetSpec:
    """The piece added at each growth step.

    Old terminals are named slots (strings); new vertices are ints
    ``0..new_vertices-1``.  ``new_terminals`` lists, position by position,
    which slot or new vertex becomes each terminal afterwards.
    """

    old_terminals: tuple[str, ...]
    new_vertices: int
    new_edges: tuple[tuple[Endpoint, Endpoint], ...]
    new_terminals: tuple[Endpoint, ...]

    def __post_init__(self):
        object.__setattr__(self, "old_terminals", tuple(self.old_terminals))
        object.__setattr__(self, "new_edges", tuple(tuple(e) for e in self.new_edges))
        object.__setattr__(self, "new_terminals", tuple(self.new_terminals))
        if len(set(self.old_terminals)) != len(self.old_terminals):
            raise TransferError("old terminal names must be distinct")
        if len(self.new_terminals) != len(self.old_terminals):
            raise TransferError("gadget must keep the number of terminals")
        if len(set(self.new_terminals)) != len(self.new_terminals):
            raise TransferError("new terminals must be distinct")
        for e in self.new_edges:
            if len(e) != 2:
                raise TransferError(f"bad edge {e!r}")
            for x in e:
                self._check(x)
        for x in self.new_terminals:
            self._check(x)

    def _check(self, x: Endpoint) -> None:
        if isinstance(x, str):
            if x not in self.old_terminals:
                raise TransferError(f"unknown terminal slot {x!r}")
        elif not (isinstance(x, int) and 0 <= x < self.new_vertices):
            raise TransferError(f"new vertex {x!r} out of range")

    @property
    def t(self) -> int:
        return len(self.old_terminals)

    def to_json_obj(self) -> dict:
        return {
            "old_terminals": list(self.old_terminals),
            "new_vertices": self.new_vertices,
            "new_edges": [list(e) for e in self.new_edges],
            "new_terminals": list(self.new_terminals),
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "GadgetSpec":
        return cls(
            tuple(obj["old_terminals"]),
            int(obj["new_vertices"]),
            tuple(tuple(e) for e in obj["new_edges"]),
            tuple(obj["new_terminals"]),
        )


def x_gadget(grow_at: str = "L") -> GadgetSpec:
    """One K_{3,3} block with sides {0,1,2} and {3,4,5}.

    Vertex 0 joins the hub M, vertex 1 joins the growing end ``grow_at``
    and vertex 2 replaces it as a terminal.  Growing at L is the orientation
    of :func:`gen_Xprime`; ``grow_at="R"`` gives the mirror image.
    """
    if grow_at not in ("L", "R"):
        raise TransferError("the X gadget grows at L or R")
    k33 = tuple((i, j) for i in range(3) for j in range(3, 6))
    new_terms = tuple(2 if s == grow_at else s for s in ("M", "L", "R"))
    return GadgetSpec(("M", "L", "R"), 6, k33 + (("M", 0), (grow_at, 1)), new_terms)


# ---------------------------------------------------------------------------
# transfer matrix
# ---------------------------------------------------------------------------

def subset_multiplier(g: GadgetSpec, row: SetPartition, chosen: Sequence[int]) -> tuple[int, int, SetPartition]:
    """(sign, power of q, column partition) contributed by a subset of new edges.

    Auxiliary nodes are the blocks of ``row`` followed by the new vertices.
    Components without any block add one to the component count; a
    component swallowing b blocks removes b - 1.
    """
    nb = len(row.blocks)
    slot_node = {name: row.block_of(i) for i, name in enumerate(g.old_terminals)}

    def node(x: Endpoint) -> int:
        return slot_node[x] if isinstance(x, str) else nb + x

    parent = list(range(nb + g.new_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in chosen:
        u, v = g.new_edges[i]
        ru, rv = find(node(u)), find(node(v))
        if ru != rv:
            parent[ru] = rv
    blocks_in: dict[int, int] = {}
    for b in range(nb):
        r = find(b)
        blocks_in[r] = blocks_in.get(r, 0) + 1
    roots = {find(x) for x in range(nb + g.new_vertices)}
    delta = sum(1 for r in roots if r not in blocks_in) - sum(c - 1 for c in blocks_in.values())
    col = SetPartition.from_labels([find(node(x)) for x in g.new_terminals])
    sign = -1 if len(chosen) % 2 else 1
    return sign, delta, col


def build_transfer_matrix(g: GadgetSpec) -> PolyMatrix:
    if g.t > MAX_TERMINALS:
        raise TransferError(f"at most {MAX_TERMINALS} terminals supported")
    if len(g.new_edges) > MAX_GADGET_EDGES:
        raise TransferError(f"at most {MAX_GADGET_EDGES} new edges supported")
    parts = set_partitions(g.t)
    index = {p: i for i, p in enumerate(parts)}
    m = len(g.new_edges)
    acc: dict[tuple[int, int], dict[int, int]] = {}
    for mask in range(1 << m):
        chosen = [i for i in range(m) if mask >> i & 1]
        for r, row in enumerate(parts):
            sign, delta, col = subset_multiplier(g, row, chosen)
            cell = acc.setdefault((r, index[col]), {})
            cell[delta] = cell.get(delta, 0) + sign
    n = len(parts)
    entries = []
    for r in range(n):
        for c in range(n):
            e = LaurentPoly()
            for k, coeff in acc.get((r, c), {}).items():
                if coeff:
                    e = e + LaurentPoly.monomial(k, coeff)
            entries.append(e)
    return PolyMatrix(n, n, entries)


def base_vector(mg: MarkedGraph, threads: int = 1) -> list[IntPoly]:
    return partial_vector(mg, threads=threads).as_list()


def closure_vector_for_edge(pair: tuple[int, int], partitions: Sequence[SetPartition]) -> list[LaurentPoly]:
    """Adding an edge between terminal positions ``pair``: kill co-blocked entries, scale the rest by 1 - 1/q."""
    i, j = pair
    t = partitions[0].size if partitions else 0
    if not (0 <= i < t and 0 <= j < t) or i == j:
        raise TransferError(f"pair {pair} is not two distinct terminal positions")
    factor = LaurentPoly([-1, 1], -1)  # 1 - 1/q
    return [LaurentPoly() if p.same_block(i, j) else factor for p in partitions]


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------

def _scalar_terms(base: Sequence, T: PolyMatrix, v: Sequence, count: int) -> list[IntPoly]:
    out = []
    u = [LaurentPoly.coerce(e) for e in base]
    for k in range(count):
        if k:
            u = vec_mat(u, T)
        val = dot(u, v)
        if not val.is_poly():
            raise TransferError(f"term {k + 1} has negative powers of q: {val}")
        out.append(val.to_poly())
    return out


def extract_recurrence(base: Sequence, T: PolyMatrix, v: Sequence, max_order: int | None = None) -> Recurrence:
    """Minimal recurrence of base*T^k, normalised to ``P[k+p] = sum(a_i P[k+p-i])``.

    Base cases are the first p values of ``base * T^(k-1) * v``.
    """
    if max_order is None:
        max_order = T.rows
    deps = krylov_min_dependence(base, T, max_order)
    lead = deps[-1]
    if lead.degree != 0:
        raise TransferError(f"recurrence has a non-constant leading coefficient {lead}")
    p = len(deps) - 1
    coeffs = [(-deps[p - i]).scale(Fraction(1) / lead.leading) for i in range(1, p + 1)]
    return Recurrence(tuple(coeffs), tuple(_scalar_terms(base, T, v, p)))


def factor_out(p: IntPoly, f: IntPoly, times: int) -> IntPoly:
    """p / f**times, which must be exact."""
    return p.exact_div(f ** times)


def theorem_form(rec: Recurrence, f: IntPoly | None = None) -> list[IntPoly]:
    """Coefficients with f**i divided out of the i-th one (f defaults to q - 2)."""
    if f is None:
        f = IntPoly([-2, 1])
    return [factor_out(a, f, i) for i, a in enumerate(rec.coeffs, start=1)]


@dataclass
class TransferSystem:
    gadget: GadgetSpec
    partitions: tuple[SetPartition, ...]
    T: PolyMatrix
    base: list[IntPoly]
    closure: list[LaurentPoly]
    recurrence: Recurrence
    notes: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        names = [str(x) for x in self.gadget.old_terminals]
        return {
            "gadget": self.gadget.to_json_obj(),
            "partitions": [p.label(names) for p in self.partitions],
            "T": self.T.to_json_obj(),
            "base": [b.to_json_obj() for b in self.base],
            "closure": [c.to_json_obj() for c in self.closure],
            "recurrence": self.recurrence.to_json_obj(),
        }


def build_system(gadget: GadgetSpec, base_graph: MarkedGraph, closure_pair: tuple[int, int],
                 max_order: int | None = None, threads: int = 1) -> TransferSystem:
    if len(base_graph.terminals) != gadget.t:
        raise TransferError("base graph and gadget disagree on the number of terminals")
    parts = set_partitions(gadget.t)
    T = build_transfer_matrix(gadget)
    base = base_vector(base_graph, threads=threads)
    v = closure_vector_for_edge(closure_pair, parts)
    rec = extract_recurrence(base, T, v, max_order or len(parts))
    return TransferSystem(gadget, parts, T, base, v, rec)


def x_family_system(threads: int = 1) -> TransferSystem:
    """System for X(k): base X'(1), one K_{3,3} block per step, closing edge L-R."""
    return build_system(x_gadget(), gen_Xprime(1), (1, 2), threads=threads)


def family_polys(sys: TransferSystem, k_max: int) -> list[IntPoly]:
    """P_1..P_k_max by vector iteration, cross-checked against the recurrence."""
    if k_max < 1:
        raise TransferError("k_max must be at least 1")
    direct = _scalar_terms(sys.base, sys.T, sys.closure, k_max)
    rec = sys.recurrence
    if k_max > rec.order:
        via_rec = rec.terms(k_max)
    else:
        via_rec = list(rec.base_cases[:k_max])
    for k, (a, b) in enumerate(zip(direct, via_rec), start=1):
        if a != b:
            raise TransferError(f"vector iteration and recurrence disagree at k={k}")
    return direct


def matrix_identity_holds(T: PolyMatrix, rec: Recurrence) -> bool:
    return verify_matrix_identity(T, rec)


def graph_from_base(mg: MarkedGraph, gadget: GadgetSpec, steps: int) -> MarkedGraph:
    """Concrete graph after ``steps`` gadget attachments (for cross-checks)."""
    g = mg.graph
    edges = list(g.edges)
    n = g.n
    terms = list(mg.terminals)
    for _ in range(steps):
        slot = dict(zip(gadget.old_terminals, terms))

        def vert(x, base=n, slot=slot):
            return slot[x] if isinstance(x, str) else base + x

        edges.extend((vert(u), vert(v)) for u, v in gadget.new_edges)
        terms = [vert(x) for x in gadget.new_terminals]
        n += gadget.new_vertices
    return MarkedGraph(MultiGraph(n, tuple(edges)), tuple(terms))
