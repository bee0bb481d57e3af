"""Chromatic polynomial engines and partition-indexed partial chromatic polynomials.

* :func:`chromatic_dc` -- deletion-contraction with simplicial-vertex and
  component reductions, memoised on canonical forms.
* :func:`chromatic_subset` -- the signed sum over all edge subsets; shares
  no code with the recursion above and serves as its oracle.
* :func:`count_colorings` -- backtracking count of proper colourings.
* :func:`partial_vector` -- the edge-subset sum split by the partition
  that each subset induces on a list of terminals.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .canon import CANON_MAX_N, canonical_form
from .exactalg import IntPoly
from .graphcore import MarkedGraph, MultiGraph

MAX_SUBSET_EDGES = 26


# ---------------------------------------------------------------------------
# set partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class SetPartition:
    """Partition of terminal positions ``0..t-1``.

    Blocks hold positions (not vertex ids), sorted internally and ordered by
    their minimum element.
    """

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_labels(cls, labels: Sequence) -> "SetPartition":
        groups: dict = {}
        for i, lab in enumerate(labels):
            groups.setdefault(lab, []).append(i)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks)

    def same_block(self, i: int, j: int) -> bool:
        return any(i in b and j in b for b in self.blocks)

    def block_of(self, i: int) -> int:
        for k, b in enumerate(self.blocks):
            if i in b:
                return k
        raise KeyError(i)

    def label(self, names: Sequence[str]) -> str:
        return "{" + "|".join("".join(names[i] for i in b) for b in self.blocks) + "}"


def _restricted_growth(t: int):
    if t == 0:
        yield ()
        return

    def rec(prefix, top):
        if len(prefix) == t:
            yield tuple(prefix)
            return
        for c in range(top + 2):
            yield from rec(prefix + [c], max(top, c))

    yield from rec([0], 0)


@lru_cache(maxsize=None)
def set_partitions(t: int) -> tuple[SetPartition, ...]:
    """All partitions of ``0..t-1``: fewer blocks first, then lexicographic blocks.

    For t = 3 this is {012}, {0|12}, {01|2}, {02|1}, {0|1|2}.
    """
    parts = {SetPartition.from_labels(rgs) for rgs in _restricted_growth(t)}
    return tuple(sorted(parts, key=lambda p: (len(p.blocks), p.blocks)))


_EXPECTED_T3 = ("{MLR}", "{M|LR}", "{ML|R}", "{MR|L}", "{M|L|R}")
assert tuple(p.label("MLR") for p in set_partitions(3)) == _EXPECTED_T3


@dataclass(frozen=True)
class PartialChromVector:
    terminals: tuple[int, ...]
    entries: dict

    @property
    def partitions(self) -> tuple[SetPartition, ...]:
        return set_partitions(len(self.terminals))

    def as_list(self) -> list[IntPoly]:
        return [self.entries.get(p, IntPoly()) for p in self.partitions]

    def __getitem__(self, p: SetPartition) -> IntPoly:
        return self.entries.get(p, IntPoly())

    def total(self) -> IntPoly:
        return sum(self.as_list(), IntPoly())


# ---------------------------------------------------------------------------
# integer-coefficient helpers for the recursion (lists, low degree first)
# ---------------------------------------------------------------------------

def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _psub(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a = a + [0] * (len(b) - len(a))
    out = list(a)
    for i, y in enumerate(b):
        out[i] -= y
    while out and not out[-1]:
        out.pop()
    return out


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _compact(adj: list[int], keep: int) -> list[int]:
    """Restrict ``adj`` to the vertex set ``keep`` and renumber 0..k-1."""
    verts = []
    k = keep
    while k:
        v = (k & -k).bit_length() - 1
        k &= k - 1
        verts.append(v)
    pos = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        a = adj[v] & keep
        m = 0
        while a:
            w = (a & -a).bit_length() - 1
            a &= a - 1
            m |= 1 << pos[w]
        out.append(m)
    return out


def _component_masks(adj: list[int]) -> list[int]:
    n = len(adj)
    left = (1 << n) - 1
    comps = []
    while left:
        seed = left & -left
        seen = frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & ~seen
            seen |= new
            frontier |= new
        comps.append(seen)
        left &= ~seen
    return comps


class _DeletionContraction:
    def __init__(self):
        self.memo: dict = {}

    def run(self, adj: list[int]) -> list[int]:
        factor = [1]
        n = len(adj)
        alive = (1 << n) - 1
        changed = True
        while changed and alive:
            changed = False
            a = alive
            while a:
                v = (a & -a).bit_length() - 1
                a &= a - 1
                nb = adj[v] & alive
                if self._is_clique(adj, nb):
                    factor = _pmul(factor, [-_popcount(nb), 1])
                    alive &= ~(1 << v)
                    changed = True
        if not alive:
            return factor
        if alive != (1 << n) - 1:
            adj = _compact(adj, alive)
        comps = _component_masks(adj)
        if len(comps) > 1:
            for c in comps:
                factor = _pmul(factor, self.run(_compact(adj, c)))
            return factor
        return _pmul(factor, self._connected(adj))

    @staticmethod
    def _is_clique(adj: list[int], nb: int) -> bool:
        m = nb
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if (adj[w] & nb) != nb & ~(1 << w):
                return False
        return True

    def _connected(self, adj: list[int]) -> list[int]:
        n = len(adj)
        key = canonical_form(adj) if n <= CANON_MAX_N else (n, tuple(adj))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        u, v = self._pick_edge(adj)
        deleted = list(adj)
        deleted[u] &= ~(1 << v)
        deleted[v] &= ~(1 << u)
        contracted = list(adj)
        bu, bv = 1 << u, 1 << v
        contracted[u] = (adj[u] | adj[v]) & ~(bu | bv)
        nb = adj[v] & ~bu
        while nb:
            w = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            contracted[w] = (contracted[w] & ~bv) | bu
        contracted = _compact(contracted, ((1 << n) - 1) & ~bv)
        res = _psub(self.run(deleted), self.run(contracted))
        self.memo[key] = res
        return res

    @staticmethod
    def _pick_edge(adj: list[int]) -> tuple[int, int]:
        deg = [_popcount(a) for a in adj]
        best = None
        for u, a in enumerate(adj):
            a >>= u + 1
            v = u + 1
            while a:
                if a & 1:
                    score = deg[u] + deg[v]
                    if best is None or score > best[0]:
                        best = (score, u, v)
                a >>= 1
                v += 1
        return best[1], best[2]


def chromatic_dc(g: MultiGraph) -> IntPoly:
    """Chromatic polynomial by memoised deletion-contraction."""
    if g.has_loops():
        return IntPoly()
    return IntPoly(_DeletionContraction().run(g.adjacency_masks()))


# ---------------------------------------------------------------------------
# edge-subset expansion
# ---------------------------------------------------------------------------

def _subset_counts(n: int, edges: Sequence[tuple[int, int]], terminals: Sequence[int],
                   fixed: Sequence[bool] = ()) -> dict:
    """Map (terminal labels, components) -> signed number of subsets.

    Walks the subset tree depth-first with a rollback union-find.  The
    first ``len(fixed)`` edges have their inclusion decided by ``fixed``.
    """
    parent = list(range(n))
    size = [1] * n
    counts: dict = {}
    m = len(edges)

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def leaf(ncomp, sign):
        roots = [find(t) for t in terminals]
        seen: dict = {}
        key = tuple(seen.setdefault(r, len(seen)) for r in roots)
        k = (key, ncomp)
        counts[k] = counts.get(k, 0) + sign

    def walk(i, ncomp, sign):
        if i == m:
            leaf(ncomp, sign)
            return
        u, v = edges[i]
        choice = fixed[i] if i < len(fixed) else None
        if choice is not True:
            walk(i + 1, ncomp, sign)
        if choice is False:
            return
        ru, rv = find(u), find(v)
        if ru == rv:
            walk(i + 1, ncomp, -sign)
            return
        if size[ru] < size[rv]:
            ru, rv = rv, ru
        parent[rv] = ru
        size[ru] += size[rv]
        walk(i + 1, ncomp - 1, -sign)
        parent[rv] = rv
        size[ru] -= size[rv]

    walk(0, n, 1)
    return counts


def _subset_counts_task(args):
    return _subset_counts(*args)


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("CHROMA_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_counts(n, edges, terminals, threads: int) -> dict:
    if threads <= 1 or len(edges) < 12:
        return _subset_counts(n, edges, terminals)
    split = min(len(edges), max(1, (threads * 4 - 1).bit_length()))
    jobs = []
    for mask in range(1 << split):
        fixed = tuple(bool(mask >> i & 1) for i in range(split))
        jobs.append((n, tuple(edges), tuple(terminals), fixed))
    total: dict = {}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_subset_counts_task, jobs):
            for k, c in part.items():
                total[k] = total.get(k, 0) + c
    return total


def _check_subset_size(m: int) -> None:
    if m > MAX_SUBSET_EDGES:
        raise ValueError(f"edge-subset expansion is limited to {MAX_SUBSET_EDGES} edges (got {m})")


def chromatic_subset(g: MultiGraph, threads: int = 1) -> IntPoly:
    """Signed sum of q**c(V, A) over all edge subsets A."""
    _check_subset_size(g.m)
    counts = _parallel_counts(g.n, g.edges, (), threads)
    cs = [0] * (g.n + 1)
    for (_, ncomp), c in counts.items():
        cs[ncomp] += c
    return IntPoly(cs)


def partial_vector(mg: MarkedGraph, threads: int = 1) -> PartialChromVector:
    """Edge-subset sum split by the partition each subset induces on the terminals."""
    g = mg.graph
    _check_subset_size(g.m)
    counts = _parallel_counts(g.n, g.edges, mg.terminals, threads)
    acc: dict = {}
    for (key, ncomp), c in counts.items():
        p = SetPartition.from_labels(key)
        acc.setdefault(p, [0] * (g.n + 1))[ncomp] += c
    entries = {p: IntPoly(acc.get(p, ())) for p in set_partitions(len(mg.terminals))}
    return PartialChromVector(mg.terminals, entries)


# ---------------------------------------------------------------------------
# colouring counter
# ---------------------------------------------------------------------------

def _coloring_order(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    order: list[int] = []
    placed = set()
    weight = [0] * n
    while len(order) < n:
        v = max((w for w in range(n) if w not in placed),
                key=lambda w: (weight[w], len(adj[w]), -w))
        order.append(v)
        placed.add(v)
        for w in adj[v]:
            weight[w] += 1
    return order


def count_colorings(g: MultiGraph, q: int) -> int:
    """Number of proper colourings of ``g`` with ``q`` colours.

    Vertices are coloured in a connectivity-greedy degree order.  Domains
    of uncoloured neighbours are pruned forward, and a colour not used so
    far is tried once and weighted by the number of unused colours.
    """
    if q < 0:
        raise ValueError("q must be nonnegative")
    if not g.is_simple():
        raise ValueError("count_colorings needs a simple graph")
    n = g.n
    if n == 0:
        return 1
    if q == 0:
        return 0
    adj = g.adjacency()
    order = _coloring_order(adj)
    pos = {v: i for i, v in enumerate(order)}
    later = [[pos[w] for w in adj[v] if pos[w] > i] for i, v in enumerate(order)]
    full = (1 << q) - 1
    domain = [full] * n

    def rec(i: int, used: int) -> int:
        if i == n:
            return 1
        dom = domain[i]
        total = 0
        options = []
        fresh_added = False
        c = 0
        while c < q:
            if dom >> c & 1:
                if c < used:
                    options.append((c, 1, used))
                elif not fresh_added:
                    options.append((c, q - used, used + 1))
                    fresh_added = True
            c += 1
        nbrs = later[i]
        for c, mult, nused in options:
            bit = 1 << c
            saved = []
            ok = True
            for j in nbrs:
                d = domain[j]
                if d & bit:
                    saved.append((j, d))
                    d &= ~bit
                    domain[j] = d
                    if not d:
                        ok = False
                        break
            if ok:
                total += mult * rec(i + 1, nused)
            for j, d in saved:
                domain[j] = d
        return total

    # colours are used in increasing order, so "fresh" means index >= used
    return rec(0, 0)
