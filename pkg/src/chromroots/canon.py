"""Canonical forms of small simple graphs given as adjacency bitmasks.

Colour refinement followed by individualisation-refinement search; twin
vertices (same neighbourhood apart from each other) are interchangeable,
so only one member of each twin class is individualised.
"""

from __future__ import annotations

CANON_MAX_N = 16


def _refine(adj: list[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        cell_mask = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            cell_mask.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {}
            for v in c:
                key = tuple(bin(adj[v] & m).count("1") for m in cell_mask)
                sig.setdefault(key, []).append(v)
            if len(sig) == 1:
                out.append(c)
                continue
            changed = True
            for key in sorted(sig):
                out.append(sig[key])
        cells = out
        if not changed:
            return cells


def _certificate(adj: list[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    cert = []
    for v in order:
        m = 0
        a = adj[v]
        while a:
            w = (a & -a).bit_length() - 1
            a &= a - 1
            m |= 1 << pos[w]
        cert.append(m)
    return tuple(cert)


def canonical_form(adj: list[int]) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: adjacency masks under a canonical order."""
    n = len(adj)
    if n == 0:
        return ()
    best = None
    init = {}
    for v in range(n):
        init.setdefault(bin(adj[v]).count("1"), []).append(v)
    start = _refine(adj, [init[d] for d in sorted(init)])

    stack = [start]
    while stack:
        cells = stack.pop()
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        if target is None:
            cert = _certificate(adj, [c[0] for c in cells])
            if best is None or cert < best:
                best = cert
            continue
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if any(_twins(adj, v, w) for w in tried):
                continue
            tried.append(v)
            rest = [w for w in cell if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            stack.append(_refine(adj, split))
    return best


def _twins(adj: list[int], u: int, w: int) -> bool:
    bu, bw = 1 << u, 1 << w
    return (adj[u] & ~bw) == (adj[w] & ~bu)
