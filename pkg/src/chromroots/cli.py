"""Command-line front end: chromatic polynomials, graph generators and the verification runs."""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from fractions import Fraction
from math import isqrt

from . import known
from .beraha import (
    beraha_min_poly,
    factor_multiplicity,
    forbidden_conjugate,
    is_beraha_root,
    is_integer_beraha,
    verify_golden_identity,
)
from .chromapoly import chromatic_dc, count_colorings, default_threads
from .exactalg import IntPoly
from .exactalg.sturm import cauchy_bound
from .graphcore import (
    H_TRIANGLE,
    MAX_CLIQUE_CUTSET_N,
    GraphError,
    MarkedGraph,
    MultiGraph,
    gen_G1,
    gen_G2,
    gen_H,
    gen_X,
    gen_Xprime,
    glue_copies,
    has_clique_cutset,
    is_three_connected,
    parse_graph_text,
    wheel_graph,
    write_edgelist,
    write_graph6,
)
from .transfer import (
    GadgetSpec,
    TransferError,
    build_system,
    family_polys,
    matrix_identity_holds,
    theorem_form,
    x_family_system,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULT_CANDIDATES = "q,q-1,q-2,q-3,q-4,q^2-5q+5"
_Q = IntPoly.q()


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# factored display
# ---------------------------------------------------------------------------

def _divisors(n: int, limit: int = 10**12) -> list[int] | None:
    n = abs(n)
    if n > limit:
        return None
    out = set()
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            out.update((d, n // d))
    return sorted(out)


def _rational_roots(p: IntPoly) -> list[Fraction]:
    """Rational roots of an integer polynomial with nonzero constant term."""
    prim = p.primitive()
    if any(not isinstance(c, int) for c in prim.coeffs):
        return []
    heads = _divisors(prim.leading)
    tails = _divisors(prim[0])
    if heads is None or tails is None:
        return []
    bound = cauchy_bound(prim)
    roots = set()
    for a in tails:
        for b in heads:
            for x in (Fraction(a, b), Fraction(-a, b)):
                if abs(x) <= bound and prim(x) == 0:
                    roots.add(x)
    return sorted(roots)


def factor_report(p: IntPoly, candidates: list[IntPoly]) -> tuple[list[tuple[IntPoly, int]], IntPoly]:
    """Trial-divide by each candidate, then peel off rational linear factors.

    Returns ``[(factor, multiplicity), ...]`` and the leftover cofactor.  No
    claim is made that the cofactor is irreducible.
    """
    if not p:
        return [], p
    found = []
    rest = p
    for f in candidates:
        m = factor_multiplicity(rest, f)
        if m:
            rest = rest.exact_div(f ** m)
            found.append((f, m))
    if rest.degree >= 1 and rest[0] != 0:
        for r in _rational_roots(rest):
            lin = IntPoly([-r.numerator, r.denominator])
            m = factor_multiplicity(rest, lin)
            rest = rest.exact_div(lin ** m)
            found.append((lin, m))
    return found, rest


def format_factored(found, rest: IntPoly) -> str:
    parts = []
    if rest.degree == 0:
        if rest[0] != 1 or not found:
            parts.append(str(rest))
    for f, m in found:
        s = f"({f})" if len(f.coeffs) - sum(1 for c in f.coeffs if not c) > 1 else str(f)
        parts.append(s if m == 1 else f"{s}^{m}")
    if rest.degree >= 1:
        parts.append(f"({rest})")
    return " * ".join(parts)


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------

def _emit(args, report: dict, lines: list[str]) -> None:
    if not args.reproducible:
        report = dict(report, generated_at=datetime.datetime.now(datetime.timezone.utc).isoformat())
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _read_graph(path: str) -> MultiGraph:
    try:
        return parse_graph_text(_read_text(path))
    except (GraphError, ValueError) as exc:
        raise UsageError(f"cannot parse graph from {path}: {exc}") from exc


def _parse_candidates(text: str) -> list[IntPoly]:
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            f = IntPoly.parse(item)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if f.degree < 1:
            raise UsageError(f"candidate factor {item!r} is constant")
        out.append(f)
    return out


# ---------------------------------------------------------------------------
# chromatic
# ---------------------------------------------------------------------------

def cmd_chromatic(args) -> int:
    g = _read_graph(args.file)
    cands = _parse_candidates(args.candidates)
    p = chromatic_dc(g)
    found, rest = factor_report(p, cands)
    report = {
        "command": "chromatic",
        "n": g.n,
        "m": len(g.edges),
        "polynomial": p.to_json_obj(),
        "polynomial_text": str(p),
        "factors": [{"factor": str(f), "multiplicity": m} for f, m in found],
        "cofactor": str(rest),
        "candidates": [
            {"factor": str(f), "multiplicity": factor_multiplicity(p, f) if p else None}
            for f in cands
        ],
    }
    lines = [
        f"graph: n={g.n} m={len(g.edges)}",
        f"P(q) = {p}",
        f"factored: {format_factored(found, rest) if p else '0'}",
    ]
    for c in report["candidates"]:
        lines.append(f"  ({c['factor']})^k divides P for k <= {c['multiplicity']}")
    _emit(args, report, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------

def _generate(family: str, k: int | None) -> MultiGraph:
    if family in ("X", "Xprime", "wheel") and (k is None or k < 1):
        raise UsageError(f"{family} needs --k >= 1")
    if family == "wheel" and k < 3:
        raise UsageError("wheel needs --k >= 3")
    if family == "X":
        return gen_X(k)
    if family == "Xprime":
        return gen_Xprime(k).graph
    if family == "wheel":
        return wheel_graph(k)
    if family == "G1":
        return gen_G1()
    if family == "G2":
        return gen_G2()
    if family == "H":
        copies = 1 if k is None else k
        if copies < 1:
            raise UsageError("H needs --k >= 1 copies")
        return glue_copies(MarkedGraph(gen_H(), H_TRIANGLE), copies)
    raise UsageError(f"unknown family {family!r}")


def cmd_generate(args) -> int:
    g = _generate(args.family, args.k)
    if args.format == "graph6":
        sys.stdout.write(write_graph6(g) + "\n")
    else:
        sys.stdout.write(write_edgelist(g))
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify-theorem
# ---------------------------------------------------------------------------

class _Checks:
    def __init__(self):
        self.items: list[dict] = []

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append({"item": name, "ok": bool(ok), "detail": detail})
        return ok

    @property
    def first_failure(self):
        return next((c["item"] for c in self.items if not c["ok"]), None)


def cmd_verify_theorem(args) -> int:
    if args.k_max < 3:
        raise UsageError("--k-max must be at least 3")
    # the corrupted rule sends each rim edge to the wrong vertex of the next
    # block; already at k=1 this turns the rim edge into a loop
    rim = 3 if args.corrupt_rim else 2
    checks = _Checks()
    sys_ = x_family_system(threads=args.threads)

    entries_ok = sys_.T == known.T_X
    checks.add("T (a1..a8 and zero pattern)", entries_ok)
    checks.add("P'(1)", list(sys_.base) == list(known.P_PRIME_1))
    checks.add("closure vector v", list(sys_.closure) == list(known.CLOSURE_V))
    rec = sys_.recurrence
    checks.add("recurrence order 3", rec.order == 3, f"order {rec.order}")
    if rec.order == 3:
        got = theorem_form(rec)
        for name, a, b in zip("ABC", got, (known.A, known.B, known.C)):
            checks.add(f"{name}(q)", a == b, str(a))
    polys = family_polys(sys_, args.k_max)
    for k, want in enumerate(known.BASE_CASES, start=1):
        checks.add(f"P_{k} (transfer)", polys[k - 1] == want)
    checks.add("matrix identity T^3 - A(q-2)T^2 - B(q-2)^2 T - C(q-2)^3 = 0", matrix_identity_holds(sys_.T, rec))
    for k in range(1, 4):
        g = gen_X(k, rim_offset=rim)
        checks.add(f"P_{k} (deletion-contraction)", chromatic_dc(g) == polys[k - 1])
    for k in range(1, args.k_max + 1):
        m = factor_multiplicity(polys[k - 1], _Q - 2)
        checks.add(f"(q-2)^{k} | P_{k}", m >= k, f"multiplicity {m}")
    for k in range(3, args.k_max + 1):
        g = gen_X(k, rim_offset=rim)
        if not checks.add(f"X({k}) is simple", g.is_simple()):
            continue
        checks.add(f"X({k}) 3-connected", is_three_connected(g))
        if g.n <= MAX_CLIQUE_CUTSET_N:
            checks.add(f"X({k}) has no complete cutset", not has_clique_cutset(g))
    if args.color_count is not None:
        qv = args.color_count
        for k in range(1, min(args.k_max, args.color_count_k_max) + 1):
            g = gen_X(k, rim_offset=rim)
            if not g.is_simple():
                checks.add(f"P_{k}({qv}) by backtracking", False, "graph is not simple")
                continue
            c = count_colorings(g, qv)
            checks.add(f"P_{k}({qv}) by backtracking", c == polys[k - 1](qv), f"{c} colourings")

    failure = checks.first_failure
    report = {
        "command": "verify-theorem",
        "k_max": args.k_max,
        "corrupt_rim": bool(args.corrupt_rim),
        "checks": checks.items,
        "passed": failure is None,
        "first_failure": failure,
        "polynomials": [p.to_json_obj() for p in polys],
    }
    lines = [f"{'ok  ' if c['ok'] else 'FAIL'} {c['item']}" + (f"  [{c['detail']}]" if c["detail"] else "")
             for c in checks.items]
    lines.append("all checks passed" if failure is None else f"first failure: {failure}")
    _emit(args, report, lines)
    return EXIT_OK if failure is None else EXIT_FAIL


# ---------------------------------------------------------------------------
# beraha
# ---------------------------------------------------------------------------

def cmd_beraha(args) -> int:
    if args.n_max < 5:
        raise UsageError("--n-max must be at least 5")
    rows = []
    lines = []
    for n in range(1, args.n_max + 1):
        m = beraha_min_poly(n)
        row = {"n": n, "min_poly": m.to_json_obj(), "min_poly_text": str(m)}
        if is_integer_beraha(n):
            row.update(integer=True, value=str(-m[0]), blocked=False, witness_interval=None)
            lines.append(f"B_{n} = {-m[0]} (integer)")
        else:
            rep = forbidden_conjugate(n).to_json_obj()
            row.update(integer=False, blocked=rep["blocked"], witness_interval=rep["witness_interval"],
                       conjugates_in=rep["conjugates_in"])
            if rep["blocked"]:
                lo, hi = rep["witness_interval"]
                shut = "]" if hi == "32/27" else ")"
                lines.append(f"B_{n}: {m}  blocked, conjugate in ({lo}, {hi}{shut}")
            else:
                lines.append(f"B_{n}: {m}  not blocked")
        if n == 10:
            cert = {
                "G1": is_beraha_root(chromatic_dc(gen_G1()), 10),
                "G2": is_beraha_root(chromatic_dc(gen_G2()), 10),
            }
            row["certificates"] = cert
            lines.append(f"  B_10 is a root of P_G1: {cert['G1']}, of P_G2: {cert['G2']}")
        rows.append(row)
    unblocked = [r["n"] for r in rows if not r["integer"] and not r["blocked"]]
    report = {"command": "beraha", "n_max": args.n_max, "rows": rows, "unblocked_non_integer": unblocked}
    lines.append(f"non-integer B_n not blocked: {unblocked}")
    _emit(args, report, lines)
    certified = all(r.get("certificates", {}).get(k, True) for r in rows for k in ("G1", "G2"))
    return EXIT_OK if certified else EXIT_FAIL


# ---------------------------------------------------------------------------
# transfer-derive
# ---------------------------------------------------------------------------

def _system_from_file(path: str, threads: int):
    try:
        obj = json.loads(_read_text(path))
        gadget = GadgetSpec.from_json_obj(obj["gadget"])
        base = obj["base"]
        g = MultiGraph(int(base["n"]), tuple(tuple(e) for e in base["edges"]))
        mg = MarkedGraph(g, tuple(base["terminals"]))
        pair = obj.get("closure_pair")
    except (KeyError, TypeError, ValueError, GraphError) as exc:
        raise UsageError(f"bad gadget file {path}: {exc}") from exc
    if pair is None:
        raise UsageError("gadget file needs a closure_pair")
    return build_system(gadget, mg, tuple(pair), threads=threads)


def cmd_transfer_derive(args) -> int:
    if args.gadget:
        sys_ = _system_from_file(args.gadget, args.threads)
    else:
        sys_ = x_family_system(threads=args.threads)
    rec = sys_.recurrence
    report = {"command": "transfer-derive", **sys_.to_json_obj()}
    names = list(sys_.gadget.old_terminals)
    lines = [f"partitions: {', '.join(p.label(names) for p in sys_.partitions)}", "T ="]
    for i in range(sys_.T.rows):
        lines.append("  [" + ", ".join(str(x) for x in sys_.T.row(i)) + "]")
    lines.append("base vector:")
    for p, b in zip(sys_.partitions, sys_.base):
        lines.append(f"  {p.label(names)}: {b}")
    lines.append("closure: [" + ", ".join(str(c) for c in sys_.closure) + "]")
    lines.append(f"recurrence of order {rec.order}: P_(k+{rec.order}) = sum alpha_i P_(k+{rec.order}-i)")
    for i, a in enumerate(rec.coeffs, start=1):
        lines.append(f"  alpha_{i} = {a}")
    f = _Q - 2
    if all(factor_multiplicity(a, f) >= i for i, a in enumerate(rec.coeffs, start=1) if a):
        report["q_minus_2_form"] = [c.to_json_obj() for c in theorem_form(rec)]
        for i, c in enumerate(theorem_form(rec), start=1):
            lines.append(f"  alpha_{i} / (q-2)^{i} = {c}")
    for i, b in enumerate(rec.base_cases, start=1):
        lines.append(f"P_{i} = {b}")
    _emit(args, report, lines)
    return EXIT_OK


# ---------------------------------------------------------------------------
# golden
# ---------------------------------------------------------------------------

def cmd_golden(args) -> int:
    g = _read_graph(args.file)
    n = args.n_vertices if args.n_vertices is not None else g.n
    p = chromatic_dc(g)
    ok = verify_golden_identity(p, n)
    report = {"command": "golden", "n_vertices": n, "polynomial": p.to_json_obj(), "holds": ok}
    _emit(args, report, [f"P = {p}", f"golden identity with n={n}: {'holds' if ok else 'fails'}"])
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _global_flags(ap: argparse.ArgumentParser, suppress: bool) -> None:
    # on subcommands the defaults are suppressed so they cannot clobber
    # flags given before the subcommand name
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    ap.add_argument("--threads", type=int, default=dflt(None),
                    help="worker processes for subset enumeration (default: $CHROMA_THREADS or 1)")
    ap.add_argument("--json", action="store_true", default=dflt(False),
                    help="print the JSON report instead of text")
    ap.add_argument("--reproducible", action="store_true", default=dflt(False),
                    help="omit the timestamp from JSON output")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    ap = _Parser(prog="chromroots", description="Exact chromatic polynomial tools.")
    _global_flags(ap, suppress=False)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("chromatic", parents=[common], help="chromatic polynomial of a graph file")
    p.add_argument("file", help="graph6 or edge-list file, '-' for stdin")
    p.add_argument("--candidates", default=DEFAULT_CANDIDATES,
                   help=f"comma-separated trial factors (default: {DEFAULT_CANDIDATES})")
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("generate", parents=[common], help="write a named graph")
    p.add_argument("family", choices=["X", "Xprime", "G1", "G2", "H", "wheel"])
    p.add_argument("--k", type=int, default=None, help="family index (for H: number of glued copies)")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="edgelist")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-theorem", parents=[common], help="rebuild and check the X(k) recurrence")
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--color-count", type=int, default=None, metavar="Q",
                   help="also count Q-colourings of X(k) by backtracking")
    p.add_argument("--color-count-k-max", type=int, default=4,
                   help="largest k for the backtracking check (default 4)")
    p.add_argument("--corrupt-rim", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("beraha", parents=[common], help="Beraha number sweep")
    p.add_argument("--n-max", type=int, default=50)
    p.set_defaults(func=cmd_beraha)

    p = sub.add_parser("transfer-derive", parents=[common], help="derive transfer matrix and recurrence")
    p.add_argument("--gadget", default=None, help="JSON file with gadget, base graph and closure pair")
    p.set_defaults(func=cmd_transfer_derive)

    p = sub.add_parser("golden", parents=[common], help="check the golden identity for a triangulation")
    p.add_argument("file")
    p.add_argument("--n-vertices", type=int, default=None)
    p.set_defaults(func=cmd_golden)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.threads is None:
            env = os.environ.get("CHROMA_THREADS")
            if env is None:
                args.threads = default_threads()
            else:
                try:
                    args.threads = int(env)
                except ValueError:
                    raise UsageError(f"CHROMA_THREADS is not an integer: {env!r}") from None
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TransferError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
