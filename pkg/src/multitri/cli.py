"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 for an
informational rigidity report on an unproved case (k >= 3).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from . import io
from .core import EdgeKind, GonContext, InvalidTriangulation, KTriangulation, classify_edge, is_k_triangulation
from .enumeration import catalan_determinant, count_by_backtracking, enumerate_triangulations
from .flips import DIAMETER_NODE_LIMIT, build_flip_graph, diameter, diameter_bounds, flip
from .render import render_svg
from .stars import extract_stars, star_incidences, stars_on_positive_side
from .structure import accordion_decomposition, classify_stars, k_ears, length_profile
from .transform import ExternalCrossing, TransformError, flatten, inflate

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CONJECTURE = 3


class UsageError(Exception):
    pass


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _context(args) -> GonContext:
    if args.n is None or args.k is None:
        raise UsageError("--n and --k are required")
    try:
        return GonContext(args.n, args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _triangulation(args, check: bool = True) -> KTriangulation:
    if args.input is None:
        raise UsageError("--in FILE|-|JSON is required")
    T = io.load(args.input)
    if check and not is_k_triangulation(T.ctx, T.relevant_edges):
        raise InvalidTriangulation(
            f"input is not a {T.k}-triangulation of the {T.n}-gon "
            f"(needs {T.ctx.num_relevant} relevant edges and no {T.k + 1}-crossing)"
        )
    return T


def _pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected 'a,b', got {text!r}") from None
    return a, b


def cmd_count(args) -> int:
    ctx = _context(args)
    methods = ["det", "backtrack", "bfs"] if args.method is None else [args.method]
    out = {"n": ctx.n, "k": ctx.k}
    if "det" in methods:
        out["determinant"] = str(catalan_determinant(ctx))
    if "backtrack" in methods:
        out["backtracking"] = str(count_by_backtracking(ctx))
    if "bfs" in methods:
        out["bfs"] = str(len(build_flip_graph(ctx)))
    _emit(args, _json(out))
    values = {v for key, v in out.items() if key not in ("n", "k")}
    return EXIT_OK if len(values) == 1 else EXIT_INVALID


def cmd_enumerate(args) -> int:
    ctx = _context(args)
    _emit(args, "".join(io.dumps(T) + "\n" for T in enumerate_triangulations(ctx)))
    return EXIT_OK


def cmd_stars(args) -> int:
    T = _triangulation(args)
    _emit(args, _json({"n": T.n, "k": T.k, "stars": [S.to_dict() for S in extract_stars(T)]}))
    return EXIT_OK


def cmd_flip(args) -> int:
    T = _triangulation(args)
    f = _pair(args.edge)
    try:
        f = T.ctx.edge(*f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if classify_edge(T.ctx, f) is not EdgeKind.RELEVANT or f not in T.relevant_edges:
        raise InvalidTriangulation(f"{list(f)} is not a relevant edge of the input")
    R, e = flip(T, f)
    doc = io.to_dict(R)
    doc["removed"] = list(f)
    doc["inserted"] = list(e)
    _emit(args, _json(doc))
    return EXIT_OK


def cmd_flip_graph(args) -> int:
    ctx = _context(args)
    g = build_flip_graph(ctx)
    fmt = args.format or "json"
    if fmt == "dot":
        _emit(args, g.to_dot())
    elif fmt == "json":
        _emit(args, "".join(line + "\n" for line in g.iter_jsonl()))
    else:
        raise UsageError(f"flip-graph supports json or dot, not {fmt}")
    return EXIT_OK


def cmd_diameter(args) -> int:
    ctx = _context(args)
    count = catalan_determinant(ctx)
    out = {"n": ctx.n, "k": ctx.k, "nodes": str(count), "bounds": diameter_bounds(ctx)}
    if ctx.n < 4 * ctx.k:
        out["lower_bound_note"] = "no lower-bound claim for n < 4k"
    if count <= DIAMETER_NODE_LIMIT:
        d = diameter(build_flip_graph(ctx))
        out["diameter"] = d
        b = out["bounds"]
        out["within_bounds"] = d <= b["upper"] and (b["lower"] is None or d >= b["lower"])
    else:
        out["diameter"] = None
    _emit(args, _json(out))
    return EXIT_OK if out.get("within_bounds", True) else EXIT_INVALID


def verify_report(T: KTriangulation) -> list[dict]:
    """Each invariant checked on T, with a name, a verdict and details."""
    from .analysis import sparsity_check, surface_stats

    ctx = T.ctx
    checks: list[dict] = []

    def record(name: str, fn):
        try:
            ok, detail = fn()
        except (InvalidTriangulation, ValueError) as exc:
            ok, detail = False, str(exc)
        checks.append({"check": name, "pass": bool(ok), "detail": detail})
        return ok

    if not record(
        "k-triangulation (no (k+1)-crossing, k(n-2k-1) relevant edges)",
        lambda: (is_k_triangulation(ctx, T.relevant_edges), {"relevant_edges": len(T.relevant_edges)}),
    ):
        return checks
    stars = extract_stars(T)
    record("star count n-2k", lambda: (len(stars) == ctx.num_stars, {"stars": len(stars)}))
    record("star incidences 2/1/0 by edge kind", lambda: (bool(star_incidences(T, stars)), {}))

    def side_counts():
        for a, b in T.edges():
            if classify_edge(ctx, (a, b)) is EdgeKind.IRRELEVANT:
                continue
            for u, v in ((a, b), (b, a)):
                got = stars_on_positive_side(T, u, v, stars)
                want = (u - v) % ctx.n - ctx.k
                if got != want:
                    return False, {"edge": [u, v], "positive": got, "expected": want}
        return True, {}

    record("positive-side star count |[v,u[| - k", side_counts)
    if ctx.n >= 2 * ctx.k + 3:
        internal, external = classify_stars(T, stars)
        ears = k_ears(T)
        record(
            "ears = internal stars + 2k",
            lambda: (
                len(ears) == len(internal) + 2 * ctx.k,
                {"ears": len(ears), "internal_stars": len(internal), "external_stars": len(external)},
            ),
        )
    p, q = 2 * ctx.k, comb(2 * ctx.k + 1, 2)
    record(f"({p},{q})-sparsity", lambda: (sparsity_check(T, p, q), {}))

    def surface():
        s = surface_stats(T)
        return s.orientable and s.traced_boundary_components == s.b, s.to_dict()

    record("surface: orientable, gcd(n,k) boundary components", surface)
    acc = accordion_decomposition(T)
    checks.append(
        {
            "check": "k-colorable (report only)",
            "pass": True,
            "detail": {"colorable": acc is not None or ctx.k == 1, "length_profile": {str(a): b for a, b in length_profile(T).items()}},
        }
    )
    return checks


def cmd_verify(args) -> int:
    T = _triangulation(args, check=False)
    checks = verify_report(T)
    ok = all(c["pass"] for c in checks)
    _emit(args, _json({"n": T.n, "k": T.k, "pass": ok, "checks": checks}))
    return EXIT_OK if ok else EXIT_INVALID


def cmd_decompose(args) -> int:
    T = _triangulation(args)
    acc = accordion_decomposition(T)
    if acc is None:
        _emit(args, _json({"colorable": False, "accordions": None}))
        return EXIT_INVALID
    _emit(args, _json({"colorable": True, "accordions": [[list(e) for e in a.edges] for a in acc]}))
    return EXIT_OK


def cmd_flatten(args) -> int:
    T = _triangulation(args)
    if args.edge is None:
        raise UsageError("flatten needs --edge a,b")
    e = _pair(args.edge)
    try:
        R = flatten(T, e)
    except TransformError as exc:
        raise InvalidTriangulation(str(exc)) from None
    _emit(args, io.dumps(R))
    return EXIT_OK


def cmd_inflate(args) -> int:
    T = _triangulation(args)
    if args.crossing is None or args.anchor is None:
        raise UsageError("inflate needs --crossing 'a1,b1;...' and --anchor s1")
    edges = [_pair(part) for part in args.crossing.split(";") if part.strip()]
    try:
        X = ExternalCrossing.from_edges(T.ctx, edges, args.anchor, insert_last=args.insert_last)
        R = inflate(T, X)
    except TransformError as exc:
        raise InvalidTriangulation(str(exc)) from None
    _emit(args, io.dumps(R))
    return EXIT_OK


def cmd_surface(args) -> int:
    from .analysis import surface_stats
    from .flips import t_min

    T = _triangulation(args) if args.input is not None else t_min(_context(args))
    s = surface_stats(T)
    _emit(args, _json(s.to_dict()))
    return EXIT_OK if s.orientable and s.traced_boundary_components == s.b else EXIT_INVALID


def cmd_rigidity(args) -> int:
    from .analysis import rigidity_rank, rigidity_target

    T = _triangulation(args)
    dim = args.dim or 2 * T.k
    rank = rigidity_rank(T, dim, args.trials or 5)
    target = rigidity_target(T.n, dim)
    status = "theorem" if T.k <= 2 else "conjecture"
    out = {
        "n": T.n,
        "k": T.k,
        "dim": dim,
        "trials": args.trials or 5,
        "rank": rank,
        "target": target,
        "edges": len(T.edges()),
        "minimally_rigid": rank == target == len(T.edges()),
        "status": status,
    }
    _emit(args, _json(out))
    if status == "conjecture":
        return EXIT_CONJECTURE
    return EXIT_OK if out["minimally_rigid"] else EXIT_INVALID


def cmd_render(args) -> int:
    T = _triangulation(args)
    if args.format not in (None, "svg"):
        raise UsageError("render only produces svg")
    _emit(args, render_svg(T, stars=args.stars))
    return EXIT_OK


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "stars": cmd_stars,
    "flip": cmd_flip,
    "flip-graph": cmd_flip_graph,
    "diameter": cmd_diameter,
    "verify": cmd_verify,
    "decompose": cmd_decompose,
    "flatten": cmd_flatten,
    "inflate": cmd_inflate,
    "surface": cmd_surface,
    "rigidity": cmd_rigidity,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="multitri", description="Multi-triangulations of a convex polygon.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--in", dest="input", help="triangulation JSON: path, '-' for stdin, or inline")
    parser.add_argument("--out", help="output path, '-' for stdout (default)")
    parser.add_argument("--format", choices=["json", "dot", "svg"])
    parser.add_argument("--method", choices=["det", "backtrack", "bfs"])
    parser.add_argument("--trials", type=int)
    parser.add_argument("--dim", type=int)
    parser.add_argument("--edge", help="edge as 'a,b'")
    parser.add_argument("--crossing", help="external crossing as 'a1,b1;a2,b2;...'")
    parser.add_argument("--anchor", type=int, help="first left endpoint s1 of the crossing")
    parser.add_argument("--insert-last", action="store_true", help="give the inserted vertex label n")
    parser.add_argument("--stars", action="store_true", help="overlay the k-stars when rendering")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"multitri: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidTriangulation, ValueError) as exc:
        print(f"multitri: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"multitri: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
