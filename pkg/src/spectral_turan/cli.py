"""Command-line entry point: ``spectral-turan <verb> [flags]``.

Exit status: 0 on success, 1 when a verdict does not hold, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import families as fam
from .graph import Graph, from_graph6, to_graph6
from .pattern import PatternId, contains
from .poly import Polynomial, largest_real_root, paper_poly
from .search import append_cache, cached_report, extremal_search, hill_climb
from .spectral import char_poly, quotient_matrix, spectral_radius
from . import verify

CLAIMS = ("thm12", "thm14", "sec3", "lemma43", "lemma25", "nikiforov")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x) -> str:
    return f"{x:.15g}" if isinstance(x, float) else str(x)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--csv", action="store_true", help="emit CSV where supported")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    p.add_argument("--seed", type=int, default=0)


def _graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", help="input graph in graph6")
    p.add_argument("--spec", help='family spec, e.g. \'{"family":"F","params":{"m":23,"t":2}}\'')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spectral-turan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    p = sub.add_parser("family", help="construct a named graph")
    _common(p)
    p.add_argument("--spec", required=True)
    p.add_argument("--out", choices=("g6", "json"), default="g6")

    p = sub.add_parser("rho", help="spectral radius by power iteration")
    _common(p)
    _graph_args(p)
    p.add_argument("--perron", action="store_true", help="include the Perron vector")

    p = sub.add_parser("free-check", help="test pattern containment")
    _common(p)
    _graph_args(p)
    p.add_argument("--pattern", required=True)

    p = sub.add_parser("quotient", help="quotient matrix and characteristic polynomial")
    _common(p)
    _graph_args(p)
    p.add_argument("--blocks", help="partition as a JSON list of vertex lists")

    p = sub.add_parser("largest-root", help="largest real root of a polynomial")
    _common(p)
    p.add_argument("--poly", help="registry name, e.g. F3_thm15")
    p.add_argument("--coeffs", help="JSON coefficient list, highest degree first")
    for name in ("m", "t", "n", "k"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("verify", help="check one claim")
    _common(p)
    _graph_args(p)
    p.add_argument("--claim", required=True, choices=CLAIMS)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--tmax", type=int)

    p = sub.add_parser("search", help="extremal search over pattern-free graphs")
    _common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pattern", default="theta123")
    p.add_argument("--exclude", action="append", default=None,
                   help="none | star | split-star | g6:<string>; repeatable")
    p.add_argument("--heuristic", action="store_true", help="hill-climb instead of enumerating")
    p.add_argument("--restarts", type=int, default=50)
    p.add_argument("--include-smaller", action="store_true")
    p.add_argument("--cache", help="JSONL report cache")

    p = sub.add_parser("report", help="batch verdicts over a range of m")
    _common(p)
    p.add_argument("--claim", required=True, choices=("sec3", "lemma43"))
    p.add_argument("--m", required=True, help="single value or inclusive range A:B")
    p.add_argument("--tmax", type=int)
    return parser


# -- helpers ---------------------------------------------------------------------

def _load_graph(args) -> Graph:
    if getattr(args, "graph", None):
        return from_graph6(args.graph)
    if getattr(args, "spec", None):
        return fam.build(fam.FamilySpec.from_json(args.spec))
    raise UsageError("a graph is required: pass --graph <graph6> or --spec <json>")


def _exclusions(values, m: int) -> list[Graph]:
    out = []
    for v in values or ["none"]:
        if v == "none":
            continue
        if v == "star":
            out.append(fam.star(m))
        elif v == "split-star":
            if m % 2 == 1 and m >= 3:
                out.append(fam.split_star((m + 3) // 2, 2))
        elif v.startswith("g6:"):
            out.append(from_graph6(v[3:]))
        else:
            raise UsageError(f"unknown exclusion {v!r}")
    return out


def _m_range(text: str) -> list[int]:
    if ":" in text:
        a, b = text.split(":", 1)
        return list(range(int(a), int(b) + 1))
    return [int(text)]


def _emit(obj, as_json: bool, text: str, out) -> None:
    if as_json:
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


# -- verbs -----------------------------------------------------------------------

def _cmd_family(args, out) -> int:
    spec = fam.FamilySpec.from_json(args.spec)
    g = fam.build(spec)
    if args.out == "json" or args.json:
        obj = {"family": spec.family, "params": spec.params, "graph6": to_graph6(g),
               "n": g.n, "size": g.size, "edges": g.edges()}
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(to_graph6(g) + "\n")
    return 0


def _cmd_rho(args, out) -> int:
    res = spectral_radius(_load_graph(args))
    d = res.to_dict(with_perron=args.perron)
    text = f"rho = {_fmt(res.rho)}  (iterations {res.iterations}, residual {res.residual:.3e})"
    if args.perron and res.perron is not None:
        text += "\nperron = " + " ".join(_fmt(float(x)) for x in res.perron)
    _emit(d, args.json, text, out)
    return 0


def _cmd_free_check(args, out) -> int:
    g = _load_graph(args)
    pattern = PatternId.parse(args.pattern)
    free = not contains(g, pattern)
    _emit({"pattern": str(pattern), "free": free, "graph6": to_graph6(g)}, args.json,
          f"{pattern}: {'free' if free else 'contains'}", out)
    return 0


def _cmd_quotient(args, out) -> int:
    g = _load_graph(args)
    if args.blocks:
        blocks = json.loads(args.blocks)
    elif args.spec:
        blocks = fam.standard_partition(fam.FamilySpec.from_json(args.spec))
    else:
        raise UsageError("quotient needs --blocks, or --spec with a standard partition")
    q = quotient_matrix(g, blocks)
    p = char_poly(q)
    root = largest_real_root(p)
    rho = spectral_radius(g).rho
    obj = {"quotient": q.to_list(), "char_poly": json.loads(p.to_json()),
           "char_poly_text": str(p), "largest_root": root, "rho": rho}
    text = "\n".join([*(" ".join(f"{v:>4}" for v in row) for row in q.to_list()),
                      f"det(xI - B) = {p}", f"largest root = {_fmt(root)}", f"rho(G) = {_fmt(rho)}"])
    _emit(obj, args.json, text, out)
    return 0


def _cmd_largest_root(args, out) -> int:
    if args.coeffs:
        p = Polynomial.from_descending(json.loads(args.coeffs))
    elif args.poly:
        params = {k: getattr(args, k) for k in ("m", "t", "n", "k") if getattr(args, k) is not None}
        p = paper_poly(args.poly, **params)
    else:
        raise UsageError("largest-root needs --poly or --coeffs")
    root = largest_real_root(p)
    _emit({"poly": str(p), "coeffs": json.loads(p.to_json()), "largest_root": root},
          args.json, f"{p}: largest real root {_fmt(root)}", out)
    return 0


def _run_claim(claim: str, args, m: int | None) -> verify.Verdict:
    if claim == "sec3":
        if m is None:
            raise UsageError("--m is required for sec3")
        return verify.check_sec3_orderings(m)
    if claim == "lemma43":
        if m is None:
            raise UsageError("--m is required for lemma43")
        return verify.check_lemma_4_3(m, args.tmax)
    g = _load_graph(args)
    if claim == "thm12":
        return verify.check_star_bound_k2r1(g, args.r)
    if claim == "thm14":
        return verify.check_theorem_1_4(g)
    if claim == "nikiforov":
        return verify.check_nikiforov_bound(g, args.r)
    return verify.check_vertex_deletion(g)


def _cmd_verify(args, out) -> int:
    v = _run_claim(args.claim, args, args.m)
    text = f"{v.claim_id} {json.dumps(v.params, sort_keys=True)}: {v.status} (margin {_fmt(v.margin)})"
    if args.json:
        out.write(v.to_json() + "\n")
    else:
        out.write(text + "\n")
    return 0 if v.holds else 1


def _cmd_search(args, out) -> int:
    pattern = None if args.pattern == "none" else PatternId.parse(args.pattern)
    excl = _exclusions(args.exclude, args.m)
    rep = None
    if args.cache:
        rep = cached_report(args.cache, args.m, pattern, excl, heuristic=args.heuristic)
    if rep is None:
        if args.heuristic:
            rep = hill_climb(args.m, pattern, excl, restarts=args.restarts, seed=args.seed)
        else:
            rep = extremal_search(args.m, pattern, excl, include_smaller=args.include_smaller,
                                  threads=args.threads)
        if args.cache:
            append_cache(args.cache, rep)
    text = (f"m={rep.m} pattern={rep.pattern} classes={rep.enumerated} "
            f"max_rho={_fmt(rep.max_rho)} argmax={','.join(rep.argmax)}"
            + (f" max_rho_smaller={_fmt(rep.max_rho_smaller)}" if rep.max_rho_smaller is not None else "")
            + (" [heuristic]" if rep.heuristic else "") + (" [exploratory]" if rep.exploratory else ""))
    if args.json:
        out.write(rep.to_json() + "\n")
    else:
        out.write(text + "\n")
    return 0


def _cmd_report(args, out) -> int:
    verdicts = [_run_claim(args.claim, args, m) for m in _m_range(args.m)]
    if args.json:
        for v in verdicts:
            out.write(v.to_json() + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["claim_id", "params", "holds", "margin"])
        for v in verdicts:
            w.writerow([v.claim_id, json.dumps(v.params, sort_keys=True), v.holds, _fmt(v.margin)])
        out.write(buf.getvalue())
    return 0 if all(v.holds for v in verdicts) else 1


COMMANDS = {
    "family": _cmd_family,
    "rho": _cmd_rho,
    "free-check": _cmd_free_check,
    "quotient": _cmd_quotient,
    "largest-root": _cmd_largest_root,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "report": _cmd_report,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = out or sys.stdout
    err = err or sys.stderr
    as_json = "--json" in argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.verb:
            raise UsageError(parser.format_usage().strip())
        return COMMANDS[args.verb](args, out)
    except UsageError as e:
        code, msg = 2, str(e)
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        code, msg = 2, f"{type(e).__name__}: {e}"
    except Exception as e:  # surfaced as a structured failure
        code, msg = 1, f"{type(e).__name__}: {e}"
    if as_json:
        out.write(json.dumps({"error": {"code": code, "message": msg}}, sort_keys=True) + "\n")
    else:
        err.write(msg + "\n")
        if code == 2:
            err.write(parser.format_usage())
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
