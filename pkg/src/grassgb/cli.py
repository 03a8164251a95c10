"""Command-line front end.

Exit codes: 0 success, 1 a requested check failed, 2 usage or parse error,
3 a lemma's hypothesis on n is violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .gf2poly import format_poly, parse
from .grassmann import (
    GrassmannRing,
    basis_indices,
    betti_numbers,
    closed_basis,
    ideal_generators,
    poincare_check,
    q_binomial,
)
from .groebner import auto_reduce, buchberger, divide
from .normal_bundle import immersion_lower_bound, normal_total_class, top_nonzero
from .obstruction import (
    HypothesisError,
    UnknownLemma,
    applicable_lemmas,
    lemma_ids,
    lemma_spec,
    verify_lemma,
)
from .steenrod import sq

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _check_n(n):
    if n < 3:
        raise UsageError(f"n must be >= 3, got {n}")
    cap = os.environ.get("GC_MAX_DEGREE")
    if cap:
        try:
            limit = int(cap)
        except ValueError:
            raise UsageError(f"GC_MAX_DEGREE must be an integer, got {cap!r}") from None
        if 3 * n > limit:
            raise UsageError(f"3n = {3 * n} exceeds GC_MAX_DEGREE = {limit}")


def _parse_poly(text):
    try:
        return parse(text)
    except SyntaxError as exc:
        raise UsageError(f"cannot parse polynomial: {exc}") from None


def _label(mono):
    # a reduced basis element is indexed by the w2, w3 exponents of its leading term
    return f"g[{mono[1]},{mono[2]}]"


def _sorted_basis(elements):
    return sorted(elements, key=lambda g: (g.leading_term()[1], g.leading_term()[2]))


def cmd_gb(args):
    n = args.n
    _check_n(n)
    closed = closed_basis(n)
    status = None
    if args.check or args.source == "buchberger":
        computed = auto_reduce(buchberger(ideal_generators(n), chain_criterion=True))
    if args.check:
        missing = closed.as_set() - computed.as_set()
        extra = computed.as_set() - closed.as_set()
        status = "identical" if not missing and not extra else "differ"
    chosen = closed if args.source == "closed" else computed
    elems = _sorted_basis(chosen.elements)
    results = [{"index": [g.leading_term()[1], g.leading_term()[2]], "poly": format_poly(g)} for g in elems]
    lines = [f"{_label(g.leading_term())} = {format_poly(g)}" for g in elems]
    payload = {"source": args.source, "size": len(elems), "results": results}
    lines.append(f"# {len(elems)} elements ({args.source})")
    if status is not None:
        payload["check"] = status
        lines.append(f"check: {status}")
    code = EXIT_FAIL if status == "differ" else EXIT_OK
    return payload, lines, code


def cmd_reduce(args):
    n = args.n
    _check_n(n)
    p = _parse_poly(args.poly)
    ring = GrassmannRing.get(n)
    nf = ring.nf(p)
    payload = {"input": format_poly(p), "normal_form": format_poly(nf)}
    lines = [format_poly(nf)]
    if args.cofactors:
        basis = ring.basis.elements
        res = divide(p, basis)
        cof = []
        for (m, l), q in zip(basis_indices(n), res.cofactors):
            if not q.is_zero():
                cof.append({"index": [m, l], "cofactor": format_poly(q)})
                lines.append(f"  + ({format_poly(q)}) * g[{m},{l}]")
        ok = res.certificate_holds(p, basis) and res.normal_form == nf
        payload["cofactors"] = cof
        payload["certificate"] = "valid" if ok else "invalid"
        lines.append(f"certificate: {payload['certificate']}")
        return payload, lines, EXIT_OK if ok else EXIT_FAIL
    return payload, lines, EXIT_OK


def cmd_dims(args):
    n = args.n
    _check_n(n)
    dims = betti_numbers(n)
    coeffs = q_binomial(n + 3, 3)
    ok = poincare_check(n)
    payload = {"dims": dims, "total": sum(dims), "q_binomial": coeffs, "check": "ok" if ok else "mismatch"}
    lines = [f"H^{d}: {k}" for d, k in enumerate(dims)]
    lines.append(f"total: {sum(dims)}")
    lines.append(f"q-binomial check: {payload['check']}")
    return payload, lines, EXIT_OK if ok else EXIT_FAIL


def cmd_sq(args):
    n = args.n
    _check_n(n)
    if args.i < 0:
        raise UsageError("the square index must be nonnegative")
    p = _parse_poly(args.poly)
    out = sq(GrassmannRing.get(n), args.i, p)
    return {"i": args.i, "input": format_poly(p), "result": format_poly(out)}, [format_poly(out)], EXIT_OK


def cmd_nu(args):
    n = args.n
    _check_n(n)
    table = normal_total_class(n)
    top = top_nonzero(table)
    classes = {str(i): format_poly(p) for i, p in table.nonzero().items() if i >= 1}
    lines = [f"r = {table.r}"]
    lines += [f"w{i}(nu) = {v}" for i, v in classes.items()]
    lines.append(f"top nonzero degree: {top}")
    return {"r": table.r, "classes": classes, "top": top}, lines, EXIT_OK


def _parse_range(args):
    if args.last is not None:
        return args.first, args.last
    text = args.first_text
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    return int(text), int(text)


def cmd_bound(args):
    try:
        lo, hi = _parse_range(args)
    except ValueError:
        raise UsageError(f"bad range {args.first_text!r}") from None
    if hi < lo:
        raise UsageError("empty range")
    rows = []
    for n in range(lo, hi + 1):
        _check_n(n)
        top = top_nonzero(normal_total_class(n))
        rows.append({"n": n, "dim": 3 * n, "top": top, "bound": immersion_lower_bound(n)})
    if lo == hi:
        lines = [str(rows[0]["bound"])]
    else:
        lines = ["n\tdim\ttop\tbound"] + [f"{r['n']}\t{r['dim']}\t{r['top']}\t{r['bound']}" for r in rows]
    return {"results": rows}, lines, EXIT_OK


def _verify_one(n, lemma_id):
    return verify_lemma(GrassmannRing.get(n), lemma_id).to_dict()


def cmd_verify(args):
    if args.list:
        lines = [f"{lid}\t{lemma_spec(lid).hypothesis}\t{lemma_spec(lid).summary}" for lid in lemma_ids()]
        return {"lemmas": lemma_ids()}, lines, EXIT_OK
    if args.n is None:
        raise UsageError("verify needs n (or --list)")
    n = args.n
    _check_n(n)
    if args.all == (args.lemma is not None):
        raise UsageError("give exactly one of a lemma id or --all")
    if args.all:
        ids = applicable_lemmas(n)
        if not ids:
            raise HypothesisError(f"no registered lemma applies to n={n}")
    else:
        lemma_spec(args.lemma)
        ids = [args.lemma]
    if args.jobs > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, [n] * len(ids), ids))
    else:
        reports = [_verify_one(n, lid) for lid in ids]
    reports.sort(key=lambda r: ids.index(r["lemma"]))
    lines = []
    for rep in reports:
        lines.append(f"{'PASS' if rep['passed'] else 'FAIL'} {rep['lemma']} (n={n})")
        for c in rep["checks"]:
            tail = f"  [{c['detail']}]" if not c["passed"] and c["detail"] else ""
            lines.append(f"  {'ok ' if c['passed'] else 'BAD'} {c['label']}{tail}")
    ok = all(r["passed"] for r in reports)
    lines.append(f"{sum(r['passed'] for r in reports)}/{len(reports)} lemmas passed")
    return {"results": reports, "passed": ok}, lines, EXIT_OK if ok else EXIT_FAIL


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="accepted for harness compatibility; results are deterministic")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS,
                        help="include wall-clock time (makes output nondeterministic)")

    parser = argparse.ArgumentParser(prog="grassgb", parents=[common],
                                     description="Groebner bases and cohomology of G_{3,n} over GF(2)")
    parser.add_argument("--version", action="version", version=f"grassgb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", parents=[common], help="reduced Groebner basis of I_{3,n}")
    p.add_argument("n", type=int)
    p.add_argument("--source", choices=("closed", "buchberger"), default="closed")
    p.add_argument("--check", action="store_true", help="compare closed form with Buchberger")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("reduce", parents=[common], help="cohomology normal form")
    p.add_argument("n", type=int)
    p.add_argument("poly")
    p.add_argument("--cofactors", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("dims", parents=[common], help="Betti numbers with q-binomial cross-check")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("sq", parents=[common], help="Steenrod square Sq^i")
    p.add_argument("n", type=int)
    p.add_argument("i", type=int)
    p.add_argument("poly")
    p.set_defaults(func=cmd_sq)

    p = sub.add_parser("nu", parents=[common], help="normal bundle classes w_i(nu)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("bound", parents=[common], help="immersion lower bounds for n or a range")
    p.add_argument("first_text", metavar="n")
    p.add_argument("last", type=int, nargs="?")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", parents=[common], help="check registered lemmas")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("lemma", nargs="?")
    p.add_argument("--all", action="store_true")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    args.jobs = getattr(args, "jobs", 1) or 1
    timing = getattr(args, "timing", False)
    if args.command == "bound":
        args.first = None
        if args.last is not None:
            try:
                args.first = int(args.first_text)
            except ValueError:
                parser.error(f"bad n {args.first_text!r}")
    start = time.perf_counter()
    try:
        payload, lines, code = args.func(args)
    except UsageError as exc:
        print(f"grassgb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownLemma as exc:
        print(f"grassgb: error: unknown lemma id {exc.args[0]!r} (see verify --list)", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisError as exc:
        print(f"grassgb: error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    elapsed = time.perf_counter() - start
    if fmt == "json":
        report = {"command": argv, "version": __version__, "n": getattr(args, "n", None)}
        report.update(payload)
        report["exit_code"] = code
        if timing:
            report["timing_seconds"] = round(elapsed, 6)
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)
        if timing:
            print(f"# time: {elapsed:.3f}s")
    return code


if __name__ == "__main__":
    sys.exit(main())
