"""Command-line front end.

Subcommands mirror the library surface: ``divided``, ``incidence``,
``splitting fdr`` / ``splitting pparts``, ``hanmonsky``, ``has-wlp``
(with ``ci``, ``monomial`` and ``gorenstein`` variants), ``has-slp``,
``monomial-cis-without-wlp``, and a ``bench`` harness that times the fast
method of each subsystem against its slow independent counterpart after
verifying that the answers agree.

Output is plain text by default and JSON with ``--json``; exit status is 0
on success, 2 on usage errors, and 3 when a conjecture-domain fallback
occurred (the result, computed through the oracle, is still printed).
"""

from __future__ import annotations

import argparse
import json
import re
import statistics
import sys
import time

from . import bandrank, divided, hanmonsky, incidence, lefschetz, splitting
from .charring import dimension_of
from .lefschetz import DualGenerator, MonomialIdeal

__all__ = ["run", "main", "parse_dual_generator", "bench"]


# -- polynomial text parsing --------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x\d+)|(\^)|(\*)|(\+)|(-))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise ValueError("parse error at position %d: %r" % (at, text[at]))
        kinds = ("int", "var", "caret", "star", "plus", "minus")
        for kind, val in zip(kinds, m.groups()):
            if val is not None:
                out.append((kind, val, m.start(m.lastindex)))
        pos = m.end()
    return out


def _parse_term(tokens, i, n):
    """One [integer][*]monomial; returns (coefficient, exponent tuple, next)."""
    coef = 1
    exps = [0] * n
    saw_factor = False
    if i < len(tokens) and tokens[i][0] == "int":
        coef = int(tokens[i][1])
        i += 1
        if i < len(tokens) and tokens[i][0] == "star":
            i += 1
    while i < len(tokens) and tokens[i][0] == "var":
        idx = int(tokens[i][1][1:])
        at = tokens[i][2]
        if not 1 <= idx <= n:
            raise ValueError(
                "parse error at position %d: variable x%d outside x1..x%d"
                % (at, idx, n)
            )
        i += 1
        e = 1
        if i < len(tokens) and tokens[i][0] == "caret":
            i += 1
            if i >= len(tokens) or tokens[i][0] != "int":
                raise ValueError("parse error: exponent expected after '^'")
            e = int(tokens[i][1])
            i += 1
        exps[idx - 1] += e
        saw_factor = True
        if i < len(tokens) and tokens[i][0] == "star":
            i += 1
            if i >= len(tokens) or tokens[i][0] != "var":
                raise ValueError("parse error: variable expected after '*'")
    if not saw_factor and coef == 1:
        raise ValueError("parse error: empty term")
    return coef, tuple(exps), i


def parse_dual_generator(text, n):
    """Parse a sum of integer-coefficient monomials in x1..xn into a
    :class:`DualGenerator`; inhomogeneity is reported as an error."""
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("parse error: empty polynomial")
    terms = []
    i = 0
    sign = 1
    if tokens[0][0] in ("plus", "minus"):
        sign = -1 if tokens[0][0] == "minus" else 1
        i = 1
    while True:
        coef, exps, i = _parse_term(tokens, i, n)
        terms.append((sign * coef, exps))
        if i == len(tokens):
            break
        kind, _, at = tokens[i]
        if kind not in ("plus", "minus"):
            raise ValueError("parse error at position %d: expected + or -" % at)
        sign = -1 if kind == "minus" else 1
        i += 1
    return DualGenerator(n, terms)


def _parse_monomial_list(text, n):
    """Comma-separated unit monomials, e.g. ``x1^9,x2^9,x1^3*x2^3``."""
    gens = []
    for piece in text.split(","):
        tokens = _tokenize(piece)
        coef, exps, i = _parse_term(tokens, 0, n)
        if i != len(tokens) or coef != 1:
            raise ValueError("generator %r is not a plain monomial" % piece.strip())
        gens.append(exps)
    return gens


def _parse_lengths(text):
    try:
        lengths = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError("bad length list %r" % text)
    if not lengths:
        raise ValueError("empty length list")
    return lengths


# -- benchmark harness ---------------------------------------------------------


def _clear_all_caches():
    divided.clear_caches()
    hanmonsky.cj_conjectural.cache_clear()
    bandrank._conditions_rank_cache.clear()


def _timed(fn, runs):
    times = []
    result = None
    for _ in range(max(3, runs)):
        _clear_all_caches()
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return result, statistics.median(times)


def bench(scenario, runs=3, **params):
    """Run one named fast-vs-slow scenario; answers are verified to agree
    before any times are reported, and medians over the runs are returned.
    Returns (report dict, warning string or None)."""
    if scenario == "divided-recursive-vs-nim":
        i = params.get("i", 1)
        p = params.get("p", 2)
        d = params.get("d", 6)
        e = params.get("e", 9)
        n = params.get("n", 7)
        slow, t_slow = _timed(
            lambda: divided.divided_cohomology(i, p, d, e, n, method="recursive"),
            runs,
        )
        fast, t_fast = _timed(
            lambda: divided.divided_cohomology(i, p, d, e, n, method="nim"), runs
        )
        agree = slow == fast
        detail = {"dimension": dimension_of(slow)}
        labels = ("nim", "recursive")
    elif scenario == "splitting-fast-vs-direct":
        p = params.get("p", 5)
        d = params.get("d", 120)
        r = params.get("r", 53)
        slow, t_slow = _timed(
            lambda: splitting.splitting_fdr(p, d, r, multidegree=True, method="direct"),
            runs,
        )
        fast, t_fast = _timed(
            lambda: splitting.splitting_fdr(p, d, r, multidegree=True, method="fast"),
            runs,
        )
        agree = slow == fast
        detail = {"degrees": fast.degrees()}
        labels = ("fast", "direct")
    elif scenario == "hanmonsky-conjecture-vs-oracle":
        p = params.get("p", 3)
        lengths = params.get("lengths", [3, 8, 14, 31])
        slow, t_slow = _timed(
            lambda: hanmonsky.hm_product(p, lengths, method="oracle"), runs
        )
        fast, t_fast = _timed(
            lambda: hanmonsky.hm_product(p, lengths, method="conjecture"), runs
        )
        agree = slow == fast
        detail = {"blocks": fast.to_json_dict()["blocks"]}
        labels = ("conjecture", "oracle")
    elif scenario == "wlp-search":
        p = params.get("p", 5)
        n = params.get("n", 4)
        s = params.get("s", 10)
        slow, t_slow = _timed(
            lambda: lefschetz.monomial_cis_without_wlp(p, n, s, method="sperner"),
            runs,
        )
        fast, t_fast = _timed(
            lambda: lefschetz.monomial_cis_without_wlp(p, n, s), runs
        )
        agree = slow == fast
        detail = {"failing": fast}
        labels = ("summand-conjecture", "sperner-oracle")
    else:
        raise ValueError("unknown scenario %r" % scenario)

    if not agree:
        raise RuntimeError(
            "benchmark scenario %r: methods disagree; refusing to report times"
            % scenario
        )
    report = {
        "scenario": scenario,
        "agree": True,
        "fast": {"label": labels[0], "median_seconds": t_fast},
        "slow": {"label": labels[1], "median_seconds": t_slow},
    }
    report.update(detail)
    warning = None
    if t_fast >= t_slow:
        warning = (
            "warning: %s median %.6fs was not faster than %s median %.6fs"
            % (labels[0], t_fast, labels[1], t_slow)
        )
    return report, warning


# -- argument parsing ----------------------------------------------------------


def _build_parser():
    top = argparse.ArgumentParser(
        prog="flagcoh",
        description="Exact characters on the incidence correspondence and friends",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_div = sub.add_parser("divided", help="cohomology of D^d R(e) on P(k^n)")
    p_div.add_argument("--i", type=int, required=True, choices=(0, 1))
    p_div.add_argument("--p", type=int, required=True)
    p_div.add_argument("--d", type=int, required=True)
    p_div.add_argument("--e", type=int, required=True)
    p_div.add_argument("--n", type=int, required=True)
    p_div.add_argument(
        "--method", choices=("recursive", "nim", "oracle"), default="recursive"
    )
    p_div.add_argument("--character", action="store_true")
    p_div.add_argument("--json", action="store_true")

    p_inc = sub.add_parser("incidence", help="cohomology of O_X(a,b)")
    p_inc.add_argument("--i", type=int, required=True)
    p_inc.add_argument("--p", type=int, required=True)
    p_inc.add_argument("--a", type=int, required=True)
    p_inc.add_argument("--b", type=int, required=True)
    p_inc.add_argument("--n", type=int, required=True)
    p_inc.add_argument("--character", action="store_true")
    p_inc.add_argument("--json", action="store_true")

    p_split = sub.add_parser("splitting", help="splitting types on P^1")
    split_sub = p_split.add_subparsers(dest="bundle", required=True)
    p_fdr = split_sub.add_parser("fdr", help="kernel bundles F^d_r")
    p_fdr.add_argument("--p", type=int, required=True)
    p_fdr.add_argument("--d", type=int, required=True)
    p_fdr.add_argument("--r", type=int, required=True)
    p_fdr.add_argument("--multidegree", action="store_true")
    p_fdr.add_argument("--method", choices=("fast", "direct"), default="fast")
    p_fdr.add_argument("--json", action="store_true")
    p_pp = split_sub.add_parser("pparts", help="principal parts P^k(O(m))")
    p_pp.add_argument("--p", type=int, required=True)
    p_pp.add_argument("--m", type=int, required=True)
    p_pp.add_argument("--k", type=int, required=True)
    p_pp.add_argument("--multidegree", action="store_true")
    p_pp.add_argument("--json", action="store_true")

    p_hm = sub.add_parser("hanmonsky", help="products of delta classes")
    p_hm.add_argument("--p", type=int, required=True)
    p_hm.add_argument("--lengths", type=str, required=True)
    p_hm.add_argument(
        "--use-conjecture",
        dest="use_conjecture",
        action=argparse.BooleanOptionalAction,
        default=True,
    )
    p_hm.add_argument("--jordan-type", dest="jordan_type", action="store_true")
    p_hm.add_argument("--json", action="store_true")

    p_wlp = sub.add_parser("has-wlp", help="weak Lefschetz property tests")
    wlp_sub = p_wlp.add_subparsers(dest="kind", required=True)
    w_ci = wlp_sub.add_parser("ci", help="monomial complete intersection")
    w_ci.add_argument("--p", type=int, required=True)
    w_ci.add_argument("--lengths", type=str, required=True)
    w_ci.add_argument("--method", choices=("summand", "sperner"), default="summand")
    w_ci.add_argument("--json", action="store_true")
    w_mon = wlp_sub.add_parser("monomial", help="Artinian monomial ideal")
    w_mon.add_argument("--p", type=int, required=True)
    w_mon.add_argument("--n", type=int, required=True)
    w_mon.add_argument("--gens", type=str, required=True)
    w_mon.add_argument("--json", action="store_true")
    w_gor = wlp_sub.add_parser("gorenstein", help="dual socle generator")
    w_gor.add_argument("--p", type=int, required=True)
    w_gor.add_argument("--n", type=int, required=True)
    w_gor.add_argument("--dual-generator", dest="dual_generator", required=True)
    w_gor.add_argument("--json", action="store_true")

    p_slp = sub.add_parser("has-slp", help="strong Lefschetz property (ci)")
    p_slp.add_argument("--p", type=int, required=True)
    p_slp.add_argument("--lengths", type=str, required=True)
    p_slp.add_argument(
        "--method", choices=("summand", "partial-products"), default="summand"
    )
    p_slp.add_argument("--json", action="store_true")

    p_cis = sub.add_parser(
        "monomial-cis-without-wlp",
        help="enumerate monomial complete intersections failing WLP",
    )
    p_cis.add_argument("--p", type=int, required=True)
    p_cis.add_argument("--n", type=int, required=True)
    p_cis.add_argument("--s", type=int, required=True)
    p_cis.add_argument("--json", action="store_true")

    p_bench = sub.add_parser("bench", help="fast-vs-slow timing scenarios")
    p_bench.add_argument(
        "--scenario",
        required=True,
        choices=(
            "divided-recursive-vs-nim",
            "splitting-fast-vs-direct",
            "hanmonsky-conjecture-vs-oracle",
            "wlp-search",
        ),
    )
    p_bench.add_argument("--runs", type=int, default=3)
    p_bench.add_argument("--i", type=int)
    p_bench.add_argument("--p", type=int)
    p_bench.add_argument("--d", type=int)
    p_bench.add_argument("--e", type=int)
    p_bench.add_argument("--n", type=int)
    p_bench.add_argument("--r", type=int)
    p_bench.add_argument("--s", type=int)
    p_bench.add_argument("--lengths", type=str)
    p_bench.add_argument("--json", action="store_true")
    return top


def _emit_character(f, args, out):
    if args.json:
        if args.character:
            print(json.dumps(f.to_json_dict()), file=out)
        else:
            print(json.dumps({"dimension": dimension_of(f)}), file=out)
    elif args.character:
        print(f.render(), file=out)
    else:
        print(dimension_of(f), file=out)


def _emit_bool(value, args, out):
    if args.json:
        print(json.dumps({"result": value}), file=out)
    else:
        print("true" if value else "false", file=out)


def run(argv, out=None, err=None):
    """Dispatch a command line; returns the exit status (0 success, 2 usage
    error, 3 success with a conjecture-domain fallback)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    hanmonsky.consume_fallback_events()
    try:
        if args.command == "divided":
            f = divided.divided_cohomology(
                args.i, args.p, args.d, args.e, args.n, method=args.method
            )
            _emit_character(f, args, out)
        elif args.command == "incidence":
            f = incidence.incidence_cohomology(args.i, args.p, args.a, args.b, args.n)
            _emit_character(f, args, out)
        elif args.command == "splitting":
            if args.bundle == "fdr":
                result = splitting.splitting_fdr(
                    args.p, args.d, args.r, multidegree=args.multidegree,
                    method=args.method,
                )
            else:
                result = splitting.splitting_pparts(
                    args.p, args.m, args.k, multidegree=args.multidegree
                )
            if args.multidegree:
                if args.json:
                    print(json.dumps(result.to_json_dict()), file=out)
                else:
                    for i, u, v in result:
                        print("%d %d %d" % (i, u, v), file=out)
            else:
                if args.json:
                    print(json.dumps({"degrees": result}), file=out)
                else:
                    print(" ".join(str(i) for i in result), file=out)
        elif args.command == "hanmonsky":
            lengths = _parse_lengths(args.lengths)
            method = "conjecture" if args.use_conjecture else "oracle"
            product = hanmonsky.hm_product(args.p, lengths, method=method)
            if args.jordan_type:
                parts = hanmonsky.jordan_type(product)
                if args.json:
                    print(json.dumps({"jordan_type": parts}), file=out)
                else:
                    print(" ".join(str(c) for c in parts), file=out)
            elif args.json:
                print(json.dumps(product.to_json_dict()), file=out)
            else:
                for c, shifts in product.blocks.items():
                    body = " + ".join(
                        ("%d*q^%d" % (m, j) if m > 1 else "q^%d" % j)
                        for j, m in shifts.items()
                    )
                    print("%d => %s" % (c, body), file=out)
        elif args.command == "has-wlp":
            if args.kind == "ci":
                value = lefschetz.has_wlp_ci(
                    args.p, _parse_lengths(args.lengths), method=args.method
                )
            elif args.kind == "monomial":
                ideal = MonomialIdeal(args.n, _parse_monomial_list(args.gens, args.n))
                value = lefschetz.has_wlp_monomial(args.p, ideal)
            else:
                dual = parse_dual_generator(args.dual_generator, args.n)
                value = lefschetz.has_wlp_gorenstein(args.p, dual)
                if value and args.p != 0:
                    print(
                        "note: over a finite field a positive verdict certifies "
                        "WLP over a field extension only",
                        file=err,
                    )
            _emit_bool(value, args, out)
        elif args.command == "has-slp":
            value = lefschetz.has_slp_ci(
                args.p, _parse_lengths(args.lengths), method=args.method
            )
            _emit_bool(value, args, out)
        elif args.command == "monomial-cis-without-wlp":
            tuples = lefschetz.monomial_cis_without_wlp(args.p, args.n, args.s)
            if args.json:
                print(json.dumps({"tuples": tuples}), file=out)
            else:
                for tup in tuples:
                    print(" ".join(str(a) for a in tup), file=out)
        elif args.command == "bench":
            params = {}
            for key in ("i", "p", "d", "e", "n", "r", "s"):
                value = getattr(args, key, None)
                if value is not None:
                    params[key] = value
            if args.lengths:
                params["lengths"] = _parse_lengths(args.lengths)
            report, warning = bench(args.scenario, runs=args.runs, **params)
            if warning:
                print(warning, file=err)
            if args.json:
                print(json.dumps(report), file=out)
            else:
                print(
                    "%s: agree; %s median %.6fs, %s median %.6fs"
                    % (
                        report["scenario"],
                        report["fast"]["label"],
                        report["fast"]["median_seconds"],
                        report["slow"]["label"],
                        report["slow"]["median_seconds"],
                    ),
                    file=out,
                )
        else:  # pragma: no cover - argparse enforces the choices
            return 2
    except (ValueError, TypeError) as exc:
        print("error: %s" % exc, file=err)
        return 2
    fallbacks = hanmonsky.consume_fallback_events()
    if fallbacks:
        for p, a, b, msg in fallbacks:
            print(
                "conjecture-domain fallback: delta_%d*delta_%d at p=%d (%s)"
                % (a, b, p, msg),
                file=err,
            )
        return 3
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
