"""
``jug``: build, tabulate, verify and export the moment-graph data of X(1,2,m).

Exit codes: 0 all checks passed, 1 a verification failed, 2 usage/input error.
"""

import argparse
import csv
import io
import json
import logging
import random
import sys
import time

from . import exactpoly as ep
from .expansion import NotInSpan, expand, full_table, oracle_expand, random_combination
from .gkm import CohClass, DimensionMismatch, verify_gkm
from .kt_basis import IndexOutOfRange, KTFamily, basis_order, index_name, verify_kt_axioms
from .moment_graph import InvalidM, MomentGraph, pair
from .presentation import apply_phi, build_ideal, monomial_matrix, stability_check
from .relations import check_all

log = logging.getLogger("jugcoh")

SUITES = ("gkm", "kt-axioms", "relations", "expansion", "presentation", "random")


class UsageError(Exception):
    pass


def _m(value):
    try:
        m = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("m must be an integer: %r" % value)
    return m


def _family(m):
    if m < 1:
        raise InvalidM("m must be >= 1, got %d" % m)
    return KTFamily(m)


def _emit(args, text):
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj):
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


def _pair_str(m, q):
    return "(%d,%d)" % pair(m, q)


# ---------------------------------------------------------------------------

def cmd_graph(args):
    g = MomentGraph(args.m)
    if args.format == "json":
        return _emit(args, _dumps(g.to_json()))
    if args.format == "dot":
        return _emit(args, g.to_dot())
    if args.format != "text":
        raise UsageError("graph supports text, json, dot")
    lines = ["G_%d: %d vertices, %d edges" % (g.m, len(g.vertices), len(g.edges))]
    for q in g.vertices:
        lines.append("%-8s w = %s" % (_pair_str(g.m, q), g.weight(q)))
    for e in g.edges:
        lines.append("%s -> %s  %s" % (_pair_str(g.m, e.source), _pair_str(g.m, e.target), e.label))
    _emit(args, "\n".join(lines) + "\n")


def kt_grid(fam):
    """Rows and columns in outer-to-inner order."""
    order = basis_order(fam.m)
    cols = [-r for r in order]
    return order, cols, [[fam.p(r, q) for q in cols] for r in order]


def cmd_kt(args):
    fam = _family(args.m)
    rows, cols, grid = kt_grid(fam)
    m = fam.m
    if args.format == "json":
        return _emit(args, _dumps({
            "m": m,
            "columns": [list(pair(m, q)) for q in cols],
            "rows": [{"index": r, "name": index_name(m, r), "values": [ep.to_json(v) for v in row]}
                     for r, row in zip(rows, grid)]}))
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["class"] + [_pair_str(m, q) for q in cols])
        for r, row in zip(rows, grid):
            w.writerow([index_name(m, r)] + [ep.to_text(v) for v in row])
        return _emit(args, buf.getvalue())
    if args.format != "text":
        raise UsageError("kt supports text, csv, json")
    cells = [[index_name(m, r)] + [ep.pretty(v) for v in row] for r, row in zip(rows, grid)]
    head = [""] + [_pair_str(m, q) for q in cols]
    widths = [max(len(x[i]) for x in cells + [head]) for i in range(len(head))]
    out = [" | ".join(s.ljust(w) for s, w in zip(line, widths)) for line in [head] + cells]
    _emit(args, "\n".join(out) + "\n")


# ---------------------------------------------------------------------------
# verification suites; each returns a list of (name, ok, detail)

def suite_gkm(fam, args):
    g = fam.graph
    out = []
    bad = [e for e in g.edges if e.label != g.weight(e.source) - g.weight(e.target)
           or not ep.has_integer_coefficients(e.label)]
    out.append(("edge labels are integral weight differences", not bad, "%d bad" % len(bad)))
    out.append(("edge count m(m+1)", len(g.edges) == g.m * (g.m + 1), str(len(g.edges))))
    for r in fam.indices:
        viol = verify_gkm(g, fam.xi(r))
        detail = "; ".join("%s->%s residue %s" % (_pair_str(g.m, v.edge.source),
                                                  _pair_str(g.m, v.edge.target), v.difference)
                           for v in viol)
        out.append(("%s satisfies all congruences" % index_name(g.m, r), not viol, detail))
    return out


def suite_axioms(fam, args):
    out = []
    for e in verify_kt_axioms(fam.graph, fam):
        detail = "scalar %s%s" % (e.scalar, "" if e.exact_product else " (not exact product)")
        if e.problems:
            detail += "; " + "; ".join(e.problems)
        out.append(("%s KT axioms" % index_name(fam.m, e.r), e.ok, detail))
    return out


def suite_relations(fam, args):
    rep = check_all(fam, jobs=args.jobs)
    out = []
    for res in rep.results:
        detail = ""
        if not res.passed:
            detail = "at %s: lhs %s, rhs %s" % (_pair_str(fam.m, res.vertex), res.lhs, res.rhs)
        out.append((str(res.rel), res.passed, detail))
    return out


def suite_expansion(fam, args):
    out = []
    table = full_table(fam, jobs=args.jobs)
    out.append(("structure table integral and symmetric", table.integral,
                "%d entries" % len(table.entries)))
    if fam.m <= 6:
        bad = []
        for (i, j), e in sorted(table.entries.items()):
            if oracle_expand(fam, fam.xi(i) * fam.xi(j)) != e:
                bad.append((i, j))
        out.append(("oracle agrees on all KT products", not bad, str(bad) if bad else ""))
    return out


def suite_presentation(fam, args):
    out = []
    ideal = build_ideal(fam)
    for k, gen in enumerate(ideal.as_list(), 1):
        out.append(("phi kills ideal generator %d" % k, apply_phi(fam, gen).is_zero(), ""))
    try:
        mm = monomial_matrix(fam, cross_check=fam.m <= 6)
        out.append(("monomial matrix rank %d = 2m+1" % mm.rank, mm.rank == 2 * fam.m + 1, ""))
    except Exception as exc:  # RankDefect or oracle disagreement
        out.append(("monomial matrix", False, str(exc)))
    return out


def suite_random(fam, args):
    rng = random.Random(args.seed)
    bad = 0
    for _ in range(args.samples):
        f, coeffs = random_combination(fam, rng)
        e = expand(fam, f)
        if e.coeffs != coeffs or oracle_expand(fam, f) != e:
            bad += 1
    return [("random round-trip (seed %d, %d samples)" % (args.seed, args.samples), not bad,
             "%d mismatches" % bad if bad else "")]


SUITE_FUNCS = {
    "gkm": suite_gkm,
    "kt-axioms": suite_axioms,
    "relations": suite_relations,
    "expansion": suite_expansion,
    "presentation": suite_presentation,
    "random": suite_random,
}


def cmd_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    ms = range(args.m, (args.to or args.m) + 1)
    report = []
    ok = True
    for m in ms:
        fam = _family(m)
        for s in suites:
            t = time.perf_counter()
            checks = SUITE_FUNCS[s](fam, args)
            log.info("m=%d suite %s: %.2fs", m, s, time.perf_counter() - t)
            passed = all(c[1] for c in checks)
            ok &= passed
            report.append({"m": m, "suite": s, "pass": passed,
                           "checks": [{"name": n, "pass": p, "detail": d} for n, p, d in checks]})
    if args.format == "json":
        _emit(args, _dumps({"all_pass": ok, "suites": report}))
    else:
        lines = []
        for block in report:
            for c in block["checks"]:
                if args.verbose or not c["pass"]:
                    lines.append("%s m=%d %s: %s%s" % ("PASS" if c["pass"] else "FAIL", block["m"],
                                                      block["suite"], c["name"],
                                                      " [%s]" % c["detail"] if c["detail"] else ""))
            lines.append("%s m=%d suite %s (%d checks)" % ("PASS" if block["pass"] else "FAIL",
                                                           block["m"], block["suite"],
                                                           len(block["checks"])))
        lines.append("ALL PASS" if ok else "FAILURES PRESENT")
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _expansion_json(e, m):
    return {"m": m, "integral": e.integral,
            "coeffs": [{"r": r, "name": index_name(m, r), "poly": ep.to_json(c)}
                       for r, c in sorted(e.coeffs.items())]}


def cmd_expand(args):
    try:
        with open(args.infile) as fh:
            f = CohClass.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError("cannot read class from %s: %s" % (args.infile, exc))
    fam = _family(f.m)
    viol = verify_gkm(fam.graph, f)
    if viol:
        msg = "input is not an equivariant class: %d congruence(s) fail" % len(viol)
        if args.format == "json":
            _emit(args, _dumps({"error": msg, "violations": [
                {"source_q": v.edge.source, "target_q": v.edge.target,
                 "difference": ep.to_json(v.difference)} for v in viol]}))
        else:
            _emit(args, msg + "\n")
        return 1
    try:
        e = expand(fam, f)
    except NotInSpan as exc:
        _emit(args, "not in span: %s\n" % exc)
        return 1
    if args.oracle and oracle_expand(fam, f) != e:
        _emit(args, "oracle disagrees\n")
        return 1
    if args.format == "json":
        _emit(args, _dumps(_expansion_json(e, f.m)))
    else:
        lines = ["%s: %s" % (index_name(f.m, r), c) for r, c in sorted(e.coeffs.items())]
        _emit(args, "\n".join(lines or ["0"]) + "\n")
    return 0


def cmd_constants(args):
    fam = _family(args.m)
    try:
        if args.i is not None or args.j is not None:
            if args.i is None or args.j is None:
                raise UsageError("--i and --j go together")
            pairs = [(fam.check_index(args.i), fam.check_index(args.j))]
        else:
            pairs = None
    except IndexOutOfRange as exc:
        raise UsageError(str(exc))
    table = full_table(fam, jobs=args.jobs, pairs=pairs)
    rows = table.rows()
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "r", "poly"])
        for i, j, r, c in rows:
            w.writerow([i, j, r, ep.to_text(c)])
        _emit(args, buf.getvalue())
    elif args.format == "json":
        _emit(args, _dumps({"m": fam.m, "integral": table.integral, "entries": [
            {"i": i, "j": j, "coeffs": [{"r": r, "poly": ep.to_json(c)}
                                        for r, c in sorted(e.coeffs.items())]}
            for (i, j), e in sorted(table.entries.items())]}))
    else:
        lines = []
        for (i, j), e in sorted(table.entries.items()):
            rhs = " + ".join("(%s)*%s" % (c, index_name(fam.m, r)) for r, c in sorted(e.coeffs.items()))
            lines.append("%s*%s = %s" % (index_name(fam.m, i), index_name(fam.m, j), rhs or "0"))
        _emit(args, "\n".join(lines) + "\n")
    return 0 if table.integral else 1


def cmd_present(args):
    fam = _family(args.m)
    ideal = build_ideal(fam)
    killed = [apply_phi(fam, g).is_zero() for g in ideal.as_list()]
    mm = monomial_matrix(fam, cross_check=fam.m <= 6)
    ok = all(killed) and mm.rank == 2 * fam.m + 1

    def key_name(k):
        return "1" if k == "1" else "X%s^%d" % k

    if args.format == "json":
        _emit(args, _dumps({
            "m": fam.m,
            "generators": [g.to_json() for g in ideal.as_list()],
            "generators_text": [g.to_text() for g in ideal.as_list()],
            "phi_kills": killed,
            "rank": mm.rank,
            "monomial_matrix": [{"row": key_name(k), "coeffs": [
                {"r": r, "poly": ep.to_json(c)} for r, c in sorted(e.coeffs.items())]}
                for k, e in mm.rows.items()],
        }))
    else:
        lines = []
        for k, g in enumerate(ideal.as_list(), 1):
            lines.append("g%d = %s" % (k, g))
            lines.append("  phi(g%d) = 0: %s" % (k, killed[k - 1]))
        lines.append("rank %d" % mm.rank)
        for k, e in mm.rows.items():
            lines.append("%s -> %s" % (key_name(k), " + ".join(
                "(%s)*%s" % (c, index_name(fam.m, r)) for r, c in sorted(e.coeffs.items()))))
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def cmd_stability(args):
    lo, hi = args.start, args.stop
    if lo < 1 or hi <= lo:
        raise UsageError("need 1 <= --from < --to")
    out = []
    ok = True
    for m1 in range(lo, hi):
        rep = stability_check(m1, m1 + 1, jobs=args.jobs)
        ok &= rep.all_pass
        out.append(rep)
    if args.format == "json":
        _emit(args, _dumps({"all_pass": ok, "pairs": [
            {"m1": r.m1, "m2": r.m2, "pass": r.all_pass, "checks": len(r.entries),
             "failures": [{"kind": e.kind, "key": list(map(str, e.key))} for e in r.entries if not e.ok]}
            for r in out]}))
    else:
        lines = ["%s m=%d vs m=%d (%d checks)" % ("PASS" if r.all_pass else "FAIL", r.m1, r.m2,
                                                  len(r.entries)) for r in out]
        _emit(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


# ---------------------------------------------------------------------------

def make_parser():
    p = argparse.ArgumentParser(prog="jug", description=__doc__.strip().splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats, default="text", needs_m=True):
        if needs_m:
            sp.add_argument("--m", type=_m, required=True)
        sp.add_argument("--format", choices=formats, default=default)
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")
        sp.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    common(sub.add_parser("graph", help="moment graph export"), ["text", "json", "dot"])
    common(sub.add_parser("kt", help="table of KT class values"), ["text", "csv", "json"])
    sp = sub.add_parser("verify", help="run verification suites")
    common(sp, ["text", "json"])
    sp.add_argument("--to", type=_m, help="verify every m from --m to --to")
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=50)
    sp = sub.add_parser("expand", help="expand a class (JSON file) in the KT basis")
    common(sp, ["text", "json"], needs_m=False)
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--oracle", action="store_true", help="cross-check with the fraction-field solve")
    sp = sub.add_parser("constants", help="structure constants")
    common(sp, ["text", "json", "csv"], default="json")
    sp.add_argument("--i", type=int)
    sp.add_argument("--j", type=int)
    common(sub.add_parser("present", help="generators and relations"), ["text", "json"])
    sp = sub.add_parser("stability", help="cross-m agreement of presentation data")
    common(sp, ["text", "json"], needs_m=False)
    sp.add_argument("--from", dest="start", type=_m, required=True)
    sp.add_argument("--to", dest="stop", type=_m, required=True)
    return p


COMMANDS = {
    "graph": cmd_graph, "kt": cmd_kt, "verify": cmd_verify, "expand": cmd_expand,
    "constants": cmd_constants, "present": cmd_present, "stability": cmd_stability,
}


def run(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    logging.basicConfig(level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(message)s")
    for attr in ("m", "to"):
        v = getattr(args, attr, None)
        if v is not None and v < 1:
            print("jug: error: m must be >= 1, got %d" % v, file=sys.stderr)
            return 2
    try:
        rc = COMMANDS[args.command](args)
    except (UsageError, InvalidM, IndexOutOfRange, DimensionMismatch) as exc:
        print("jug: error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("jug: error: %s" % exc, file=sys.stderr)
        return 2
    return rc or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
