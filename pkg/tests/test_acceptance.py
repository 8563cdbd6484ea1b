"""
Acceptance criteria, one line each.  Every comparison is exact (tolerance 0).

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they happen,
or ``python tests/test_acceptance.py`` for the summary alone.
"""

import csv
import io
import random
import sys
import time
from contextlib import redirect_stdout
from math import factorial
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from jugcoh.cli import run
from jugcoh.exactpoly import ALPHA as a, DELTA as d, ONE, from_text
from jugcoh.expansion import expand, full_table, oracle_expand, random_combination
from jugcoh.gkm import verify_gkm
from jugcoh.kt_basis import KTFamily
from jugcoh.moment_graph import MomentGraph, from_pair
from jugcoh.presentation import apply_phi, build_ideal, monomial_matrix
from jugcoh.presentation import stability_check
from jugcoh.relations import RelationId, check, check_all, sides

from conftest import ACCEPTANCE_LINES
from reference_data import (COLUMNS, FIGURE_DISCREPANCIES, FIGURE_EDGES, TABLES, WEIGHTS)


def report(n, title, ok, detail=""):
    line = "[%s] criterion %d: %s%s" % ("PASS" if ok else "FAIL", n, title,
                                         " (%s)" % detail if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def kt_csv(m):
    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = run(["kt", "--m", str(m), "--format", "csv"])
    assert rc == 0
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    cols = [tuple(int(x) for x in h.strip("()").split(",")) for h in rows[0][1:]]
    grid = {}
    for row in rows[1:]:
        pr = tuple(int(x) for x in row[0][3:-1].split(","))
        grid[pr] = dict(zip(cols, (from_text(c) for c in row[1:])))
    return cols, grid


def test_c1_tables():
    t0 = time.perf_counter()
    bad = []
    for m in (4, 5):
        cols, grid = kt_csv(m)
        assert cols == COLUMNS[m] and set(grid) == set(TABLES[m])
        for row, printed in TABLES[m].items():
            for col, want in zip(COLUMNS[m], printed):
                if grid[row][col] != want:
                    bad.append("m=%d %s@%s" % (m, row, col))
    dt = time.perf_counter() - t0
    ok = report(1, "KT grids equal the printed reference grids for m=4,5", not bad and dt < 1,
                "%.2fs, %d of 202 cells differ: %s" % (dt, len(bad), ", ".join(bad)))
    assert ok, "%d printed cells differ from the computed classes" % len(bad)


def test_c2_vertices_edges():
    notes = []
    problems = []
    for m in (4, 5):
        g = MomentGraph(m)
        for pr, w in WEIGHTS[m].items():
            if g.weight(from_pair(m, pr)) != w:
                problems.append("weight %s" % (pr,))
        drawn = FIGURE_EDGES[m]
        if len(drawn) != len(g.edges):
            problems.append("m=%d edge count %d vs %d" % (m, len(g.edges), len(drawn)))
        for (src, dst), label in drawn.items():
            e = g.edge(from_pair(m, src), from_pair(m, dst))
            if e is None:
                problems.append("missing edge %s->%s" % (src, dst))
            elif e.label != label:
                if (m, (src, dst)) in FIGURE_DISCREPANCIES:
                    notes.append("m=%d %s->%s drawn %s, formula %s" % (m, src, dst, label, e.label))
                else:
                    problems.append("label %s->%s" % (src, dst))
    formula = MomentGraph(5).edge(5, 2).label
    if formula != 3 * a + 12 * d:
        problems.append("formula label for (0,10)->(3,7) is %s" % formula)
    ok = report(2, "vertex weights and edge labels for m=4,5", not problems and len(notes) == 1,
                "; ".join(problems) or "note: " + "; ".join(notes))
    assert ok


def test_c3_gkm():
    t0 = time.perf_counter()
    bad = 0
    for m in range(1, 13):
        fam = KTFamily(m)
        bad += sum(len(verify_gkm(fam.graph, fam.xi(r))) for r in fam.indices)
    dt = time.perf_counter() - t0
    ok = report(3, "all KT classes satisfy every congruence for m<=12", bad == 0 and dt <= 60,
                "%d violations, %.1fs" % (bad, dt))
    assert ok


def named_examples():
    f4, f5 = KTFamily(4), KTFamily(5)
    x4, x5 = f4.xi, f5.xi
    return [
        ("xi(5,3)*xi(3,5) = xi(6,2)+xi(2,6)", x4(1) * x4(-1) == x4(2) + x4(-2)),
        ("xi(5,3)(xi(5,3)-p) = 2 xi(2,6)", x4(1) * (x4(1) - f4.p(1, -1)) == x4(-2).scale(2)),
        ("xi(3,5)(xi(3,5)-p) = 2 xi(6,2)", x4(-1) * (x4(-1) - f4.p(-1, 1)) == x4(2).scale(2)),
        ("xi(6,2) = 1/2 xi(3,5)(xi(3,5)-p)", check(f4, RelationId("T4_2", 2, 1)).passed),
        ("xi(6,4)*xi(4,6) = xi(7,3)+xi(3,7)", x5(1) * x5(-1) == x5(2) + x5(-2)),
        ("xi(8,2)(xi(6,4)-p) = 4 xi(1,9)",
         x5(3) * (x5(1) - f5.p(1, -3)) == x5(-4).scale(4)),
        ("P3_8 q=3 realizes the same identity",
         sides(f5, RelationId("P3_8", 3, 1))[1] == x5(-4).scale(4)),
    ]


def test_c4_relations():
    t0 = time.perf_counter()
    fails, total = [], 0
    for m in range(1, 11):
        rep = check_all(KTFamily(m))
        total += len(rep.results)
        fails += ["m=%d %s" % (m, r.rel) for r in rep.failures()]
    fails += [name for name, ok in named_examples() if not ok]
    dt = time.perf_counter() - t0
    ok = report(4, "relation suite for m<=10 plus named identities", not fails and dt <= 120,
                "%d instances, %.1fs%s" % (total, dt, "; failing: " + ", ".join(fails) if fails else ""))
    assert ok


def test_c5_expansion():
    t0 = time.perf_counter()
    problems = []
    products = combos = 0
    rng = random.Random(20240601)
    for m in range(1, 7):
        fam = KTFamily(m)
        for i in fam.indices:
            for j in fam.indices:
                f = fam.xi(i) * fam.xi(j)
                if oracle_expand(fam, f) != expand(fam, f):
                    problems.append("m=%d product %d,%d" % (m, i, j))
                products += 1
    fams = {m: KTFamily(m) for m in range(1, 7)}
    for k in range(200):
        fam = fams[1 + k % 6]
        f, coeffs = random_combination(fam, rng)
        e = expand(fam, f)
        if e.as_dict() != dict(sorted(coeffs.items())):
            problems.append("round trip %d" % k)
        if oracle_expand(fam, f) != e:
            problems.append("random %d" % k)
        combos += 1
    ok = report(5, "expand agrees with the oracle; round trip is exact", not problems,
                "%d products, %d random combinations, %.1fs%s" % (
                    products, combos, time.perf_counter() - t0,
                    "; " + ", ".join(problems[:5]) if problems else ""))
    assert ok


def test_c6_integrality():
    t0 = time.perf_counter()
    bad = []
    for m in range(1, 9):
        t = full_table(KTFamily(m))  # raises on any non-integral coefficient
        if not t.integral or len(t.entries) != (2 * m + 1) ** 2:
            bad.append(m)
    ok = report(6, "structure tables integral for m<=8", not bad,
                "%.1fs" % (time.perf_counter() - t0))
    assert ok


def test_c7_presentation():
    problems = []
    for m in range(1, 11):
        fam = KTFamily(m)
        for k, g in enumerate(build_ideal(fam).as_list(), 1):
            if not apply_phi(fam, g).is_zero():
                problems.append("m=%d g%d" % (m, k))
        mm = monomial_matrix(fam, cross_check=True)
        if mm.rank != 2 * m + 1:
            problems.append("m=%d rank %d" % (m, mm.rank))
        for q in range(1, m + 1):
            for sign in "+-":
                idx, c = mm.diagonal[(sign, q)]
                if abs(idx) != q or c != factorial(q):
                    problems.append("m=%d %s%d diagonal %s at %d" % (m, sign, q, c, idx))
        if mm.rows["1"].as_dict() != {0: ONE}:
            problems.append("m=%d unit row" % m)
    ok = report(7, "ideal killed, q! diagonals, rank 2m+1 for m<=10", not problems,
                "; ".join(problems) or "every row cross-checked by the oracle")
    assert ok


def test_c8_stability():
    bad = []
    checks = 0
    for m1 in range(3, 8):
        rep = stability_check(m1, m1 + 1)
        checks += len(rep.entries)
        bad += ["m=%d/%d %s %s" % (m1, m1 + 1, e.kind, e.key) for e in rep.entries if not e.ok]
    ok = report(8, "constants and overlapping structure constants agree for m=3..8", not bad,
                "%d comparisons%s" % (checks, "; " + ", ".join(bad[:5]) if bad else ""))
    assert ok


if __name__ == "__main__":
    status = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_c"):
            try:
                fn()
            except AssertionError:
                status = 1
    sys.exit(status)
