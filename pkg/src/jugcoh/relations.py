"""
Exact checks of the multiplicative identities among the KT classes.

Every identity is evaluated vertex by vertex as an equality of classes;
restriction constants enter as constant classes and integer factors through
``CohClass.scale``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Optional

from .exactpoly import BiPoly
from .gkm import CohClass, const_class
from .kt_basis import KTFamily, vertex_of


class BadParameters(ValueError):
    pass


TAGS = ("P3_5", "P3_6", "P3_8", "C3_9", "P3_10", "P3_11", "P3_12", "T4_2", "P4_4", "P4_5")


@dataclass(frozen=True)
class RelationId:
    """``q`` is the relation's integer parameter, ``side`` picks one of its
    formulas (+1/-1; for P3_6 ``extreme`` also picks the vanishing top class)."""

    tag: str
    q: int = 0
    side: int = 1
    extreme: int = 0

    def __str__(self):
        parts = [self.tag]
        if self.tag in ("P3_6", "P3_8", "P3_10", "P3_11", "P3_12", "T4_2"):
            parts.append("q=%d" % self.q)
        parts.append("side=%s" % ("+" if self.side > 0 else "-"))
        if self.tag == "P3_6":
            parts.append("top=%s" % ("+" if self.extreme > 0 else "-"))
        return " ".join(parts)


@dataclass
class CheckResult:
    rel: RelationId
    passed: bool
    vertex: Optional[int] = None
    lhs: Optional[BiPoly] = None
    rhs: Optional[BiPoly] = None

    def __bool__(self):
        return self.passed


def _shift(fam, gen, r):
    """xi_gen - p^{vertex(r)}_{gen} as a class (``gen`` is +1 or -1)."""
    return fam.xi(gen) - fam.p(gen, vertex_of(r))


def generator_product(fam, gen, top, upto_inclusive=False):
    """xi_gen * prod_r (xi_gen - p^{vertex(s_r r)}_gen), r = 1 .. top-1 (or top).

    For xi_+ the shift vertex is that of +r for odd r and -r for even r; for
    xi_- the signs are mirrored.
    """
    f = fam.xi(gen)
    last = top if upto_inclusive else top - 1
    for r in range(1, last + 1):
        s = gen if r % 2 else -gen
        f = f * _shift(fam, gen, s * r)
    return f


def _sides(rel, m):
    t, q = rel.tag, rel.q
    if rel.side not in (1, -1):
        raise BadParameters("side must be +1 or -1: %s" % (rel,))
    if t in ("P3_5", "C3_9"):
        if m < 2:
            raise BadParameters("%s needs m >= 2" % t)
    elif t == "P3_6":
        if not 0 <= q <= m or rel.extreme not in (1, -1):
            raise BadParameters(str(rel))
    elif t in ("P3_8", "P3_12"):
        if not (0 < q < m and q % 2 == 1):
            raise BadParameters("%s needs odd 0 < q < m: %s" % (t, rel))
    elif t in ("P3_10", "P3_11"):
        if not (0 < q < m and q % 2 == 0):
            raise BadParameters("%s needs even 0 < q < m: %s" % (t, rel))
    elif t == "T4_2":
        if not 0 < q <= m:
            raise BadParameters("T4_2 needs 0 < q <= m: %s" % (rel,))
    elif t not in ("P4_4", "P4_5"):
        raise BadParameters("unknown relation %r" % t)


def sides(fam, rel):
    """(lhs, rhs) classes of a relation instance."""
    m = fam.m
    _sides(rel, m)
    t, q, s = rel.tag, rel.q, rel.side
    xi = fam.xi
    zero = const_class(fam.graph, 0)
    if t == "P3_5":
        return xi(1) * xi(-1), xi(2) + xi(-2)
    if t == "P3_6":
        top = rel.extreme * m
        r = s * q
        return xi(top) * (xi(r) - fam.p(r, vertex_of(top))), zero
    if t in ("P3_8", "P3_10", "P3_11", "P3_12"):
        # xi_{s q} * (xi_g - p^{vertex(s q)}_g)
        gen = {"P3_8": s, "P3_11": s, "P3_10": -s, "P3_12": -s}[t]
        lhs = xi(s * q) * _shift(fam, gen, s * q)
        same, other = xi(s * (q + 1)), xi(-s * (q + 1))
        if t in ("P3_8", "P3_10"):
            rhs = other.scale(q + 1)
        else:
            rhs = same + other.scale(q)
        return lhs, rhs
    if t == "C3_9":
        return xi(s * 2).scale(2), xi(-s) * _shift(fam, -s, -s)
    if t == "T4_2":
        # odd q: xi_{sq} from xi_s; even q: xi_{sq} from xi_{-s}
        gen = s if q % 2 else -s
        return xi(s * q), generator_product(fam, gen, q).scale(Fraction(1, factorial(q)))
    if t == "P4_4":
        lhs = (xi(1) * xi(-1)).scale(2)
        rhs = xi(1) * _shift(fam, 1, 1) + xi(-1) * _shift(fam, -1, -1)
        return lhs, rhs
    if t == "P4_5":
        return generator_product(fam, s, m, upto_inclusive=True), zero
    raise BadParameters(t)


def _compare(rel, lhs, rhs):
    for (q, a), b in zip(lhs.items(), rhs.values()):
        if a != b:
            return CheckResult(rel, False, q, a, b)
    return CheckResult(rel, True)


def check(fam, rel):
    lhs, rhs = sides(fam, rel)
    return _compare(rel, lhs, rhs)


def instances(m):
    """Every admissible (relation, parameter) instance for this m, in a fixed order."""
    out = []
    pm = (1, -1)
    if m >= 2:
        out.append(RelationId("P3_5"))
    for q in range(0, m + 1):
        for s in (pm if q else (1,)):
            for top in pm:
                out.append(RelationId("P3_6", q, s, top))
    for q in range(1, m, 2):
        out += [RelationId("P3_8", q, s) for s in pm]
    if m >= 2:
        out += [RelationId("C3_9", 0, s) for s in pm]
    for q in range(2, m, 2):
        out += [RelationId("P3_10", q, s) for s in pm]
    for q in range(2, m, 2):
        out += [RelationId("P3_11", q, s) for s in pm]
    for q in range(1, m, 2):
        out += [RelationId("P3_12", q, s) for s in pm]
    for q in range(1, m + 1):
        out += [RelationId("T4_2", q, s) for s in pm]
    out.append(RelationId("P4_4"))
    out += [RelationId("P4_5", 0, s) for s in pm]
    return out


@dataclass
class RelationReport:
    m: int
    results: list

    @property
    def all_pass(self):
        return all(r.passed for r in self.results)

    def failures(self):
        return [r for r in self.results if not r.passed]


def _check_one(args):
    m, rel = args
    return check(_family(m), rel)


_FAMILIES = {}


def _family(m):
    fam = _FAMILIES.get(m)
    if fam is None:
        fam = _FAMILIES[m] = KTFamily(m)
    return fam


def check_all(fam, jobs=1):
    rels = instances(fam.m)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            results = list(ex.map(_check_one, [(fam.m, r) for r in rels]))
    else:
        results = [check(fam, r) for r in rels]
    return RelationReport(fam.m, results)
