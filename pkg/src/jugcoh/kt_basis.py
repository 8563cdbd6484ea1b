"""
Closed-form Knutson-Tao classes on G_m.

Basis index ``r`` in ``[-m, m]``: ``r > 0`` is xi(m+r, m-r), ``r < 0`` is
xi(m-|r|, m+|r|), ``r = 0`` is the unit xi(m, m).  In pair notation the class
of index ``r`` sits at the pair (m+r, m-r), i.e. at vertex ``q = -r``.

A vertex ``q <= 0`` is the pair (m+p, m-p) with ``p = -q`` ("left" side), a
vertex ``q > 0`` is (m-p, m+p) with ``p = q`` ("right" side).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .exactpoly import ALPHA, DELTA, ONE, ZERO, BiPoly, NotDivisible, div_exact, is_homogeneous, product
from .gkm import CohClass
from .moment_graph import MomentGraph


class IndexOutOfRange(ValueError):
    pass


def ceil_half(x):
    assert x >= 0, x
    return (x + 1) // 2


def _factors(sign, lo, hi):
    # prod_{k=lo}^{hi} (sign*a + k*d); empty product is 1
    return product(sign * ALPHA + k * DELTA for k in range(lo, hi + 1))


def xi_value(r, q):
    """Value of the index-``r`` class at vertex ``q`` (independent of m)."""
    s = abs(r)
    if s == 0:
        return ONE
    left = q <= 0
    p = abs(q)
    if r > 0:
        if left and s <= p:
            c = ceil_half(p - s + 1)
            return comb(c + s - 1, s) * _factors(-1, c - 1, c + s - 2)
        if not left and s + 1 <= p:
            c = ceil_half(p - s)
            return comb(c + s - 1, s) * _factors(1, c + 1, c + s)
    else:
        if left and s + 1 <= p:
            c = ceil_half(p - s)
            return comb(c + s - 1, s) * _factors(-1, c, c + s - 1)
        if not left and s <= p:
            c = ceil_half(p - s + 1)
            return comb(c + s - 1, s) * _factors(1, c, c + s - 1)
    return ZERO


def vertex_of(r):
    return -r


def index_name(m, r):
    return "xi(%d,%d)" % (m + r, m - r)


def build_xi(g, r):
    if not isinstance(g, MomentGraph):
        g = MomentGraph(g)
    if not -g.m <= r <= g.m:
        raise IndexOutOfRange("index %d outside [-%d, %d]" % (r, g.m, g.m))
    return CohClass(g.m, {q: xi_value(r, q) for q in g.vertices})


def basis_order(m):
    """Outer-to-inner order used for tables: m, -m, m-1, -(m-1), ..., 0."""
    out = []
    for s in range(m, 0, -1):
        out += [s, -s]
    return out + [0]


class KTFamily:
    """The 2m+1 classes xi_r together with their restriction values."""

    def __init__(self, g):
        if not isinstance(g, MomentGraph):
            g = MomentGraph(g)
        self.graph = g
        self.m = g.m
        self.indices = tuple(range(-g.m, g.m + 1))
        self.classes = {r: build_xi(g, r) for r in self.indices}

    def __reduce__(self):
        return (KTFamily, (self.m,))

    def __repr__(self):
        return "KTFamily(m=%d)" % self.m

    def check_index(self, r):
        if not isinstance(r, int) or not -self.m <= r <= self.m:
            raise IndexOutOfRange("index %r outside [-%d, %d]" % (r, self.m, self.m))
        return r

    def xi(self, r):
        return self.classes[self.check_index(r)]

    def p(self, r, v):
        """Restriction of xi_r to vertex ``v`` (keyed by q)."""
        return self.xi(r)[self.graph.check_vertex(v)]

    def diagonal(self, r):
        return self.p(r, vertex_of(r))


def build_family(m):
    return KTFamily(m)


def p_value(fam, r, v):
    return fam.p(r, v)


@dataclass
class AxiomEntry:
    r: int
    degree: object
    homogeneous: bool
    support_ok: bool
    diagonal: BiPoly
    label_product: BiPoly
    scalar: Optional[Fraction]
    exact_product: bool
    problems: list = field(default_factory=list)

    @property
    def ok(self):
        return self.homogeneous and self.support_ok and self.scalar is not None and self.scalar != 0


def _ratio(a, b):
    """Rational c with a == c*b, else None."""
    try:
        c = div_exact(a, b)
    except NotDivisible:
        return None
    if c.degree() <= 0 and c:
        return c.coeff(0, 0)
    return None


def verify_kt_axioms(g, fam):
    """One entry per index; axiom (i) is checked up to a nonzero rational scalar."""
    entries = []
    for r in fam.indices:
        f = fam.xi(r)
        x = vertex_of(r)
        problems = []
        degs = set()
        homog = True
        for q, v in f.items():
            d = is_homogeneous(v)
            if d is None:
                homog = False
                problems.append("vertex %d: not homogeneous" % q)
            elif v:
                degs.add(d)
        if degs - {abs(r)}:
            homog = False
            problems.append("degrees %s != %d" % (sorted(degs), abs(r)))
        support_ok = True
        for q, v in f.items():
            if v and not g.reachable(q, x):
                support_ok = False
                problems.append("vertex %d: nonzero but cannot reach %d" % (q, x))
        diag = f[x]
        labels = product(e.label for e in g.outgoing(x))
        scalar = _ratio(diag, labels)
        if scalar is None:
            problems.append("diagonal %s not a scalar multiple of %s" % (diag, labels))
        entries.append(AxiomEntry(r, abs(r) if homog else None, homog, support_ok,
                                  diag, labels, scalar, diag == labels, problems))
    return entries
