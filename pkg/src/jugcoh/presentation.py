"""
Generators and relations: the polynomial ring Q[a,d][x+, x-] mapped onto the
equivariant cohomology of X(1,2,m) by x+ -> xi_{+1}, x- -> xi_{-1}.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .exactpoly import ONE, ZERO, BiPoly, pretty, to_json, to_text
from .expansion import expand, full_table, oracle_expand
from .gkm import const_class
from .kt_basis import KTFamily, vertex_of


class RankDefect(ArithmeticError):
    pass


class GenPoly:
    """Sparse map (deg in x+, deg in x-) -> BiPoly."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cs = {}
        for k, c in (terms or {}).items():
            if not isinstance(c, BiPoly):
                c = BiPoly.const(c)
            v = cs.get(k, ZERO) + c
            if v:
                cs[k] = v
            else:
                cs.pop(k, None)
        self.terms = cs

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    def __eq__(self, other):
        return isinstance(other, GenPoly) and self.terms == other.terms

    def __add__(self, other):
        other = _gcoerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return GenPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return GenPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_gcoerce(other))

    def __rsub__(self, other):
        return _gcoerce(other) - self

    def __mul__(self, other):
        other = _gcoerce(other)
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return GenPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = GenPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def degree_in(self, which):
        idx = 0 if which > 0 else 1
        return max((k[idx] for k in self.terms), default=-1)

    def total_degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def leading_plus(self):
        k = max(self.terms)
        return k, self.terms[k]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = []
            if i:
                mono.append("X+" if i == 1 else "X+^%d" % i)
            if j:
                mono.append("X-" if j == 1 else "X-^%d" % j)
            coeff = "(%s)" % pretty(c)
            parts.append("*".join([coeff] + mono) if mono else coeff)
        return " + ".join(parts)

    __repr__ = __str__

    def to_text(self):
        return ";".join("%d,%d:%s" % (i, j, to_text(c)) for (i, j), c in sorted(self.terms.items()))

    def to_json(self):
        return [[i, j, to_json(c)] for (i, j), c in sorted(self.terms.items())]


def _gcoerce(x):
    if isinstance(x, GenPoly):
        return x
    return GenPoly.const(x)


XP = GenPoly({(1, 0): 1})
XM = GenPoly({(0, 1): 1})


def _gen(sign):
    return XP if sign > 0 else XM


@dataclass
class IdealGens:
    m: int
    g1: GenPoly
    g2: GenPoly
    g3: GenPoly

    def as_list(self):
        return [self.g1, self.g2, self.g3]


def shift_constant(fam, gen, r):
    """p^{vertex(r)}_{gen}: value of xi_gen at the vertex of index r."""
    return fam.p(gen, vertex_of(r))


def generator_poly(fam, sign, top):
    """x_s * prod_{r=1}^{top} (x_s - p^{vertex(s_r r)}_s), s_r = s for odd r, -s for even r."""
    x = _gen(sign)
    out = x
    for r in range(1, top + 1):
        s = sign if r % 2 else -sign
        out = out * (x - shift_constant(fam, sign, s * r))
    return out


def build_ideal(fam):
    xp, xm = XP, XM
    g1 = (2 * xp * xm - xp * (xp - shift_constant(fam, 1, 1))
          - xm * (xm - shift_constant(fam, -1, -1)))
    return IdealGens(fam.m, g1, generator_poly(fam, 1, fam.m), generator_poly(fam, -1, fam.m))


def apply_phi(fam, P):
    xp, xm = fam.xi(1), fam.xi(-1)
    pows_p = [const_class(fam.graph, 1)]
    pows_m = [const_class(fam.graph, 1)]
    out = const_class(fam.graph, 0)
    for (i, j), c in P.terms.items():
        while len(pows_p) <= i:
            pows_p.append(pows_p[-1] * xp)
        while len(pows_m) <= j:
            pows_m.append(pows_m[-1] * xm)
        out = out + (pows_p[i] * pows_m[j]).scale(c)
    return out


def leading_sign(gen_sign, q):
    """Side of the top KT index hit by x_s^q: s for odd q, -s for even q."""
    return gen_sign if q % 2 else -gen_sign


@dataclass
class MonomialMatrix:
    m: int
    rows: dict  # "1" | ("+", i) | ("-", j) -> Expansion
    diagonal: dict = field(default_factory=dict)  # row -> (index, rational)
    rank: int = 0

    def block(self, q):
        """2x2 rational matrix of x+^q, x-^q against KT indices +q, -q."""
        return [[self.rows[("+", q)][s * q].coeff(0, 0) for s in (1, -1)],
                [self.rows[("-", q)][s * q].coeff(0, 0) for s in (1, -1)]]


def monomial_matrix(fam, cross_check=True):
    m = fam.m
    rows = {"1": expand(fam, const_class(fam.graph, 1))}
    cur = {1: fam.xi(1), -1: fam.xi(-1)}
    for q in range(1, m + 1):
        for s in (1, -1):
            if q > 1:
                cur[s] = cur[s] * fam.xi(s)
            e = expand(fam, cur[s])
            if cross_check and oracle_expand(fam, cur[s]) != e:
                raise AssertionError("oracle disagrees on x%s^%d" % ("+" if s > 0 else "-", q))
            rows[("+" if s > 0 else "-", q)] = e
    mm = MonomialMatrix(m, rows)
    for key, e in rows.items():
        if key == "1":
            deg, sgn = 0, 1
            top = 0
        else:
            sgn = 1 if key[0] == "+" else -1
            deg = key[1]
            top = leading_sign(sgn, deg) * deg
        for r, c in e.coeffs.items():
            if abs(r) > deg or (abs(r) == deg and r != top):
                raise RankDefect("row %s has coefficient at index %d" % (key, r))
        lead = e[top]
        if lead.degree() != 0:
            raise RankDefect("row %s: top coefficient %s is not a nonzero rational" % (key, lead))
        mm.diagonal[key] = (top, lead.coeff(0, 0))
        if deg and lead.coeff(0, 0) != factorial(deg):
            raise RankDefect("row %s: top coefficient %s != %d!" % (key, lead, deg))
    for q in range(1, m + 1):
        (a, b), (c, d) = mm.block(q)
        if a * d - b * c == 0:
            raise RankDefect("singular block at level %d" % q)
    mm.rank = len(rows)
    return mm


def normal_form(fam, P, mm=None):
    """Reduce P modulo the ideal: the unique Q[a,d]-combination of
    1, x+^i, x-^j (1 <= i, j <= m) with the same image."""
    if mm is None:
        mm = monomial_matrix(fam, cross_check=False)
    coeffs = dict(expand(fam, apply_phi(fam, P)).coeffs)
    out = {}
    for q in range(fam.m, 0, -1):
        (a, b), (c, d) = mm.block(q)
        det = a * d - b * c
        up, um = coeffs.get(q, ZERO), coeffs.get(-q, ZERO)
        # [u+ u-] = [y+ y-] @ block
        yp = (up.scale(d) - um.scale(c)).scale(Fraction(1) / det)
        ym = (um.scale(a) - up.scale(b)).scale(Fraction(1) / det)
        for y, key, gk in ((yp, ("+", q), (q, 0)), (ym, ("-", q), (0, q))):
            if not y:
                continue
            out[gk] = y
            for r, cr in mm.rows[key].coeffs.items():
                coeffs[r] = coeffs.get(r, ZERO) - cr * y
    out[(0, 0)] = coeffs.get(0, ZERO)
    return GenPoly(out)


# ---------------------------------------------------------------------------
# cross-m stability

@dataclass
class StabilityEntry:
    kind: str
    key: tuple
    ok: bool
    left: object
    right: object


@dataclass
class StabilityReport:
    m1: int
    m2: int
    entries: list

    @property
    def all_pass(self):
        return all(e.ok for e in self.entries)


def presentation_constants(fam, q):
    """The four m-independent constants attached to level q."""
    return {
        "p(q,-q)+": shift_constant(fam, 1, q),
        "p(-q,q)+": shift_constant(fam, 1, -q),
        "p(q,-q)-": shift_constant(fam, -1, q),
        "p(-q,q)-": shift_constant(fam, -1, -q),
    }


def stability_check(m1, m2, jobs=1):
    if not 1 <= m1 < m2:
        raise ValueError("need 1 <= m1 < m2, got %r, %r" % (m1, m2))
    f1, f2 = KTFamily(m1), KTFamily(m2)
    entries = []
    for q in range(1, m1 + 1):
        c1, c2 = presentation_constants(f1, q), presentation_constants(f2, q)
        for name in c1:
            entries.append(StabilityEntry("constant", (name, q), c1[name] == c2[name],
                                          c1[name], c2[name]))
    pairs = [(i, j) for i in f1.indices for j in f1.indices if abs(i) + abs(j) <= m1]
    t1 = full_table(f1, jobs=jobs, pairs=pairs)
    t2 = full_table(f2, jobs=jobs, pairs=pairs)
    for ij in pairs:
        a, b = t1[ij].as_dict(), t2[ij].as_dict()
        entries.append(StabilityEntry("structure", ij, a == b, a, b))
    return StabilityReport(m1, m2, entries)
