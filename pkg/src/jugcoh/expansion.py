"""
Expansion of classes in the KT basis, structure constants, and an
independent fraction-field oracle for the same expansion.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exactpoly import ONE, ZERO, BiPoly, NotDivisible, div_exact, has_integer_coefficients
from .gkm import DimensionMismatch, verify_gkm
from .kt_basis import KTFamily, vertex_of


class NotInSpan(ArithmeticError):
    """Raised with ``step = (q, sign)`` naming the division that failed."""

    def __init__(self, msg, step=None):
        super().__init__(msg)
        self.step = step


class IntegralityViolation(ArithmeticError):
    pass


@dataclass
class Expansion:
    m: int
    coeffs: dict
    integral: bool = field(default=None)

    def __post_init__(self):
        self.coeffs = {r: c for r, c in self.coeffs.items() if c}
        if self.integral is None:
            self.integral = all(has_integer_coefficients(c) for c in self.coeffs.values())

    def __getitem__(self, r):
        return self.coeffs.get(r, ZERO)

    def __eq__(self, other):
        return isinstance(other, Expansion) and self.m == other.m and self.coeffs == other.coeffs

    def as_dict(self):
        return dict(sorted(self.coeffs.items()))

    def recombine(self, fam):
        f = fam.xi(0).scale(ZERO)
        for r, c in self.coeffs.items():
            f = f + fam.xi(r).scale(c)
        return f


def lemma_order(m):
    """0, then +q, -q for q = 1..m."""
    out = [0]
    for q in range(1, m + 1):
        out += [q, -q]
    return out


def expand(fam, f, check=False):
    """Subtract-and-divide expansion of ``f`` in the KT basis.

    At step ``r`` the residual at vertex(r) is divided exactly by the
    diagonal value of xi_r; all earlier vertices of the residual are zero.
    """
    if f.m != fam.m:
        raise DimensionMismatch("class has m=%d, family has m=%d" % (f.m, fam.m))
    if check:
        bad = verify_gkm(fam.graph, f)
        if bad:
            raise NotInSpan("input violates %d congruences" % len(bad))
    coeffs = {}
    resid = f
    for r in lemma_order(fam.m):
        v = vertex_of(r)
        val = resid[v]
        if not val:
            continue
        try:
            h = div_exact(val, fam.diagonal(r))
        except NotDivisible:
            raise NotInSpan("division failed at step q=%d sign=%s" % (
                abs(r), "+" if r >= 0 else "-"), step=(abs(r), 1 if r >= 0 else -1)) from None
        coeffs[r] = h
        resid = resid - fam.xi(r).scale(h)
    if not resid.is_zero():
        # only reachable for non-classes whose residual escapes every diagonal
        raise NotInSpan("nonzero residual after all steps")
    return Expansion(fam.m, coeffs)


def random_combination(fam, rng, max_deg=2, max_coeff=5):
    """Random sum c_r * xi_r with small rational polynomial c_r; returns (class, {r: c_r})."""
    coeffs = {}
    f = fam.xi(0).scale(0)
    for r in fam.indices:
        terms = {}
        for _ in range(rng.randint(0, 3)):
            i = rng.randint(0, max_deg)
            j = rng.randint(0, max_deg - i)
            terms[(i, j)] = Fraction(rng.randint(-max_coeff, max_coeff), rng.randint(1, 3))
        c = BiPoly(terms)
        if c:
            coeffs[r] = c
            f = f + fam.xi(r).scale(c)
    return f, coeffs


# ---------------------------------------------------------------------------
# oracle: back-substitution over Frac(Q[a, d])

def _primitive_linear(ca, cd):
    """Normalize a*ca + d*cd to coprime integers with positive leading entry."""
    ca, cd = Fraction(ca), Fraction(cd)
    den = ca.denominator * cd.denominator // gcd(ca.denominator, cd.denominator)
    ia, idd = int(ca * den), int(cd * den)
    g = gcd(ia, idd)
    ia, idd = ia // g, idd // g
    if ia < 0 or (ia == 0 and idd < 0):
        ia, idd = -ia, -idd
    return ia, idd


def _divisors(n):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i * i != n:
                out.append(n // i)
        i += 1
    return out


def split_linear(p):
    """Factor a homogeneous bivariate ``p`` as ``c * prod(linear) * rest``.

    Returns (rest, Counter of primitive linear forms (ia, id)); ``rest``
    carries the scalar and any part without rational linear factors.
    """
    factors = Counter()
    if not p:
        return p, factors
    for key in ((1, 0), (0, 1)):
        lin = BiPoly({key: 1})
        while p.degree() > 0:
            try:
                p = div_exact(p, lin)
            except NotDivisible:
                break
            factors[key] += 1
    while p.degree() > 0:
        # p(a, d) with no pure a/d factor: roots a/d = -s/t from integer coefficients
        items = p.items()
        lcm_den = 1
        for _, c in items:
            lcm_den = lcm_den * c.denominator // gcd(lcm_den, c.denominator)
        lead = int(p.coeff(p.degree(), 0) * lcm_den)
        tail = int(p.coeff(0, p.degree()) * lcm_den)
        found = None
        for t in _divisors(lead):
            for s in _divisors(tail):
                for sg in (1, -1):
                    lin = BiPoly.linear(t, sg * s)
                    try:
                        p2 = div_exact(p, lin)
                    except NotDivisible:
                        continue
                    found = (t, sg * s), p2
                    break
                if found:
                    break
            if found:
                break
        if not found:
            break
        key, p = found
        factors[_primitive_linear(*key)] += 1
    return p, factors


def _lin(key):
    return BiPoly.linear(*key)


class Frac:
    """num / (scalar-free product of linear forms); cancels shared linear factors."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        self.num = num
        self.den = Counter(den or {})
        self._reduce()

    def _reduce(self):
        for key in list(self.den):
            lin = _lin(key)
            while self.den[key] and self.num:
                try:
                    self.num = div_exact(self.num, lin)
                except NotDivisible:
                    break
                self.den[key] -= 1
            if not self.num:
                self.den.clear()
                break
        self.den = +self.den

    def _den_poly(self, keys):
        out = ONE
        for k, e in keys.items():
            out = out * _lin(k) ** e
        return out

    def __add__(self, other):
        common = self.den | other.den
        a = self.num * self._den_poly(common - self.den)
        b = other.num * other._den_poly(common - other.den)
        return Frac(a + b, common)

    def __neg__(self):
        return Frac(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def mul_poly(self, p):
        return Frac(self.num * p, self.den)

    def div_poly(self, p):
        rest, facs = split_linear(p)
        if rest.degree() > 0:
            raise NotInSpan("divisor %s does not split into linear forms" % (p,))
        c = rest.coeff(0, 0)
        return Frac(self.num.scale(1 / c), self.den + facs)

    def polynomial(self):
        """The value as a polynomial, or None."""
        if not self.den:
            return self.num
        try:
            return div_exact(self.num, self._den_poly(self.den))
        except NotDivisible:
            return None


def oracle_expand(fam, f):
    """Triangular solve of f(v) = sum_r c_r xi_r(v) over the fraction field.

    Unknowns are ordered by |r|; the equation for c_r is read at vertex(r),
    where the coefficient matrix is lower triangular (checked).  Each c_r is
    kept as a reduced fraction and certified polynomial only at the end.
    """
    if f.m != fam.m:
        raise DimensionMismatch("class has m=%d, family has m=%d" % (f.m, fam.m))
    order = sorted(fam.indices, key=lambda r: (abs(r), -r))
    for i, r in enumerate(order):
        row = vertex_of(r)
        for later in order[i + 1:]:
            if fam.p(later, row):
                raise AssertionError("coefficient matrix not triangular at %d/%d" % (row, later))
    sol = {}
    for r in order:
        row = vertex_of(r)
        acc = Frac(f[row])
        for r2, c in sol.items():
            entry = fam.p(r2, row)
            if entry:
                acc = acc - c.mul_poly(entry)
        sol[r] = acc.div_poly(fam.p(r, row))
    coeffs = {}
    for r in order:
        c = sol[r].polynomial()
        if c is None:
            raise NotInSpan("coefficient of index %d is not a polynomial" % r,
                            step=(abs(r), 1 if r >= 0 else -1))
        coeffs[r] = c
    # the square system uses every vertex once; confirm nothing was left over
    e = Expansion(fam.m, coeffs)
    if e.recombine(fam) != f:
        raise NotInSpan("triangular solution does not reproduce the input")
    return e


# ---------------------------------------------------------------------------
# structure constants

def structure_constants(fam, i, j):
    fam.check_index(i)
    fam.check_index(j)
    return expand(fam, fam.xi(i) * fam.xi(j))


@dataclass
class StructureTable:
    m: int
    entries: dict

    def __getitem__(self, ij):
        return self.entries[ij]

    @property
    def integral(self):
        return all(e.integral for e in self.entries.values())

    def rows(self):
        """Flat (i, j, r, coeff) rows, sorted."""
        out = []
        for (i, j), e in sorted(self.entries.items()):
            for r, c in sorted(e.coeffs.items()):
                out.append((i, j, r, c))
        return out


def _sc_job(args):
    m, i, j = args
    from .relations import _family
    return (i, j), structure_constants(_family(m), i, j)


def full_table(fam, jobs=1, pairs=None):
    if pairs is None:
        pairs = [(i, j) for i in fam.indices for j in fam.indices]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(jobs) as ex:
            entries = dict(ex.map(_sc_job, [(fam.m, i, j) for i, j in pairs]))
    else:
        entries = {(i, j): structure_constants(fam, i, j) for i, j in pairs}
    for (i, j), e in entries.items():
        if not e.integral:
            raise IntegralityViolation("non-integral structure constant for (%d, %d): %s"
                                       % (i, j, e.as_dict()))
        if (j, i) in entries and entries[(j, i)] != e:
            raise AssertionError("structure table not symmetric at (%d, %d)" % (i, j))
    return StructureTable(fam.m, entries)
