"""
Exact sparse polynomials in two variables over the rationals.

A ``BiPoly`` is an immutable mapping ``(i, j) -> Fraction`` standing for
``sum c * a^i * d^j``; ``a`` and ``d`` are the two degree-two generators of
the equivariant cohomology of a point for the rank-two torus.  Coefficients
are ``fractions.Fraction`` over Python ints, so nothing ever overflows.
"""

from fractions import Fraction
from functools import reduce
import operator


class NotDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""


class DivisorZero(ZeroDivisionError):
    pass


class _AnyDegree:
    """Degree of the zero polynomial: compatible with every degree."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __eq__(self, other):
        return isinstance(other, (int, _AnyDegree))

    def __hash__(self):
        return hash("ANY_DEGREE")

    def __repr__(self):
        return "ANY_DEGREE"

    def __reduce__(self):
        return (_AnyDegree, ())


ANY_DEGREE = _AnyDegree()


def _frac(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError("exact coefficient required, got %r" % (type(c),))


class BiPoly:
    """Element of Q[a, d] in canonical sparse form (no zero coefficients)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        cs = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for (i, j), c in items:
                if i < 0 or j < 0:
                    raise ValueError("negative exponent (%d, %d)" % (i, j))
                c = _frac(c)
                if not c:
                    continue
                key = (int(i), int(j))
                v = cs.get(key, 0) + c
                if v:
                    cs[key] = v
                else:
                    cs.pop(key, None)
        self._terms = cs
        self._hash = None

    @classmethod
    def _raw(cls, cs):
        # caller guarantees canonical form
        p = cls.__new__(cls)
        p._terms = cs
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        c = _frac(c)
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def linear(cls, ca, cd):
        """``ca*a + cd*d``."""
        return cls({(1, 0): ca, (0, 1): cd})

    # -- mapping-ish access

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, i, j):
        return self._terms.get((i, j), Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == BiPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __reduce__(self):
        return (BiPoly, (self._terms,))

    # -- ring operations

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        cs = dict(self._terms)
        for k, c in other._terms.items():
            v = cs.get(k, 0) + c
            if v:
                cs[k] = v
            else:
                del cs[k]
        return BiPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return BiPoly._raw({})
        cs = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                cs[k] = cs.get(k, 0) + c1 * c2
        return BiPoly._raw({k: c for k, c in cs.items() if c})

    __rmul__ = __mul__

    def scale(self, c):
        c = _frac(c)
        if not c:
            return BiPoly._raw({})
        return BiPoly._raw({k: v * c for k, v in self._terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("non-negative integer exponent required")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisorZero("division by zero constant")
            return self.scale(Fraction(1) / _frac(other))
        if isinstance(other, BiPoly):
            return div_exact(self, other)
        return NotImplemented

    # -- structure

    def degree(self):
        """Maximal total degree; -1 for zero."""
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def is_homogeneous(self):
        return is_homogeneous(self)

    def has_integer_coefficients(self):
        return has_integer_coefficients(self)

    def leading(self):
        """Largest term in lex order on (e_alpha, e_delta)."""
        k = max(self._terms)
        return k, self._terms[k]

    def subs(self, a, d):
        """Evaluate at rational (or any ring) values."""
        total = 0
        for (i, j), c in self._terms.items():
            total = total + c * a ** i * d ** j
        return total

    # -- text

    def __str__(self):
        return pretty(self)

    def __repr__(self):
        return "BiPoly(%s)" % pretty(self)

    def to_text(self):
        return to_text(self)

    def to_json(self):
        return to_json(self)


def _coerce(x):
    if isinstance(x, BiPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return BiPoly.const(x)
    return None


ZERO = BiPoly()
ONE = BiPoly.const(1)
ALPHA = BiPoly({(1, 0): 1})
DELTA = BiPoly({(0, 1): 1})


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def product(polys):
    return reduce(operator.mul, polys, ONE)


def div_exact(a, b):
    """Return ``q`` with ``a == b*q``.

    Multivariate division by the single divisor ``b`` with terms ordered
    lexicographically by (e_alpha, e_delta).  A single polynomial is a
    Groebner basis of the ideal it generates, so a nonzero remainder means
    no quotient exists.
    """
    if not b._terms:
        raise DivisorZero("division by the zero polynomial")
    if not a._terms:
        return ZERO
    (bi, bj), bc = b.leading()
    if len(b._terms) == 1:
        cs = {}
        for (i, j), c in a._terms.items():
            if i < bi or j < bj:
                raise NotDivisible("%s is not divisible by %s" % (pretty(a), pretty(b)))
            cs[(i - bi, j - bj)] = c / bc
        return BiPoly._raw(cs)
    rem = dict(a._terms)
    quot = {}
    btail = [(k, c) for k, c in b._terms.items() if k != (bi, bj)]
    while rem:
        (ri, rj) = max(rem)
        rc = rem[(ri, rj)]
        if ri < bi or rj < bj:
            raise NotDivisible("%s is not divisible by %s" % (pretty(a), pretty(b)))
        qi, qj = ri - bi, rj - bj
        qc = rc / bc
        quot[(qi, qj)] = quot.get((qi, qj), 0) + qc
        del rem[(ri, rj)]
        for (ti, tj), tc in btail:
            k = (ti + qi, tj + qj)
            v = rem.get(k, 0) - qc * tc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return BiPoly._raw({k: c for k, c in quot.items() if c})


def divides(b, a):
    try:
        div_exact(a, b)
    except NotDivisible:
        return False
    return True


def is_homogeneous(a):
    """Common total degree of all terms, ``ANY_DEGREE`` for zero, else None."""
    if not a._terms:
        return ANY_DEGREE
    degs = {i + j for i, j in a._terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def has_integer_coefficients(a):
    return all(c.denominator == 1 for c in a._terms.values())


# ---------------------------------------------------------------------------
# serialization

def to_text(a):
    """Canonical text: ``num/den*a^i*d^j`` terms sorted by (i, j), ``+``-joined."""
    if not a._terms:
        return "0"
    return "+".join(
        "%d/%d*a^%d*d^%d" % (c.numerator, c.denominator, i, j)
        for (i, j), c in sorted(a._terms.items()))


def from_text(s):
    s = s.strip()
    if s == "0":
        return ZERO
    terms = {}
    for part in s.split("+"):
        try:
            cpart, apart, dpart = part.split("*")
            num, den = cpart.split("/")
            if not (apart.startswith("a^") and dpart.startswith("d^")):
                raise ValueError
            i, j = int(apart[2:]), int(dpart[2:])
            num, den = int(num), int(den)
        except ValueError:
            raise ValueError("malformed term %r in %r" % (part, s)) from None
        if den <= 0:
            raise ValueError("non-positive denominator in %r" % part)
        if (i, j) in terms:
            raise ValueError("repeated monomial in %r" % s)
        terms[(i, j)] = Fraction(num, den)
    return BiPoly(terms)


def to_json(a):
    return [[i, j, c.numerator, c.denominator] for (i, j), c in sorted(a._terms.items())]


def from_json(data):
    terms = {}
    for entry in data:
        i, j, num, den = entry
        if den <= 0:
            raise ValueError("non-positive denominator in %r" % (entry,))
        terms[(i, j)] = terms.get((i, j), 0) + Fraction(num, den)
    return BiPoly(terms)


def _coeff_str(c, first, bare):
    sign = "-" if c < 0 else ("" if first else "+")
    c = abs(c)
    if bare and c == 1:
        return sign
    s = str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)
    return sign + s + ("*" if bare else "")


def pretty(a):
    """Human-readable ASCII form, e.g. ``-a^2+a*d+2*d^2`` (descending in a)."""
    if not a._terms:
        return "0"
    out = []
    for (i, j), c in sorted(a._terms.items(), reverse=True):
        mono = []
        if i:
            mono.append("a" if i == 1 else "a^%d" % i)
        if j:
            mono.append("d" if j == 1 else "d^%d" % j)
        out.append(_coeff_str(c, not out, bool(mono)) + "*".join(mono))
    return "".join(out)


def parse(s):
    """Parse the ``pretty`` form (also plain ints and fractions)."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    terms = []
    chunks = []
    start = 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > start and s[i - 1] not in "^*/":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    for chunk in chunks:
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        coeff = Fraction(sign)
        ea = ed = 0
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError("malformed polynomial %r" % s)
            base, _, exp = factor.partition("^")
            e = int(exp) if exp else 1
            if base == "a":
                ea += e
            elif base == "d":
                ed += e
            else:
                coeff *= Fraction(base) ** e
        terms.append(((ea, ed), coeff))
    return BiPoly(terms)
