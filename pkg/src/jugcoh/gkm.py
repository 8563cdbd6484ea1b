"""
Equivariant classes on G_m as vertex-indexed tuples of polynomials.

A tuple ``f`` is a class exactly when ``f(x) - f(y)`` is divisible by the
label of every edge ``x -> y``.
"""

from dataclasses import dataclass

from .exactpoly import BiPoly, ZERO, NotDivisible, div_exact, from_json, to_json
from .moment_graph import Edge


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GkmViolation:
    edge: Edge
    difference: BiPoly


class CohClass:
    """Immutable map ``q -> BiPoly`` over the 2m+1 vertices of G_m."""

    __slots__ = ("m", "_vals")

    def __init__(self, m, values=None):
        self.m = m
        vals = [ZERO] * (2 * m + 1)
        if values:
            items = values.items() if isinstance(values, dict) else enumerate(values, -m)
            for q, v in items:
                if not -m <= q <= m:
                    raise KeyError(q)
                vals[q + m] = v if isinstance(v, BiPoly) else BiPoly.const(v)
        self._vals = tuple(vals)

    @classmethod
    def _of(cls, m, vals):
        f = cls.__new__(cls)
        f.m = m
        f._vals = tuple(vals)
        return f

    def __getitem__(self, q):
        if not -self.m <= q <= self.m:
            raise KeyError(q)
        return self._vals[q + self.m]

    def items(self):
        return zip(range(-self.m, self.m + 1), self._vals)

    def values(self):
        return self._vals

    def __eq__(self, other):
        return isinstance(other, CohClass) and self.m == other.m and self._vals == other._vals

    def __hash__(self):
        return hash((self.m, self._vals))

    def __reduce__(self):
        return (CohClass._of, (self.m, self._vals))

    def __repr__(self):
        return "CohClass(m=%d, {%s})" % (
            self.m, ", ".join("%d: %s" % (q, v) for q, v in self.items() if v))

    def is_zero(self):
        return not any(self._vals)

    def _check(self, other):
        if other.m != self.m:
            raise DimensionMismatch("m=%d vs m=%d" % (self.m, other.m))

    def __add__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check(other)
        return CohClass._of(self.m, [a + b for a, b in zip(self._vals, other._vals)])

    def __sub__(self, other):
        if isinstance(other, BiPoly):
            return CohClass._of(self.m, [a - other for a in self._vals])
        if not isinstance(other, CohClass):
            return NotImplemented
        self._check(other)
        return CohClass._of(self.m, [a - b for a, b in zip(self._vals, other._vals)])

    def __neg__(self):
        return CohClass._of(self.m, [-a for a in self._vals])

    def __mul__(self, other):
        if isinstance(other, CohClass):
            self._check(other)
            return CohClass._of(self.m, [a * b for a, b in zip(self._vals, other._vals)])
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, tau):
        """Multiply by a rational or by a polynomial (the Q[a,d]-module action)."""
        if isinstance(tau, BiPoly):
            return CohClass._of(self.m, [a * tau for a in self._vals])
        return CohClass._of(self.m, [a.scale(tau) for a in self._vals])

    def to_json(self):
        return {"m": self.m,
                "values": [{"q": q, "poly": to_json(v)} for q, v in self.items()]}

    @classmethod
    def from_json(cls, data):
        m = data["m"]
        if not isinstance(m, int) or m < 1:
            raise ValueError("bad m: %r" % (m,))
        vals = {}
        for entry in data["values"]:
            q = entry["q"]
            if q in vals:
                raise ValueError("vertex %d given twice" % q)
            vals[q] = from_json(entry["poly"])
        return cls(m, vals)


def const_class(g, tau):
    if not isinstance(tau, BiPoly):
        tau = BiPoly.const(tau)
    return CohClass._of(g.m, [tau] * (2 * g.m + 1))


def zero_class(g):
    return CohClass._of(g.m, [ZERO] * (2 * g.m + 1))


def class_add(f, h):
    return f + h


def class_mul(f, h):
    return f * h


def class_scale(f, tau):
    return f.scale(tau)


def edge_violation(f, e):
    diff = f[e.source] - f[e.target]
    try:
        div_exact(diff, e.label)
    except NotDivisible:
        return GkmViolation(e, diff)
    return None


def verify_gkm(g, f):
    """All edges whose congruence fails, in edge order; empty iff f is a class."""
    if f.m != g.m:
        raise DimensionMismatch("class has m=%d, graph has m=%d" % (f.m, g.m))
    out = []
    for e in g.edges:
        v = edge_violation(f, e)
        if v is not None:
            out.append(v)
    return out


def is_gkm(g, f):
    return not verify_gkm(g, f)
