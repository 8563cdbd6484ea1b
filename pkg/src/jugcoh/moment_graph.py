"""
Moment graph G_m of the rank-one juggling variety X(1,2,m).

Vertices are keyed by the signed index ``q`` in ``[-m, m]``; the display pair
is ``(m - q, m + q)``.  There is an oriented edge ``p -> l`` whenever
``|p| > |l|`` and ``|p| - |l|`` is odd, labelled by ``w(p) - w(l)`` where

    w(q) = (2q+1)/2 * a + q(q+1)/2 * d.
"""

from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import BiPoly, to_json, to_text


class InvalidM(ValueError):
    pass


class UnknownVertex(KeyError):
    pass


def vertex_weight(q):
    return BiPoly.linear(Fraction(2 * q + 1, 2), Fraction(q * (q + 1), 2))


def edge_label(p, l):
    """Label of the edge p -> l; integer coefficients since p - l is odd."""
    return BiPoly.linear(p - l, (p - l) * (p + l + 1) // 2)


def pair(m, q):
    return (m - q, m + q)


def from_pair(m, ab):
    a, b = ab
    if a + b != 2 * m or a < 0 or b < 0:
        raise UnknownVertex(ab)
    return (b - a) // 2


def is_edge(p, l):
    return abs(p) > abs(l) and (abs(p) - abs(l)) % 2 == 1


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    label: BiPoly


class MomentGraph:
    """Immutable after construction."""

    def __init__(self, m):
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise InvalidM("m must be a positive integer, got %r" % (m,))
        self.m = m
        self.vertices = tuple(range(-m, m + 1))
        self.weights = {q: vertex_weight(q) for q in self.vertices}
        out = {}
        for p in self.vertices:
            out[p] = tuple(Edge(p, l, edge_label(p, l))
                           for l in self.vertices if is_edge(p, l))
        self._out = out
        self.edges = tuple(e for p in self.vertices for e in out[p])

    def __repr__(self):
        return "MomentGraph(m=%d)" % self.m

    def __eq__(self, other):
        return isinstance(other, MomentGraph) and other.m == self.m

    def __hash__(self):
        return hash(("MomentGraph", self.m))

    def __reduce__(self):
        return (MomentGraph, (self.m,))

    def __contains__(self, q):
        return isinstance(q, int) and -self.m <= q <= self.m

    def check_vertex(self, q):
        if q not in self:
            raise UnknownVertex(q)
        return q

    def pair(self, q):
        return pair(self.m, self.check_vertex(q))

    def from_pair(self, ab):
        return self.check_vertex(from_pair(self.m, ab))

    def weight(self, q):
        return self.weights[self.check_vertex(q)]

    def outgoing(self, q):
        return self._out[self.check_vertex(q)]

    def edge(self, p, l):
        for e in self.outgoing(p):
            if e.target == l:
                return e
        return None

    def reachable(self, source, target):
        """Oriented path exists; closed form ``|target| < |source|``."""
        self.check_vertex(source)
        self.check_vertex(target)
        return source == target or abs(target) < abs(source)

    def reachable_search(self, source, target):
        """Same as ``reachable`` but by explicit graph search."""
        self.check_vertex(target)
        seen = {self.check_vertex(source)}
        stack = [source]
        while stack:
            v = stack.pop()
            if v == target:
                return True
            for e in self._out[v]:
                if e.target not in seen:
                    seen.add(e.target)
                    stack.append(e.target)
        return False

    # -- export

    def to_json(self):
        return {
            "m": self.m,
            "vertices": [{"q": q, "pair": list(pair(self.m, q)),
                          "weight": to_json(self.weights[q])} for q in self.vertices],
            "edges": [{"source_q": e.source, "target_q": e.target,
                       "label": to_json(e.label)} for e in self.edges],
        }

    def to_dot(self):
        lines = ["digraph G_%d {" % self.m]
        for q in self.vertices:
            lines.append('  "(%d,%d)";' % pair(self.m, q))
        for e in self.edges:
            lines.append('  "(%d,%d)" -> "(%d,%d)" [label="%s"];' % (
                pair(self.m, e.source) + pair(self.m, e.target) + (to_text(e.label),)))
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(m):
    return MomentGraph(m)
