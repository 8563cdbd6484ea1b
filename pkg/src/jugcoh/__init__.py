"""Exact equivariant cohomology of the juggling varieties X(1,2,m) via moment graphs."""

from .exactpoly import ALPHA, DELTA, ONE, ZERO, BiPoly, DivisorZero, NotDivisible, div_exact
from .moment_graph import InvalidM, MomentGraph, UnknownVertex
from .gkm import CohClass, DimensionMismatch, GkmViolation, const_class, verify_gkm
from .kt_basis import IndexOutOfRange, KTFamily, build_xi, p_value, verify_kt_axioms
from .expansion import (Expansion, IntegralityViolation, NotInSpan, expand, full_table,
                        oracle_expand, structure_constants)

__version__ = "0.1.0"
