"""
Published reference grids for m = 4 and m = 5, transcribed cell by cell.

Rows and columns are pairs (a, b).  ``Pm(lo, hi)`` is prod_{k=lo}^{hi}(-a + k d),
``Pp(lo, hi)`` is prod_{k=lo}^{hi}(a + k d).
"""

from fractions import Fraction

from jugcoh.exactpoly import ALPHA, DELTA, ONE, ZERO, BiPoly, product


def Pm(lo, hi):
    return product(-ALPHA + k * DELTA for k in range(lo, hi + 1))


def Pp(lo, hi):
    return product(ALPHA + k * DELTA for k in range(lo, hi + 1))


def L(ca, cd):
    return BiPoly.linear(ca, cd)


a, d = ALPHA, DELTA
H = Fraction(1, 2)

WEIGHTS = {
    4: {(8, 0): L(-7 * H, 6), (7, 1): L(-5 * H, 3), (6, 2): L(-3 * H, 1),
        (5, 3): L(-H, 0), (4, 4): L(H, 0), (3, 5): L(3 * H, 1),
        (2, 6): L(5 * H, 3), (1, 7): L(7 * H, 6), (0, 8): L(9 * H, 10)},
    5: {(10, 0): L(-9 * H, 10), (9, 1): L(-7 * H, 6), (8, 2): L(-5 * H, 3),
        (7, 3): L(-3 * H, 1), (6, 4): L(-H, 0), (5, 5): L(H, 0),
        (4, 6): L(3 * H, 1), (3, 7): L(5 * H, 3), (2, 8): L(7 * H, 6),
        (1, 9): L(9 * H, 10), (0, 10): L(11 * H, 15)},
}

# (source pair, target pair) -> drawn label
FIGURE_EDGES = {
    4: {
        ((5, 3), (4, 4)): -a,
        ((3, 5), (4, 4)): a + d,
        ((6, 2), (5, 3)): -a + d,
        ((6, 2), (3, 5)): -3 * a,
        ((2, 6), (5, 3)): 3 * a + 3 * d,
        ((2, 6), (3, 5)): a + 2 * d,
        ((7, 1), (6, 2)): -a + 2 * d,
        ((7, 1), (2, 6)): -5 * a,
        ((7, 1), (4, 4)): -3 * a + 3 * d,
        ((1, 7), (6, 2)): 5 * a + 5 * d,
        ((1, 7), (2, 6)): a + 3 * d,
        ((1, 7), (4, 4)): 3 * a + 6 * d,
        ((8, 0), (1, 7)): -7 * a,
        ((8, 0), (3, 5)): -5 * a + 5 * d,
        ((8, 0), (5, 3)): -3 * a + 6 * d,
        ((8, 0), (7, 1)): -a + 3 * d,
        ((0, 8), (7, 1)): 7 * a + 7 * d,
        ((0, 8), (1, 7)): a + 4 * d,
        ((0, 8), (5, 3)): 5 * a + 10 * d,
        ((0, 8), (3, 5)): 3 * a + 9 * d,
    },
    5: {
        ((6, 4), (5, 5)): -a,
        ((4, 6), (5, 5)): a + d,
        ((7, 3), (6, 4)): -a + d,
        ((7, 3), (4, 6)): -3 * a,
        ((3, 7), (6, 4)): 3 * a + 3 * d,
        ((3, 7), (4, 6)): a + 2 * d,
        ((8, 2), (7, 3)): -a + 2 * d,
        ((8, 2), (3, 7)): -5 * a,
        ((8, 2), (5, 5)): -3 * a + 3 * d,
        ((2, 8), (7, 3)): 5 * a + 5 * d,
        ((2, 8), (3, 7)): a + 3 * d,
        ((2, 8), (5, 5)): 3 * a + 6 * d,
        ((9, 1), (8, 2)): -a + 3 * d,
        ((9, 1), (2, 8)): -7 * a,
        ((9, 1), (6, 4)): -3 * a + 6 * d,
        ((9, 1), (4, 6)): -5 * a + 5 * d,
        ((1, 9), (8, 2)): 7 * a + 7 * d,
        ((1, 9), (2, 8)): a + 4 * d,
        ((1, 9), (6, 4)): 5 * a + 10 * d,
        ((1, 9), (4, 6)): 3 * a + 9 * d,
        ((10, 0), (9, 1)): -a + 4 * d,
        ((10, 0), (1, 9)): -9 * a,
        ((10, 0), (7, 3)): -3 * a + 9 * d,
        ((10, 0), (3, 7)): -7 * a + 7 * d,
        ((10, 0), (5, 5)): -5 * a + 10 * d,
        ((0, 10), (9, 1)): 9 * a + 9 * d,
        ((0, 10), (1, 9)): a + 5 * d,
        ((0, 10), (7, 3)): 7 * a + 14 * d,
        ((0, 10), (3, 7)): 6 * a + 12 * d,
        ((0, 10), (5, 5)): 5 * a + 15 * d,
    },
}

# the one drawn label that disagrees with the weight-difference formula
FIGURE_DISCREPANCIES = {
    (5, ((0, 10), (3, 7))): (6 * a + 12 * d, 3 * a + 12 * d),
}

COLUMNS = {
    4: [(8, 0), (0, 8), (7, 1), (1, 7), (6, 2), (2, 6), (5, 3), (3, 5), (4, 4)],
    5: [(10, 0), (0, 10), (9, 1), (1, 9), (8, 2), (2, 8), (7, 3), (3, 7), (6, 4), (4, 6), (5, 5)],
}

Z = ZERO

TABLES = {
    4: {
        (8, 0): [Pm(0, 3), Z, Z, Z, Z, Z, Z, Z, Z],
        (0, 8): [Z, Pp(1, 4), Z, Z, Z, Z, Z, Z, Z],
        (7, 1): [Pm(0, 2), Pp(2, 4), Pm(0, 2), Z, Z, Z, Z, Z, Z],
        (1, 7): [Pm(1, 3), Pp(1, 3), Z, Pp(1, 3), Z, Z, Z, Z, Z],
        (6, 2): [3 * Pm(1, 2), Pp(2, 3), Pm(0, 1), Pp(2, 3), Pm(0, 1), Z, Z, Z, Z],
        (2, 6): [Pm(1, 2), 3 * Pp(2, 3), Pp(1, 3), Pm(1, 2), Z, Pp(1, 2), Z, Z, Z],
        (5, 3): [2 * (-a + d), 2 * (a + 3 * d), 2 * (-a + d), a + 2 * d, -a, a + 2 * d, -a, Z, Z],
        (3, 5): [2 * (-a + 2 * d), 2 * (a + 2 * d), -a + d, 2 * (a + 2 * d), -a + d, a + d, Z, a + d, Z],
        (4, 4): [ONE] * 9,
    },
    5: {
        (10, 0): [Pm(0, 4)] + [Z] * 10,
        (0, 10): [Z, Pp(1, 5)] + [Z] * 9,
        (9, 1): [Pm(0, 4), Pp(2, 5), Pm(0, 4)] + [Z] * 8,
        (1, 9): [Pm(1, 4), Pp(1, 5), Z, Pp(1, 5)] + [Z] * 7,
        (8, 2): [4 * Pm(1, 3), Pp(2, 4), Pm(0, 2), Pp(2, 4), Pm(0, 2)] + [Z] * 6,
        (2, 8): [Pm(1, 3), 4 * Pp(2, 4), Pm(1, 3), Pp(1, 3), Z, Pp(1, 3)] + [Z] * 5,
        (7, 3): [3 * Pm(1, 2), 3 * Pp(3, 4), 3 * Pm(1, 2), Pp(2, 3), Pm(0, 1), Pp(2, 3), Pm(0, 1)] + [Z] * 4,
        (3, 7): [3 * Pm(2, 3), 3 * Pp(2, 3), Pm(1, 2), 3 * Pp(2, 3), Pp(1, 3), Pm(1, 2), Z, Pp(1, 2)] + [Z] * 3,
        (6, 4): [3 * (-a + 2 * d), 2 * (a + 3 * d), 2 * (-a + d), 2 * (a + 3 * d), 2 * (-a + d),
                 a + 2 * d, -a, a + 2 * d, -a, Z, Z],
        (4, 6): [2 * (-a + 2 * d), 3 * (a + 3 * d), 2 * (-a + 2 * d), 2 * (a + 2 * d), -a + d,
                 2 * (a + 2 * d), -a + d, a + d, Z, a + d, Z],
        (5, 5): [ONE] * 11,
    },
}
