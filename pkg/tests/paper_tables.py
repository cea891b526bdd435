"""Frozen reference data for the classification tables.

Enumerator rows are (A_0, ..., A_n) with odd entries written out; the
even-code tables list each class once, so equal rows appear with
multiplicity.
"""

# even self-dual classes: n -> list of enumerator rows
EVEN_ENUMERATORS = {
    2: [(1, 0, 3)],
    4: [
        (1, 0, 6, 0, 9),
        (1, 0, 6, 0, 9),
    ],
    6: [
        (1, 0, 15, 0, 15, 0, 33),
        (1, 0, 9, 0, 27, 0, 27),
        (1, 0, 6, 0, 33, 0, 24),
        (1, 0, 9, 0, 27, 0, 27),
        (1, 0, 3, 0, 39, 0, 21),
        (1, 0, 0, 0, 45, 0, 18),
    ],
    8: [
        (1, 0, 28, 0, 70, 0, 28, 0, 129),
        (1, 0, 18, 0, 60, 0, 78, 0, 99),
        (1, 0, 13, 0, 55, 0, 103, 0, 84),
        (1, 0, 12, 0, 54, 0, 108, 0, 81),
        (1, 0, 12, 0, 54, 0, 108, 0, 81),
        (1, 0, 8, 0, 50, 0, 128, 0, 69),
        (1, 0, 9, 0, 51, 0, 123, 0, 72),
        (1, 0, 7, 0, 49, 0, 133, 0, 66),
        (1, 0, 5, 0, 47, 0, 143, 0, 60),
        (1, 0, 3, 0, 45, 0, 153, 0, 54),
        (1, 0, 12, 0, 54, 0, 108, 0, 81),
        (1, 0, 6, 0, 48, 0, 138, 0, 63),
        (1, 0, 3, 0, 45, 0, 153, 0, 54),
        (1, 0, 4, 0, 46, 0, 148, 0, 57),
        (1, 0, 4, 0, 46, 0, 148, 0, 57),
        (1, 0, 3, 0, 45, 0, 153, 0, 54),
        (1, 0, 2, 0, 44, 0, 158, 0, 51),
        (1, 0, 1, 0, 43, 0, 163, 0, 48),
        (1, 0, 0, 0, 42, 0, 168, 0, 45),
        (1, 0, 0, 0, 42, 0, 168, 0, 45),
        (1, 0, 0, 0, 42, 0, 168, 0, 45),
    ],
}

# non-even self-dual classes: n -> list of enumerator rows
NONEVEN_ENUMERATORS = {
    1: [(1, 1)],
    2: [(1, 2, 1)],
    3: [
        (1, 3, 3, 1),
        (1, 1, 3, 3),
        (1, 0, 3, 4),
    ],
    4: [
        (1, 4, 6, 4, 1),
        (1, 2, 4, 6, 3),
        (1, 1, 3, 7, 4),
        (1, 0, 2, 8, 5),
    ],
    5: [
        (1, 5, 10, 10, 5, 1),
        (1, 3, 6, 10, 9, 3),
        (1, 2, 4, 10, 11, 4),
        (1, 1, 2, 10, 13, 5),
        (1, 1, 6, 6, 9, 9),
        (1, 1, 6, 6, 9, 9),
        (1, 0, 10, 0, 5, 16),
        (1, 0, 6, 4, 9, 12),
        (1, 0, 4, 6, 11, 10),
        (1, 0, 2, 8, 13, 8),
        (1, 0, 0, 10, 15, 6),
    ],
    6: [
        (1, 6, 15, 20, 15, 6, 1),
        (1, 4, 9, 16, 19, 12, 3),
        (1, 3, 6, 14, 21, 15, 4),
        (1, 2, 3, 12, 23, 18, 5),
        (1, 2, 7, 12, 15, 18, 9),
        (1, 2, 7, 12, 15, 18, 9),
        (1, 1, 10, 10, 5, 21, 16),
        (1, 1, 6, 10, 13, 21, 12),
        (1, 1, 4, 10, 17, 21, 10),
        (1, 1, 2, 10, 21, 21, 8),
        (1, 1, 0, 10, 25, 21, 6),
        (1, 0, 7, 8, 7, 24, 17),
        (1, 0, 6, 8, 9, 24, 16),
        (1, 0, 4, 8, 13, 24, 14),
        (1, 0, 5, 8, 11, 24, 15),
        (1, 0, 3, 8, 15, 24, 13),
        (1, 0, 3, 8, 15, 24, 13),
        (1, 0, 2, 8, 17, 24, 12),
        (1, 0, 1, 8, 19, 24, 11),
        (1, 0, 0, 8, 21, 24, 10),
    ],
}

# number of inequivalent classes
COUNTS_EVEN = {2: 1, 4: 2, 6: 6, 8: 21}
COUNTS_ALL = {1: 1, 2: 2, 3: 3, 4: 6, 5: 11, 6: 26}
COUNT_ALL_7 = 59

# children counts n1 of the even classes, keyed by (enumerator, skeleton
# name); classes sharing both carry a multiset of n1 values
CHILDREN_EVEN = {
    2: {((1, 0, 3), "e2"): [1]},
    4: {
        ((1, 0, 6, 0, 9), "d4"): [2],
        ((1, 0, 6, 0, 9), "e2^2"): [1],
    },
    6: {
        ((1, 0, 15, 0, 15, 0, 33), "d6"): [2],
        ((1, 0, 9, 0, 27, 0, 27), "d4 e2"): [3],
        ((1, 0, 6, 0, 33, 0, 24), "d3^2"): [2],
        ((1, 0, 9, 0, 27, 0, 27), "e2^3"): [1],
        ((1, 0, 3, 0, 39, 0, 21), "d2^3"): [2],
        ((1, 0, 0, 0, 45, 0, 18), "-"): [1],
    },
    8: {
        ((1, 0, 28, 0, 70, 0, 28, 0, 129), "d8"): [2],
        ((1, 0, 18, 0, 60, 0, 78, 0, 99), "d6 e2"): [3],
        ((1, 0, 13, 0, 55, 0, 103, 0, 84), "d5 d3"): [4],
        ((1, 0, 12, 0, 54, 0, 108, 0, 81), "d4^2"): [2],
        ((1, 0, 12, 0, 54, 0, 108, 0, 81), "d4 e2^2"): [3],
        ((1, 0, 8, 0, 50, 0, 128, 0, 69), "d4 d2^2"): [4],
        ((1, 0, 9, 0, 51, 0, 123, 0, 72), "d3^2 e2"): [3],
        ((1, 0, 7, 0, 49, 0, 133, 0, 66), "d3^2 d2"): [4],
        ((1, 0, 5, 0, 47, 0, 143, 0, 60), "d3 d2^2"): [7],
        ((1, 0, 3, 0, 45, 0, 153, 0, 54), "d3"): [3],
        ((1, 0, 12, 0, 54, 0, 108, 0, 81), "e2^4"): [1],
        ((1, 0, 6, 0, 48, 0, 138, 0, 63), "e2 d2^3"): [3],
        ((1, 0, 3, 0, 45, 0, 153, 0, 54), "e2"): [2],
        ((1, 0, 4, 0, 46, 0, 148, 0, 57), "d2^4"): [2, 2],
        ((1, 0, 3, 0, 45, 0, 153, 0, 54), "d2^3"): [3],
        ((1, 0, 2, 0, 44, 0, 158, 0, 51), "d2^2"): [4],
        ((1, 0, 1, 0, 43, 0, 163, 0, 48), "d2"): [4],
        ((1, 0, 0, 0, 42, 0, 168, 0, 45), "-"): [1, 1, 1],
    },
}

# Aut(C6) orbits on K^6: weight -> orbit sizes
HEXACODE_ORBITS = {
    0: [1],
    1: [18],
    2: [135],
    3: [180, 360],
    4: [45, 270, 360, 540],
    5: [108, 270, 1080],
    6: [18, 45, 180, 216, 270],
}

# neighbourhood graph shape per Figure 1: n -> (vertices, edges, loops);
# edge-objects are the non-even classes (1, 4, 20), of which 0, 1, 8 are
# proper edges
GRAPH_SHAPE = {2: (1, 1, 1), 4: (2, 4, 3), 6: (6, 20, 12)}
