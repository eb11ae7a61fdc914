"""Closed forms for the four-vertex example network with resistors R1..R5.

Edges: e1 = 4-1, e2 = 1-2, e3 = 2-3, and e4, e5 parallel between 3 and 4.
"""

from fractions import Fraction

from dualnet.generators import with_resistances


def network(graph, R):
    return with_resistances(graph, R)


def laplacian_rows(R):
    c1, c2, c3, c4, c5 = (1 / Fraction(r) for r in R)
    return [
        [c1 + c2, -c2, 0, -c1],
        [-c2, c2 + c3, -c3, 0],
        [0, -c3, c3 + c4 + c5, -c4 - c5],
        [-c1, 0, -c4 - c5, c1 + c4 + c5],
    ]


def denominator(R):
    R1, R2, R3, R4, R5 = R
    return R4 * (R1 + R2 + R3) + R5 * (R1 + R2 + R3 + R4)


def L11(R):
    R1, R2, R3, R4, R5 = R
    return denominator(R) / (R1 * R2 * R3 * R4 * R5)


def L34_34(R):
    R1, R2, R3, _, _ = R
    return 1 / (R1 * R2) + 1 / (R1 * R3) + 1 / (R2 * R3)


def dual_L11(R):
    return denominator(R)


def dual_L12_12(R):
    R1, R2, R3, _, R5 = R
    return R1 + R2 + R3 + R5


def r4(R):
    R1, R2, R3, R4, R5 = R
    return R4 * R5 * (R1 + R2 + R3) / denominator(R)


def dual_r4(R):
    return dual_L12_12(R) / denominator(R)


def dual_laplacian_rows(R):
    # dual vertices in the order: inner face, lens between e4 and e5, outer face
    R1, R2, R3, R4, R5 = R
    s = R1 + R2 + R3
    return [
        [s + R4, -R4, -s],
        [-R4, R4 + R5, -R5],
        [-s, -R5, s + R5],
    ]
