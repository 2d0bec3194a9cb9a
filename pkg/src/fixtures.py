"""
Golden values for tests and demos.

Characters are in the rendered text format of MultiPoly: graded-lex order
with v1 largest, unit coefficients and exponents omitted.
"""

# Characters of hook modules at n = 3
CHARACTER_2_1_N3 = (
    "v1^2*v2 + v1^2*v3 + v1*v2^2 + 2*v1*v2*v3 + v1*v3^2 + v2^2*v3 + v2*v3^2"
)
CHARACTER_2_1_1_N3 = "v1^2*v2*v3 + v1*v2^2*v3 + v1*v2*v3^2"

# S^2 of shape (3,1) at n = 3
FROBENIUS_3_1_N3_P2 = "v1^2*v2^2 + v1^2*v3^2 + v2^2*v3^2"
FROBENIUS_3_1_N3_P2_GRADINGS = [(2, 2, 0), (2, 0, 2), (0, 2, 2)]

# Image of F^4 on S_2 at n = 2
FROBENIUS_POWER_4_S2_N2 = [(8, 0), (4, 4), (0, 8)]

# (m, p, n) -> term dims and cohomology dims of N_m(V)
COMPLEX_DIMS = {
    (2, 2, 2): [3, 1],
    (4, 2, 3): [15, 15, 3, 0],
    (6, 3, 2): [7, 5, 0, 0, 0, 0],
}
COHOMOLOGY_DIMS = {
    (2, 2, 2): [2, 0],
    (4, 2, 3): [6, 3, 0, 0],
    (6, 3, 2): [3, 1, 0, 0, 0, 0],
}

# H^0 of N_4 at n = 2, p = 2
H0_CHARACTER_4_2_N2 = "v1^4 + v1^2*v2^2 + v2^4"

# Hook shapes (arm, leg) with dimension at n
HOOK_DIMENSIONS = {
    ((2, 1), 3): 8,
    ((3, 1), 3): 15,
    ((1, 1), 2): 1,
    ((2, 0), 3): 6,
}

# Every (m, p) with p in {2, 3, 5}, p | m and m <= 10
DIVISIBLE_GRID = [
    (2, 2), (4, 2), (6, 2), (8, 2), (10, 2), (3, 3), (6, 3), (9, 3), (5, 5), (10, 5)
]
