"""F_2(n, t1, t2, t3) for odd n; fluctuation basis (d2_1, d4_1)."""

D2_1 = (2, 2)            # X^2 + 2X + 2
D4_1 = (2, 2, 4, 4)      # X^4 + 2X^3 + 2X^2 + 4X + 4

A = (2, 1)
B = (0, -1)
C = (-2, 1)

TABLES = [
    {
        "ident": "thm:3traces",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 4,
        "min_n": 3,
        "polys": {"d2_1": D2_1, "d4_1": D4_1},
        "basis": ("d2_1", "d4_1"),
        "scale": 1,
        "entries": {
            (0, 0, 0): [((1, 3), A)],
            (1, 0, 0): [((1,), A), ((3,), B)],
            (0, 1, 0): [((1, 3), B)],
            (1, 1, 0): [((1,), C), ((3,), B)],
            (0, 0, 1): [((1, 3), B)],
            (1, 0, 1): [((1,), B), ((3,), C)],
            (0, 1, 1): [((1, 3), C)],
            (1, 1, 1): [((1,), B), ((3,), A)],
        },
    }
]
