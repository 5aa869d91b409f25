"""F_2(n, t1..t4) for odd n; basis (d2_1, d4_1, d8_1, d8_2)."""

D2_1 = (2, 2)
D4_1 = (2, 2, 4, 4)
D8_1 = (4, 6, 4, 2, 8, 24, 32, 16)
D8_2 = (0, 2, 4, 2, 8, 8, 0, 16)

A = (4, 1, 1, 1)      # 4 d21 + d41 + d81 + d82
B = (2, -1, -1, 1)    # 2 d21 - d41 - d81 + d82
C = (0, 1, -1, -1)    # d41 - d81 - d82
D = (-2, -1, 1, -1)   # -2 d21 - d41 + d81 - d82
E = (-4, 1, 1, 1)

TABLES = [
    {
        "ident": "thm:4traces",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 8,
        "min_n": 4,
        "polys": {"d2_1": D2_1, "d4_1": D4_1, "d8_1": D8_1, "d8_2": D8_2},
        "basis": ("d2_1", "d4_1", "d8_1", "d8_2"),
        "scale": 1,
        "entries": {
            (0, 0, 0, 0): [((1, 3, 5, 7), A)],
            (1, 0, 0, 0): [((1,), A), ((3,), B), ((5,), C), ((7,), D)],
            (0, 1, 0, 0): [((1, 5), D), ((3, 7), B)],
            (1, 1, 0, 0): [((1,), E), ((3,), D), ((5,), C), ((7,), B)],
            (0, 0, 1, 0): [((1, 3, 5, 7), D)],
            (1, 0, 1, 0): [((1,), D), ((3,), E), ((5,), B), ((7,), C)],
            (0, 1, 1, 0): [((1, 5), C), ((3, 7), E)],
            (1, 1, 1, 0): [((1,), B), ((3,), A), ((5,), D), ((7,), C)],
            (0, 0, 0, 1): [((1, 3, 5, 7), C)],
            (1, 0, 0, 1): [((1,), C), ((3,), D), ((5,), A), ((7,), B)],
            (0, 1, 0, 1): [((1, 5), B), ((3, 7), D)],
            (1, 1, 0, 1): [((1,), C), ((3,), B), ((5,), E), ((7,), D)],
            (0, 0, 1, 1): [((1, 3, 5, 7), B)],
            (1, 0, 1, 1): [((1,), B), ((3,), C), ((5,), D), ((7,), E)],
            (0, 1, 1, 1): [((1, 5), E), ((3, 7), C)],
            (1, 1, 1, 1): [((1,), D), ((3,), C), ((5,), B), ((7,), A)],
        },
    }
]
