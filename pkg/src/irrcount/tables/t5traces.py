"""F_2(n, t1..t5) for odd n; basis (d2_1, d4_1, d8_1, d8_2, d8_3)."""

D2_1 = (2, 2)
D4_1 = (2, 2, 4, 4)
D8_1 = (4, 6, 4, 2, 8, 24, 32, 16)
D8_2 = (0, 2, 4, 2, 8, 8, 0, 16)
D8_3 = (2, 2, 0, -4, 0, 8, 16, 16)

A = (5, 5, 2, 0, 1)
B = (3, -3, 0, 2, -1)
C = (1, 1, -2, 0, 1)
D = (-1, 1, 0, -2, -1)
E = (-3, -3, 2, 0, 1)
G = (-5, 5, 0, 2, -1)

TABLES = [
    {
        "ident": "thm:5traces",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 8,
        "min_n": 5,
        "polys": {"d2_1": D2_1, "d4_1": D4_1, "d8_1": D8_1, "d8_2": D8_2, "d8_3": D8_3},
        "basis": ("d2_1", "d4_1", "d8_1", "d8_2", "d8_3"),
        "scale": 1,
        "entries": {
            (0, 0, 0, 0, 0): [((1, 3, 5, 7), A)],
            (1, 0, 0, 0, 0): [((1,), A), ((3,), B), ((5,), C), ((7,), D)],
            (0, 1, 0, 0, 0): [((1, 5), D), ((3, 7), B)],
            (1, 1, 0, 0, 0): [((1,), E), ((3,), D), ((5,), C), ((7,), B)],
            (0, 0, 1, 0, 0): [((1, 3, 5, 7), D)],
            (1, 0, 1, 0, 0): [((1,), E), ((3,), G), ((5,), C), ((7,), D)],
            (0, 1, 1, 0, 0): [((1, 5), D), ((3, 7), G)],
            (1, 1, 1, 0, 0): [((1,), B), ((3,), A), ((5,), D), ((7,), C)],
            (0, 0, 0, 1, 0): [((1, 3, 5, 7), C)],
            (1, 0, 0, 1, 0): [((1,), D), ((3,), E), ((5,), B), ((7,), C)],
            (0, 1, 0, 1, 0): [((1, 5), B), ((3, 7), D)],
            (1, 1, 0, 1, 0): [((1,), D), ((3,), C), ((5,), G), ((7,), E)],
            (0, 0, 1, 1, 0): [((1, 3, 5, 7), B)],
            (1, 0, 1, 1, 0): [((1,), B), ((3,), C), ((5,), D), ((7,), E)],
            (0, 1, 1, 1, 0): [((1, 5), G), ((3, 7), D)],
            (1, 1, 1, 1, 0): [((1,), E), ((3,), D), ((5,), C), ((7,), B)],
            (0, 0, 0, 0, 1): [((1, 3, 5, 7), B)],
            (1, 0, 0, 0, 1): [((1,), B), ((3,), C), ((5,), D), ((7,), E)],
            (0, 1, 0, 0, 1): [((1, 5), E), ((3, 7), C)],
            (1, 1, 0, 0, 1): [((1,), G), ((3,), E), ((5,), D), ((7,), C)],
            (0, 0, 1, 0, 1): [((1, 3, 5, 7), E)],
            (1, 0, 1, 0, 1): [((1,), D), ((3,), E), ((5,), B), ((7,), C)],
            (0, 1, 1, 0, 1): [((1, 5), C), ((3, 7), E)],
            (1, 1, 1, 0, 1): [((1,), C), ((3,), B), ((5,), E), ((7,), D)],
            (0, 0, 0, 1, 1): [((1, 3, 5, 7), D)],
            (1, 0, 0, 1, 1): [((1,), C), ((3,), D), ((5,), A), ((7,), B)],
            (0, 1, 0, 1, 1): [((1, 5), C), ((3, 7), E)],
            (1, 1, 0, 1, 1): [((1,), C), ((3,), B), ((5,), E), ((7,), D)],
            (0, 0, 1, 1, 1): [((1, 3, 5, 7), C)],
            (1, 0, 1, 1, 1): [((1,), C), ((3,), D), ((5,), E), ((7,), G)],
            (0, 1, 1, 1, 1): [((1, 5), E), ((3, 7), C)],
            (1, 1, 1, 1, 1): [((1,), D), ((3,), C), ((5,), B), ((7,), A)],
        },
    }
]
