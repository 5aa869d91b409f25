"""F_2(n, 0, 0, 0, t4, t5) for ALL n >= 5, and the period-120 wildcard count
F_2(n, 0, 0, 0, *, 0)."""

D2_1 = (2, 2)
D2_2 = (0, 2)
D2_3 = (-2, 2)
D4_1 = (2, 2, 4, 4)
D4_2 = (0, 2, 0, 4)
D8_1 = (4, 6, 4, 2, 8, 24, 32, 16)
D8_2 = (0, 2, 4, 2, 8, 8, 0, 16)
D8_3 = (2, 2, 0, -4, 0, 8, 16, 16)
D8_4 = (0, 2, -4, 2, -8, 8, 0, 16)

_POLYS = {
    "d2_1": D2_1, "d2_2": D2_2, "d2_3": D2_3,
    "d4_1": D4_1, "d4_2": D4_2,
    "d8_1": D8_1, "d8_2": D8_2, "d8_3": D8_3, "d8_4": D8_4,
}

TABLES = [
    {
        "ident": "thm:5coeffsgeneral",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 1,
        "min_n": 5,
        "polys": _POLYS,
        "basis": ("d2_1", "d2_2", "d2_3", "d4_1", "d4_2", "d8_1", "d8_2", "d8_3", "d8_4"),
        "scale": 1,
        "entries": {
            (0, 0, 0, 0, 0): [("all", (7, 4, 2, 5, 3, 2, 1, 1, 1))],
            (0, 0, 0, 1, 0): [("all", (3, 0, 2, 1, -1, -2, -1, 1, -1))],
            (0, 0, 0, 0, 1): [("all", (1, 2, -2, -3, -3, 0, 1, -1, -1))],
            (0, 0, 0, 1, 1): [("all", (-3, -2, -2, 1, 1, 0, -1, -1, 1))],
        },
    },
    {
        "ident": "5traces_wild4",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 1,
        "min_n": 5,
        "polys": _POLYS,
        "basis": ("d2_1", "d2_2", "d2_3", "d4_1", "d4_2", "d8_3"),
        "scale": 1,
        "entries": {
            (0, 0, 0, None, 0): [("all", (5, 2, 2, 3, 1, 1))],
        },
    },
]
