"""F_2(n, 0, 0, t3, t4) for ALL n >= 4, plus the mod-32 Kloosterman-zero
count F_2(n, 0, 0, *, 0); basis extends by d2_2 = X^2 + 2."""

D2_1 = (2, 2)
D2_2 = (0, 2)
D4_1 = (2, 2, 4, 4)
D8_1 = (4, 6, 4, 2, 8, 24, 32, 16)
D8_2 = (0, 2, 4, 2, 8, 8, 0, 16)

_POLYS = {"d2_1": D2_1, "d2_2": D2_2, "d4_1": D4_1, "d8_1": D8_1, "d8_2": D8_2}

TABLES = [
    {
        "ident": "thm:4coeffsgeneral",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 1,
        "min_n": 4,
        "polys": _POLYS,
        "basis": ("d2_1", "d2_2", "d4_1", "d8_1", "d8_2"),
        "scale": 1,
        "entries": {
            (0, 0, 0, 0): [("all", (4, 3, 1, 1, 1))],
            (0, 0, 0, 1): [("all", (0, -1, 1, -1, -1))],
            (0, 0, 1, 0): [("all", (-2, 1, -1, 1, -1))],
            (0, 0, 1, 1): [("all", (2, -3, -1, -1, 1))],
        },
    },
    {
        "ident": "kloosterman_mod32",
        "q": 2,
        "p": 2,
        "r": 1,
        "modulus": 1,
        "min_n": 4,
        "polys": _POLYS,
        "basis": ("d2_1", "d2_2", "d8_1"),
        "scale": 1,
        "entries": {
            (0, 0, None, 0): [("all", (1, 2, 1))],
        },
    },
]
