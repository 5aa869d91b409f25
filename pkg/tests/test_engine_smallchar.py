import itertools
import random

import pytest

from irrcount import engine_smallchar as ES
from irrcount.errors import DomainError, ValidityError
from irrcount.ff_core import tower
from irrcount.oracle import count_all_F_brute, flat_index
from irrcount.trace_lab import trace_vector


def test_V_counts_basics():
    for n in (3, 5, 7):
        assert ES.V_count_char2(1, (1,), n) == 2 ** (n - 1)
        assert ES.V_count_char2(0, (1, 2, 3), n) == 2**n


def test_V_count_matches_bruteforce():
    # V(i . f) counted by the curve systems equals the direct zero count
    rng = random.Random(2)
    for n in (5, 7):
        tw = tower(2, 1, n)
        from irrcount.oracle import trace_table

        tab = trace_table(tw, 5)
        for i in (3, 9, 17, 21, 30):
            acc = None
            for k in range(5):
                if (i >> k) & 1:
                    col = tab[:, k]
                    acc = col.copy() if acc is None else acc ^ col
            want = int((acc == 0).sum())
            assert ES.V_count_char2(i, (1, 2, 3, 4, 5), n) == want, (n, i)


def test_alt_param_agrees():
    for n in (5, 7):
        for i in (8, 12, 24, 31):
            a = ES.V_count_char2(i, (1, 2, 3, 4, 5), n, "primary")
            b = ES.V_count_char2(i, (1, 2, 3, 4, 5), n, "alt")
            assert a == b, (n, i)


def test_build_system_shapes():
    # single equation for i = (1,0,0) on positions {1,2,3}
    sysm = ES.build_system_char2((1, 2, 3), 4, (0,), 7)
    assert len(sysm.equations) == 1 and sysm.s == 1
    # alternative parameterisation for l <= 4: one defining + one final
    sysm = ES.build_system_char2((1, 2, 3, 4), 8, (0, 1), 7, "alt")
    assert len(sysm.equations) == 2 and sysm.s == 2
    # i = 0: no equations
    assert ES.build_system_char2((1, 2, 3), 0, (0,), 7).equations == ()
    with pytest.raises(DomainError):
        ES.build_system_char2((1, 8), 1, (0,), 7)
    with pytest.raises(DomainError):
        ES.build_system_char2((6,), 1, (0,), 7, "alt")


@pytest.mark.parametrize("l", [1, 2, 3, 4, 5])
def test_pipeline_small_l(l):
    for n in (5, 7):
        got = ES.F_smallchar_counts(2, l, n)
        want = count_all_F_brute(tower(2, 1, n), l)
        assert (got == want).all()


def test_pipeline_l67_small_n():
    for l in (6, 7):
        got = ES.F_smallchar_counts(2, l, 7)
        want = count_all_F_brute(tower(2, 1, 7), l)
        assert (got == want).all()


def test_pipeline_char3():
    for n in (4, 5):
        got = ES.F_smallchar_counts(3, 3, n)
        want = count_all_F_brute(tower(3, 1, n), 3)
        assert (got == want).all()
    with pytest.raises(DomainError):
        ES.F_smallchar_counts(3, 3, 6)
    with pytest.raises(DomainError):
        ES.F_smallchar_counts(3, 2, 4)


def test_direct_count_char3():
    tab = count_all_F_brute(tower(3, 1, 4), 3)
    rng = random.Random(8)
    for _ in range(5):
        t = tuple(rng.randrange(3) for _ in range(3))
        assert ES.direct_count_char3(t, 4) == int(tab[flat_index(t, 3)])


def test_general_counts_all_n():
    for n in (4, 6, 9):
        got = ES.general_l4_counts(n)
        tab = count_all_F_brute(tower(2, 1, n), 4)
        for t, v in got.items():
            assert v == int(tab[flat_index(t, 2)])
    for n in (5, 6, 8):
        got = ES.general_l5_counts(n)
        tab = count_all_F_brute(tower(2, 1, n), 5)
        for t, v in got.items():
            assert v == int(tab[flat_index(t, 2)])


def test_paper_table_lookup():
    tab = ES.paper_table("thm:3traces")
    assert ES.eval_paper_formula(tab, (0, 0, 0), 3) == 1
    with pytest.raises(ValidityError):
        tab.formula((0, 0, 0), 4)  # even n not covered
    with pytest.raises(DomainError):
        ES.paper_table("thm:unknown")
    assert "thm:q5l4" in ES.table_names()


def test_table_checksums():
    # transcription checksums: named constant terms and the 6880-root total
    t4 = ES.paper_table("thm:4traces")
    assert t4.polys["d8_1"][-1] == 16
    c3 = ES.paper_table("char3_3traces_new")
    assert c3.polys["e12_4"][-1] == 729
    from irrcount.tables.q5l4 import BASIS, POLYS, _COEFFS

    assert sum(_COEFFS[nm] * len(POLYS[nm]) for nm in BASIS) == 6880


def test_tables_sum_to_field_size():
    # each residue class: sum over t of F(n, t) = q^n (catches typos cheaply)
    for ident, q, l, ns in [
        ("thm:3traces", 2, 3, (5, 7)),
        ("thm:4traces", 2, 4, (9, 11)),
        ("thm:5traces", 2, 5, (13, 15)),
        ("char3_3traces", 3, 3, (4, 5, 7, 8)),
        ("char3_3traces_new", 3, 3, (4, 5, 7, 8)),
    ]:
        tab = ES.paper_table(ident)
        for n in ns:
            total = sum(ES.eval_paper_formula(tab, t, n)
                        for t in itertools.product(range(q), repeat=l))
            assert total == q**n, (ident, n)


def test_marginal_consistency_5_to_4():
    # sum over t5 of the five-trace table equals the four-trace table
    t5 = ES.paper_table("thm:5traces")
    t4 = ES.paper_table("thm:4traces")
    for n in (5, 7, 9, 11, 13):
        for t in itertools.product((0, 1), repeat=4):
            s = sum(ES.eval_paper_formula(t5, t + (b,), n) for b in (0, 1))
            assert s == ES.eval_paper_formula(t4, t, n), (t, n)


def test_root_identities():
    from irrcount.tables.char3 import POLYS, ROOT_IDENTITIES

    for names, coeffs, modulus, classes in ROOT_IDENTITIES:
        polys = [POLYS[nm] for nm in names]
        assert ES.root_identity_check(polys, coeffs, modulus, classes, 200)
    # zero combination is trivially an identity
    assert ES.root_identity_check([(2, 2)], [0], 1, (0,), 50)
    # a non-identity fails fast
    assert not ES.root_identity_check([(2, 2)], [1], 1, (0,), 50)


def test_kloosterman_basics():
    assert ES.kloosterman(1, 1) == 2
    with pytest.raises(DomainError):
        ES.kloosterman(5, 0)
    tw = tower(2, 1, 6)
    for a in range(1, 40):
        K = ES.kloosterman(6, a)
        assert K % 4 == 0
        assert ((2**6 + K) % 8 == 0) == (trace_vector(tw, a, 1)[0] == 0)


def test_kloosterman_congruences():
    rng = random.Random(4)
    for n in (6, 9):
        for _ in range(30):
            a = rng.randrange(1, 2**n)
            K = ES.kloosterman(n, a)
            assert K % 32 == ES.kloosterman_congruence(n, a, 32)
            assert K % 64 == ES.kloosterman_congruence(n, a, 64)
    with pytest.raises(DomainError):
        ES.kloosterman_congruence(3, 1, 32)
    with pytest.raises(DomainError):
        ES.kloosterman_congruence(5, 1, 64)


def test_kloosterman_zero_counts():
    assert ES.count_kloosterman_zero_mod32(5) == 6
    assert ES.count_kloosterman_zero_mod32(10) == 126
    with pytest.raises(DomainError):
        ES.count_kloosterman_zero_mod32(4)


def test_kloosterman_distribution_row():
    assert ES.kloosterman_distribution(8) == [255, 255, 127, 55, 21, 16, 16, 16]
