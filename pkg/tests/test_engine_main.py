import itertools
from fractions import Fraction

import pytest

from irrcount import engine_main as EM
from irrcount.artin_schreier import affine_count_system
from irrcount.errors import DomainError
from irrcount.ff_core import GF, tower
from irrcount.oracle import count_all_F_brute, flat_index
from irrcount.transforms import _dot_tables


def test_build_indicator_poly():
    # q=5, i with only i_0 = 1, nbar = 1: f = -1 + a
    f = EM.build_indicator_poly(1, 1, 5)
    assert f == (4, 1)
    # i with top digit at position 3 gives degree 4
    f = EM.build_indicator_poly(5**3, 2, 5)
    assert len(f) - 1 == 4
    # digit counts: exactly (q-1) q^(d-1) indices of degree d
    for q, l in [(3, 2), (5, 2)]:
        from collections import Counter

        deg = Counter(len(EM.build_indicator_poly(i, 1, q)) - 1 for i in range(1, q**l))
        assert deg == {d: (q - 1) * q ** (d - 1) for d in range(1, l + 1)}


def test_q3_l2_derivation_matches_oracle():
    for nbar in (1, 2):
        fs, rep = EM.derive_formula_set_with_report(3, 2, nbar)
        assert rep.total_root_count == 9 * (3 * 2 - 3 - 2) + 3 == 12
        ns = [n for n in range(2, 9) if n % 3 == nbar]
        assert EM.verify_formula_set(fs, ns).ok
        # sum rule at five class values, beyond oracle range
        for n in [nbar + 3 * k for k in range(1, 6)]:
            assert sum(f.eval(n) for f in fs.formulas.values()) == 3**n


def test_upsilon_index_pattern():
    # paper: q^(l-1) indices pair with -1 (i.t = 1), q^(l-1) - 1 with +1
    for (q, l) in [(3, 2), (5, 2), (2, 3)]:
        dot = _dot_tables(q, l)
        for j in range(1, q**l):
            ones = sum(1 for i in range(1, q**l) if dot[i][j] == 1)
            zeros = sum(1 for i in range(1, q**l) if dot[i][j] == 0)
            assert ones == q ** (l - 1)
            assert zeros == q ** (l - 1) - 1


def test_asymptotic_bound():
    fs, rep = EM.derive_formula_set_with_report(3, 2, 1)
    N = rep.total_root_count
    for t, f in fs.formulas.items():
        for n in (4, 7, 10, 13):
            lhs = abs(f.eval(n) * 9 - 3**n)
            assert lhs * lhs <= N * N * 3**n


def test_nonnegative_integer_values():
    fs = EM.derive_formula_set(3, 2, 2)
    for t, f in fs.formulas.items():
        for n in (2, 5, 8, 11, 14):
            assert f.eval(n) >= 0


def test_direct_method_q3():
    tab = count_all_F_brute(tower(3, 1, 4), 2)
    for t in itertools.product(range(3), repeat=2):
        assert EM.direct_count_F(3, 2, t, 1, 4) == int(tab[flat_index(t, 3)])


def test_direct_t0_valid_all_n():
    sys0 = EM.build_direct_system(3, 2, (0, 0), 1)
    # no constant shifts in the t' = 0 system
    for eq in sys0.equations:
        assert all(m != () for m in eq.rhs)
    for n in (2, 3, 4, 6):
        cnt = affine_count_system(sys0, n)
        assert cnt % 9 == 0
        assert cnt // 9 == int(count_all_F_brute(tower(3, 1, n), 2)[0])


def test_domain_errors():
    with pytest.raises(DomainError):
        EM.derive_formula_set(3, 3, 1)  # l >= p
    with pytest.raises(DomainError):
        EM.derive_formula_set(3, 2, 3)  # nbar = 0 mod p
    with pytest.raises(DomainError):
        EM.build_indicator_poly(0, 1, 5)


def test_r_greater_one():
    fs, rep = EM.derive_formula_set_with_report(4, 1, 1)
    assert EM.verify_formula_set(fs, [1, 3, 5]).ok
    fs9, rep9 = EM.derive_formula_set_with_report(9, 2, 2)
    assert rep9.total_root_count == (81 * (9 * 2 - 9 - 2) + 9) * 2
    assert EM.verify_formula_set(fs9, [2]).ok
    for n in (5, 8, 11):
        assert sum(f.eval(n) for f in fs9.formulas.values()) == 9**n


def test_verify_report_shape():
    fs = EM.derive_formula_set(3, 2, 1)
    rep = EM.verify_formula_set(fs, [4])
    assert rep.checked == 9 and rep.ok
    with pytest.raises(DomainError):
        EM.verify_formula_set(fs, [5])  # wrong residue class
