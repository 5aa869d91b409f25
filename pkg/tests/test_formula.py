import math
from fractions import Fraction

import pytest

from irrcount import formula as F
from irrcount.errors import NonIntegralResult, ParseError, ValidityError
from irrcount.engine_smallchar import paper_table


def _simple_formula():
    # F(n) = (2^n - 2 rho_n(d21) - rho_n(d41)) / 8, valid n odd >= 3
    return F.CountFormula(
        2, 2, 1, 3,
        F.canonical_terms([(Fraction(-2), (2, 2)), (Fraction(-1), (2, 2, 4, 4))]),
        F.Validity(2, (1,), 3),
    )


def test_eval_example():
    f = _simple_formula()
    assert f.eval(3) == 1  # F_2(3, 0, 0, 0)


def test_eval_validity():
    f = _simple_formula()
    with pytest.raises(ValidityError):
        f.eval(4)
    with pytest.raises(ValidityError):
        f.eval(1)


def test_empty_formula_is_power():
    f = F.CountFormula(3, 3, 1, 0, (), F.Validity())
    assert f.eval(5) == 3**5


def test_non_integral_detection():
    f = F.CountFormula(2, 2, 1, 3, F.canonical_terms([(Fraction(1), (1,))]), F.Validity())
    with pytest.raises(NonIntegralResult):
        f.eval(3)


def test_merge_linearity():
    f = _simple_formula()
    g = F.CountFormula(
        2, 2, 1, 3,
        F.canonical_terms([(Fraction(2), (2, 2)), (Fraction(-1), (0, 2))]),
        F.Validity(2, (1,), 3),
    )
    m = f.merged_with(g)
    for n in (3, 5, 7, 9):
        assert m.eval(n) * 8 - 2**n == (f.eval(n) * 8 - 2**n) + (g.eval(n) * 8 - 2**n)


def test_serialize_round_trip():
    f = _simple_formula()
    text = F.serialize(f)
    g = F.parse(text)
    assert g == f
    assert F.serialize(g) == text  # canonical form is a fixed point
    fs = F.FormulaSet(2, 2, 1, 3, 1, {(0, 0, 0): f})
    fs2 = F.parse_set(F.serialize_set(fs))
    assert fs2.formulas[(0, 0, 0)] == f
    assert fs2.q == 2 and fs2.nbar == 1


def test_serialization_deterministic():
    f = _simple_formula()
    assert F.serialize(f) == F.serialize(_simple_formula())
    assert " " not in F.serialize(f)


def test_parse_errors():
    with pytest.raises(ParseError):
        F.parse("not json")
    with pytest.raises(ParseError):
        F.parse("[1,2]")
    with pytest.raises(ParseError):
        F.parse('{"q":2,"p":2,"r":1,"divisor_exp":3,"validity":{"modulus":2,"classes":[1],"min_n":3},"terms":[{"num":"1","den":"1","poly":[]}]}')
    with pytest.raises(ParseError):
        F.parse('{"q":2}')


def test_built_in_tables_round_trip():
    # every built-in table formula survives serialize/parse unchanged
    from irrcount.engine_smallchar import table_names

    for name in table_names():
        tab = paper_table(name)
        for t in tab.t_keys():
            for classes, vec in tab.entries[t]:
                n = tab.min_n
                while not (classes == "all" or n % tab.modulus in classes):
                    n += 1
                f = tab.formula(t, n)
                assert F.parse(F.serialize(f)) == f


def test_shipped_4traces_contains_d82():
    tab = paper_table("thm:4traces")
    f = tab.formula((0, 0, 0, 0), 5)
    polys = {poly for _, poly in f.terms}
    assert (0, 2, 4, 2, 8, 8, 0, 16) in polys  # X^8+2X^6+4X^5+2X^4+8X^3+8X^2+16


def test_norm_bound():
    # |eval(n) q^l - q^n| <= (sum |coef| deg) * q^(n/2), squared-exact
    from irrcount.engine_smallchar import table_names

    for name in ("thm:3traces", "thm:4coeffsgeneral", "char3_3traces_new", "thm:q5l4"):
        tab = paper_table(name)
        for t in tab.t_keys():
            for classes, vec in tab.entries[t]:
                nmax = 60
                for n in range(tab.min_n, nmax):
                    if not (classes == "all" or n % tab.modulus in classes):
                        continue
                    f = tab.formula(t, n)
                    bound = sum(abs(c) * len(p) for c, p in f.terms)
                    lhs = abs(f.eval(n) * tab.q**f.divisor_exp - tab.q**n)
                    assert lhs * lhs <= bound * bound * tab.q**n
