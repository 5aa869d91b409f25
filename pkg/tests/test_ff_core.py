import random

import numpy as np
import pytest

from irrcount import config
from irrcount.errors import BudgetExceeded
from irrcount.ff_core import (
    GF,
    FieldElement,
    find_irreducible,
    is_irreducible,
    poly_key,
    solve_linear_mod_p,
    tower,
    tower_for_q,
)


def test_find_irreducible_examples():
    assert find_irreducible(GF(2), 1) == (0, 1)
    assert find_irreducible(GF(2), 2) == (1, 1, 1)
    assert find_irreducible(GF(3), 2) == (1, 0, 1)


def test_is_irreducible_examples():
    assert not is_irreducible((1, 0, 1), GF(2))          # (x+1)^2
    assert is_irreducible((1, 1, 1), GF(2))
    assert is_irreducible((1, 1, 0, 0, 1), GF(2))        # x^4 + x + 1


@pytest.mark.parametrize("q,deg", [(2, 4), (2, 6), (3, 3), (5, 2), (4, 2)])
def test_canonical_modulus_is_least(q, deg):
    field = GF(q) if q in (2, 3, 5) else GF(2, 2)
    best = find_irreducible(field, deg)
    # every lexicographically smaller monic polynomial fails the test
    import itertools

    for tail in itertools.product(range(field.order), repeat=deg):
        poly = tuple(tail) + (1,)
        if poly_key(poly) >= poly_key(best):
            break
        if poly[0] == 0:
            continue
        assert not is_irreducible(poly, field), poly


def test_frobenius_in_F4():
    t = tower(2, 1, 2)
    assert t.frobenius(3, 1) == 2   # (1+g)^2 = g
    assert t.frobenius(3, 0) == 3
    assert t.frobenius(3, 2) == 3


@pytest.mark.parametrize("p,r,n", [(2, 1, 5), (3, 1, 3), (5, 1, 3), (2, 2, 2), (3, 2, 2), (7, 1, 2)])
def test_multiplicative_structure(p, r, n):
    t = tower(p, r, n)
    rng = random.Random(1)
    for _ in range(12):
        a = rng.randrange(1, t.order)
        assert t.field.pow(a, t.order - 1) == 1
        assert t.field.mul(a, t.field.inv(a)) == 1
        assert t.field.pow(a, t.q**n) == a  # Frobenius closure


def test_enumerate_elements():
    t = tower(2, 1, 2)
    elems = list(t.enumerate_elements())
    assert len(elems) == 4 and elems[0].idx == 0
    assert len(set(e.idx for e in elems)) == 4
    t8 = tower(2, 1, 3)
    assert next(iter(t8.enumerate_elements())).idx == 0
    assert len(list(tower(3, 1, 4).enumerate_elements())) == 81


def test_enumeration_budget():
    config.set_budget(100)
    try:
        with pytest.raises(BudgetExceeded):
            list(tower(2, 1, 10).enumerate_elements())
    finally:
        config.set_budget(None)


def test_field_element_operators():
    t = tower(3, 1, 2)
    a = t.element(5)
    b = t.element(7)
    assert (a + b - b) == a
    assert (a * b / b) == a
    assert (-a + a).idx == 0
    assert a**2 == a * a
    assert a.inverse() * a == t.one()


@pytest.mark.parametrize("p,r,n", [(2, 1, 6), (3, 1, 4), (5, 1, 3), (7, 1, 2), (2, 2, 2), (3, 2, 2)])
def test_bulk_matches_scalar(p, r, n):
    t = tower(p, r, n)
    b = t.bulk()
    rng = random.Random(7)
    A = np.array([rng.randrange(t.order) for _ in range(40)], dtype=np.int64)
    B = np.array([rng.randrange(t.order) for _ in range(40)], dtype=np.int64)
    am, aa = b.mul(A, B), b.add(A, B)
    for i in range(40):
        assert am[i] == t.field.mul(int(A[i]), int(B[i]))
        assert aa[i] == t.field.add(int(A[i]), int(B[i]))
    P3 = b.power_map(3)
    TA, TR, FQ = b.trace_abs_table(), b.trace_rel_table(), b.frob_q_map(1)
    for i in range(min(30, t.order)):
        assert P3[i] == t.field.pow(i, 3)
        assert int(TA[i]) == t.trace_abs(i)
        assert int(TR[i]) == t.trace_rel(i)
        assert int(FQ[i]) == t.frobenius(i, 1)


@pytest.mark.parametrize("p,r,n", [(2, 1, 5), (2, 1, 6), (3, 1, 3), (5, 1, 2), (2, 2, 2), (3, 2, 2)])
def test_artin_schreier_roots(p, r, n):
    t = tower(p, r, n)
    b = t.bulk()
    AR = b.as_root_table("p")
    AQ = b.as_root_table("q")
    for c in range(t.order):
        if t.trace_abs(c) == 0:
            y = int(AR[c])
            assert t.field.sub(t.field.pow(y, p), y) == c
        if t.trace_rel(c) == 0:
            y = int(AQ[c])
            assert t.field.sub(t.field.pow(y, t.q), y) == c


def test_trace_balance():
    from collections import Counter

    t = tower(3, 2, 2)  # F_81 over F_9
    rel = Counter(t.trace_rel(i) for i in range(81))
    assert len(rel) == 9 and all(v == 9 for v in rel.values())
    ab = Counter(t.trace_abs(i) for i in range(81))
    assert all(v == 27 for v in ab.values())


def test_solve_linear_mod_p():
    A = [[1, 2], [3, 4]]
    x = solve_linear_mod_p(A, [1, 0], 5)
    assert [(r[0] * x[0] + r[1] * x[1]) % 5 for r in A] == [1, 0]
    # inconsistent system
    assert solve_linear_mod_p([[1, 1], [2, 2]], [1, 1], 5) is None


def test_tower_for_q():
    assert tower_for_q(8, 2).p == 2 and tower_for_q(8, 2).r == 3
    assert tower_for_q(9, 1).q == 9
