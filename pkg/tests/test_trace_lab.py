import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irrcount import trace_lab as TL
from irrcount.errors import DomainError
from irrcount.ff_core import GF, tower


def test_char_poly_examples():
    t8 = tower(2, 1, 3)
    assert TL.char_poly(t8, 0) == (0, 0, 0, 1)               # x^n
    t16 = tower(2, 1, 4)
    assert TL.trace_vector(t16, 1, 4) == (0, 0, 0, 1)        # binom(4, l) mod 2
    # min poly of a degree-n element equals its characteristic polynomial
    roots = [a for a in range(8) if TL.char_poly(t8, a) == (1, 1, 0, 1)]
    assert len(roots) == 3
    # norm of any nonzero element of F_8 is 1
    for a in range(1, 8):
        assert TL.trace_vector(t8, a, 3)[2] == 1


def test_power_trace():
    t8 = tower(2, 1, 3)
    assert TL.power_trace(t8, 0, 5) == 0
    for a in range(8):
        assert TL.power_trace(t8, a, 1) == t8.trace_rel(a)
        # char 2: T_1(a^2) = T_1(a)^2 = T_1(a)
        assert TL.power_trace(t8, a, 2) == TL.power_trace(t8, a, 1)


@pytest.mark.parametrize("p,r,n", [(2, 1, 5), (3, 1, 4), (5, 1, 3), (2, 2, 3)])
def test_trace_vector_is_elementary_symmetric(p, r, n):
    tw = tower(p, r, n)
    fld = tw.field
    rng = random.Random(3)
    for _ in range(8):
        a = rng.randrange(tw.order)
        conj = [a]
        for _ in range(n - 1):
            conj.append(tw.frobenius(conj[-1], 1))
        for l in range(1, n + 1):
            e = 0
            for sub in itertools.combinations(conj, l):
                prod = 1
                for c in sub:
                    prod = fld.mul(prod, c)
                e = fld.add(e, prod)
            assert e == TL.trace_vector(tw, a, l)[l - 1]


def test_newton_examples():
    F5 = GF(5)
    # p_1 = t_1, p_2 = t_1^2 - 2 t_2, p_3 = 3 t_3 + t_1^3 - 3 t_1 t_2
    for t in itertools.product(range(5), repeat=3):
        t1, t2, t3 = t
        fwd = TL.newton_forward(t, F5)
        assert fwd[0] == t1
        assert fwd[1] == (t1 * t1 - 2 * t2) % 5
        assert fwd[2] == (3 * t3 + t1**3 - 3 * t1 * t2) % 5
    assert TL.newton_inverse((0, 0, 0, 0), F5) == (0, 0, 0, 0)
    t = TL.newton_inverse((1, 0, 0, 0), F5)
    assert t[0] == 1 and t[1] == 3  # t_2 = t_1^2 / 2 = 3 mod 5


@pytest.mark.parametrize("q", [3, 5, 7])
def test_newton_round_trip_exhaustive(q):
    field = GF(q)
    l = min(q - 1, 3)
    for t in itertools.product(range(q), repeat=l):
        assert TL.newton_inverse(TL.newton_forward(t, field), field) == t


def test_newton_domain_error():
    with pytest.raises(DomainError):
        TL.newton_forward((0, 0, 0), GF(3))


@given(st.integers(0, 300), st.integers(0, 12), st.sampled_from([2, 3, 5, 7]))
@settings(max_examples=150, deadline=None)
def test_binom_mod_p(n, k, p):
    assert TL.binom_mod_p(n, k, p) == math.comb(n, k) % p


def test_binom_period():
    assert TL.binom_period(3, 2) == 4
    assert TL.binom_period(2, 3) == 3
    assert TL.binom_period(8, 2) == 16
    # the vector (binom(n, j), ..., binom(n, 1)) mod p is periodic with that period
    for p, j in [(2, 3), (2, 5), (3, 3)]:
        period = TL.binom_period(j, p)
        for n in range(0, 3 * period):
            for k in range(1, j + 1):
                assert TL.binom_mod_p(n, k, p) == TL.binom_mod_p(n + period, k, p)
    # (1,1,1) pattern for n = 3 mod 4
    for n in (3, 7, 11, 19):
        assert tuple(TL.binom_mod_p(n, k, 2) for k in (3, 2, 1)) == (1, 1, 1)


def _aux_char2(tw, a0, param, flip, rng):
    fld = tw.field
    spec = {"primary": (("a1", (1,)), ("a2", (3,)), ("a3", (5,))),
            "alt": (("a1", (3, 1)), ("a2", (5, 1)))}[param]
    out = {}
    for k, (v, pows) in enumerate(spec):
        base = 0
        for e in pows:
            base = fld.add(base, fld.pow(a0, e))
        rv = tw.trace_abs(base)
        y = tw.as_root(fld.sub(base, rv), "p")
        if (flip >> k) & 1:
            y = fld.add(y, 1)
        out[v] = y
        out[f"r{v[1]}"] = rv
    return out


@pytest.mark.parametrize("n", [7, 9, 11, 13, 15])
def test_lowered_trace_char2(n):
    tw = tower(2, 1, n)
    fld = tw.field
    rng = random.Random(n)
    draws = 60 if n > 9 else 150
    for l in range(1, 8):
        for param in ("primary", "alt"):
            if l not in TL.CHAR2_AUX[param]:
                continue
            for _ in range(draws):
                a0 = rng.randrange(tw.order)
                r0 = rng.randrange(2)
                aux = _aux_char2(tw, a0, param, rng.randrange(8), rng)
                elt = fld.add(fld.add(fld.mul(a0, a0), a0), r0)
                direct = TL.trace_vector(tw, elt, l)[l - 1]
                assert direct == TL.lowered_trace_char2(l, a0, r0, aux, n, tw, param)


def test_lowered_trace_char2_errors():
    tw = tower(2, 1, 7)
    with pytest.raises(DomainError):
        TL.lowered_trace_char2(8, 0, 0, {}, 7, tw)
    with pytest.raises(DomainError):
        TL.lowered_trace_char2(4, 0, 0, {}, 7, tw)  # missing aux


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_lowered_trace_char3(n):
    tw = tower(3, 1, n)
    fld = tw.field
    rng = random.Random(n)
    universe = range(tw.order) if n <= 5 else [rng.randrange(tw.order) for _ in range(120)]
    for l in (1, 2, 3):
        for a0 in universe:
            for r0 in (0, 1, 2):
                elt = fld.add(fld.sub(fld.pow(a0, 3), a0), r0)
                direct = TL.trace_vector(tw, elt, l)[l - 1]
                assert direct == TL.lowered_trace_char3(l, a0, r0, n % 9, tw)


def test_lowered_trace_char3_domain():
    tw = tower(3, 1, 4)
    with pytest.raises(DomainError):
        TL.lowered_trace_char3(2, 0, 1, 0, tw)  # n = 0 mod 3 with r0 != 0
    assert TL.lowered_trace_char3(1, 0, 0, 0, tw) == 0  # r0 = 0 is fine


def test_trace_spec():
    s = TL.TraceSpec(2, {1: 0, 3: 1})
    assert s.positions == (1, 3) and s.max_position == 3
    assert s.matches((0, 1, 1))
    assert not s.matches((1, 1, 1))
    assert s.matches((0, 0, 1, 0))
    s2 = TL.TraceSpec.from_tuple(3, (1, None, 2))
    assert s2.positions == (1, 3)
    # positions beyond the vector length match zero
    assert TL.TraceSpec(2, {5: 0}).matches((1, 1))
    assert not TL.TraceSpec(2, {5: 1}).matches((1, 1))
