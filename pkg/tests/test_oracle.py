import itertools
import random

import pytest

from irrcount import oracle as O
from irrcount.ff_core import tower, tower_for_q
from irrcount.trace_lab import TraceSpec, trace_vector


def test_gauss_count():
    assert O.gauss_count(2, 1) == 2
    assert O.gauss_count(2, 4) == 3
    assert O.gauss_count(5, 2) == 10
    assert O.gauss_count(3, 2) == 3


def test_count_F_examples():
    t8 = tower(2, 1, 3)
    assert O.count_F_brute(t8, TraceSpec.from_tuple(2, (0, 0, 0))) == 1
    for n in (3, 5, 8):
        tw = tower(2, 1, n)
        assert O.count_F_brute(tw, TraceSpec(2, {1: 0})) == 2 ** (n - 1)
        assert O.count_F_brute(tw, TraceSpec(2, {})) == 2**n


def test_count_all_examples():
    assert list(O.count_all_F_brute(tower(3, 1, 3), 1)) == [9, 9, 9]
    tab = O.count_all_F_brute(tower(2, 1, 4), 4)
    assert len(tab) == 16 and tab.sum() == 16


@pytest.mark.parametrize("p,r,n,l", [(2, 1, 6, 4), (3, 1, 4, 3), (5, 1, 3, 3), (2, 2, 3, 2)])
def test_trace_table_matches_scalar(p, r, n, l):
    tw = tower(p, r, n)
    tab = O.trace_table(tw, l)
    rng = random.Random(11)
    for _ in range(20):
        a = rng.randrange(tw.order)
        assert tuple(int(x) for x in tab[a]) == trace_vector(tw, a, l)


def test_table_sums():
    for (p, r, n, l) in [(2, 1, 7, 3), (3, 1, 4, 2), (5, 1, 3, 2), (2, 2, 3, 2)]:
        tw = tower(p, r, n)
        assert int(O.count_all_F_brute(tw, l).sum()) == tw.order


def test_enumerate_irreducibles_small():
    assert list(O.enumerate_irreducibles(2, 2)) == [(1, 1, 1)]
    quartics = set(O.enumerate_irreducibles(2, 4))
    assert quartics == {(1, 1, 0, 0, 1), (1, 0, 0, 1, 1), (1, 1, 1, 1, 1)}
    assert len(list(O.enumerate_irreducibles(3, 2))) == 3


@pytest.mark.parametrize("q,n", [(2, 8), (2, 12), (3, 5), (4, 4), (5, 4)])
def test_enumeration_count_is_gauss(q, n):
    assert sum(1 for _ in O.enumerate_irreducibles(q, n)) == O.gauss_count(q, n)


def test_element_path_matches_poly_path(monkeypatch):
    import irrcount.oracle as om

    small = sorted(O.enumerate_irreducibles(5, 3))
    monkeypatch.setattr(om, "_POLY_ENUM_LIMIT", 4)  # force the element path
    big = sorted(O.enumerate_irreducibles(5, 3))
    assert small == big
    for poly in big[:10]:
        from irrcount.ff_core import GF, is_irreducible

        assert is_irreducible(poly, GF(5))


def test_count_I_examples():
    assert O.count_I_brute(2, 4, (0, 0, 0, 0)) == 0
    assert O.count_I_brute(2, 4, (0, 0, 1, 1)) == 1  # x^4 + x + 1
    # partition: sum over all t equals the Gauss count
    for (q, n, l) in [(2, 6, 3), (3, 4, 2), (5, 3, 2), (4, 3, 2)]:
        alls = O.count_I_all(q, n, l)
        assert int(alls.sum()) == O.gauss_count(q, n)
        for t in itertools.islice(itertools.product(range(q), repeat=l), 5):
            assert alls[O.flat_index(t, q)] == O.count_I_brute(q, n, t)


def test_subfield_level_extension():
    # F_q(m, t) with positions past m: zero traces beyond the field degree
    tw = tower(5, 1, 1)
    assert O.count_F_brute(tw, TraceSpec.from_tuple(5, (2, 0))) == 1
    assert O.count_F_brute(tw, TraceSpec.from_tuple(5, (2, 1))) == 0


def test_jobs_chunking_invariance():
    tw = tower(2, 1, 9)
    spec = TraceSpec(2, {1: 0, 2: 1})
    assert O.count_F_brute(tw, spec, jobs=1) == O.count_F_brute(tw, spec, jobs=5)
