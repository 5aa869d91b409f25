import itertools
import random

import pytest

from irrcount import moebius as MB
from irrcount.errors import DomainError, NonIntegralResult
from irrcount.ff_core import GF
from irrcount.oracle import count_I_all, flat_index, gauss_count


def test_theta_identity_and_zero():
    assert MB.theta_d((0, 0), 1, 5) == (0, 0)
    assert MB.theta_d((0, 0, 0), 4, 5) == (0, 0, 0)
    for t in itertools.product(range(5), repeat=2):
        assert MB.theta_d(t, 1, 5) == t


def test_theta_hand_example():
    # q=5, d=2: u1 = 2 t1, u2 = 2 t2 + t1^2
    for t1, t2 in itertools.product(range(5), repeat=2):
        u = MB.theta_d((t1, t2), 2, 5)
        assert u == ((2 * t1) % 5, (2 * t2 + t1 * t1) % 5)


@pytest.mark.parametrize("q,l", [(3, 2), (5, 2), (5, 3), (7, 2)])
def test_theta_bijection(q, l):
    for d in range(1, q):
        if d % q == 0:
            continue
        imgs = {MB.theta_d(t, d, q) for t in itertools.product(range(q), repeat=l)}
        assert len(imgs) == q**l


def test_theta_domain():
    with pytest.raises(DomainError):
        MB.theta_d((0, 0, 0), 2, 3)  # l >= p


def test_I_from_F_matches_brute_q3():
    prov = MB.oracle_F_provider(3)
    for n in (2, 4, 5, 7, 8):
        alls = count_I_all(3, n, 2)
        total = 0
        for t in itertools.product(range(3), repeat=2):
            got = MB.I_from_F(3, n, t, prov)
            assert got == int(alls[flat_index(t, 3)])
            total += got
        assert total == gauss_count(3, n)


def test_I_from_F_domain():
    prov = MB.oracle_F_provider(3)
    with pytest.raises(DomainError):
        MB.I_from_F(3, 6, (0, 0), prov)  # n = 0 mod p


def test_trace_of_power_identities():
    assert MB.trace_of_power_identities(1, 3) == {(1,): 1}
    # l=4: the T1 T2 product term has coefficient 1 exactly for d = 3 mod 4
    for d in range(1, 20):
        present = (1, 2) in MB.trace_of_power_identities(4, d)
        assert present == (d % 4 == 3)


def test_trace_of_power_against_polynomials():
    # T_l(f^d) is the coefficient of x^(n-l) in f^d over F_2
    from irrcount.ff_core import _poly_mul
    from irrcount.oracle import enumerate_irreducibles

    F2 = GF(2)
    rng = random.Random(12)
    for m in (2, 3, 4, 5):
        polys = list(enumerate_irreducibles(2, m))
        for d in (2, 3, 4, 5, 6, 7):
            f = polys[rng.randrange(len(polys))]
            fd = [1]
            for _ in range(d):
                fd = _poly_mul(fd, list(f), F2)
            n = m * d
            tvec = tuple(f[m - k] if k <= m else 0 for k in range(1, 6))
            for l in range(1, 6):
                assert MB.eval_trace_power(l, d, tvec) == fd[n - l]


def test_I2_l4_matches_brute():
    prov = MB.oracle_F_provider(2)
    for n in range(4, 13):
        alls = count_I_all(2, n, 4)
        for t in itertools.product((0, 1), repeat=4):
            assert MB.I2_from_F2_l4(n, t, prov) == int(alls[flat_index(t, 2)]), (n, t)


def test_I2_l4_hand_example():
    prov = MB.oracle_F_provider(2)
    assert MB.I2_from_F2_l4(4, (0, 0, 0, 0), prov) == 0


def test_I2_l4_partition():
    prov = MB.oracle_F_provider(2)
    for n in (6, 8, 12):
        total = sum(MB.I2_from_F2_l4(n, t, prov) for t in itertools.product((0, 1), repeat=4))
        assert total == gauss_count(2, n)
