"""Transforms between prescribed-trace counts F and prescribed-coefficient
irreducible counts I: the generic l < p Moebius inversion through the
theta_d twist, and the binary four-coefficient transform with its
trace-of-power identities.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import DomainError, NonIntegralResult
from .ff_core import GF, tower_for_q
from .trace_lab import binom_mod_p


def _mobius(m: int) -> int:
    out = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    if m > 1:
        out = -out
    return out


def _compositions(k):
    """All (nu_1, ..., nu_k) >= 0 with sum j*nu_j = k."""
    def rec(rem, j):
        if j == 0:
            if rem == 0:
                yield ()
            return
        for nu in range(rem // j + 1):
            for tail in rec(rem - j * nu, j - 1):
                yield tail + (nu,)
    yield from rec(k, k)


def theta_d(t, d: int, q: int):
    """The twist of a trace vector induced by raising polynomials to the
    d-th power: u_k = sum over nu with sum j nu_j = k of
    d^(falling sum nu) * prod t_j^nu_j / nu_j!, in F_q."""
    tw1 = tower_for_q(q, 1)
    p = tw1.p
    l = len(t)
    if l >= p:
        raise DomainError("theta_d needs l < p")
    if d < 1:
        raise DomainError("d must be >= 1")
    base = tw1.base
    out = []
    for k in range(1, l + 1):
        acc = 0
        for nu in _compositions(k):
            m = sum(nu)
            fall = 1
            for j in range(m):
                fall = fall * (d - j) % p
            if fall == 0:
                continue
            coef = fall
            term = tw1.embed_prime(coef)
            for j, nuj in enumerate(nu, start=1):
                if nuj:
                    term = base.mul(term, base.pow(t[j - 1], nuj))
                    term = base.mul(term, tw1.embed_prime(pow(math.factorial(nuj), -1, p)))
            acc = base.add(acc, term)
        out.append(acc)
    return tuple(out)


def I_from_F(q: int, n: int, t, F_provider) -> int:
    """I_q(n, t) = (1/n) sum over d | n of mu(d) F_q(n/d, theta_{d^-1}(t)),
    for l < p and n coprime to p.

    F_provider(m, t_tuple) must return F_q(m, t) including subfield levels
    m < l (where trace positions beyond m are identically zero).
    """
    tw1 = tower_for_q(q, 1)
    p = tw1.p
    if n % p == 0:
        raise DomainError("n must be coprime to p")
    t = tuple(t)
    total = 0
    zero = all(x == 0 for x in t)
    for d in range(1, n + 1):
        if n % d:
            continue
        mu = _mobius(d)
        if mu == 0:
            continue
        # p never divides d since p does not divide n, so the printed
        # [pd | n] correction of the t = 0 branch is identically zero
        if zero:
            assert n % (p * d) != 0
            total += mu * F_provider(n // d, t)
        else:
            dinv = pow(d % p, -1, p)
            total += mu * F_provider(n // d, theta_d(t, dinv, q))
    if total % n:
        raise NonIntegralResult(f"I_q({n}, {t}) sum {total} not divisible by {n}")
    if total < 0:
        raise NonIntegralResult(f"I_q({n}, {t}) came out negative")
    return total // n


def oracle_F_provider(q: int):
    from .ff_core import tower_for_q as _tfq
    from .oracle import count_F_brute
    from .trace_lab import TraceSpec

    def provider(m, t):
        tw = _tfq(q, m)
        return count_F_brute(tw, TraceSpec.from_tuple(q, t))

    return provider


# ---------------------------------------------------------------------------
# binary trace-of-power identities (q = 2, l <= 5)


def trace_of_power_identities(l: int, d: int):
    """T_l(f^d) over F_2 as {monomial: bit} in the traces of f, where a
    monomial is a sorted tuple of trace indices (e.g. (1, 2) = T_1 T_2)."""
    if not 1 <= l <= 5:
        raise DomainError("identities available for l <= 5")
    B = {k: binom_mod_p(d, k, 2) for k in (1, 2, 3, 4, 5)}
    dmod = d % 2
    out = {}

    def put(mono_, bit):
        if bit % 2:
            out[mono_] = out.get(mono_, 0) ^ 1
            if not out[mono_]:
                del out[mono_]

    if l == 1:
        put((1,), dmod)
    elif l == 2:
        put((1,), B[2])
        put((2,), dmod)
    elif l == 3:
        put((1,), B[3])
        put((3,), dmod)
    elif l == 4:
        put((1,), B[4])
        put((2,), B[2])
        put((4,), dmod)
        put((1, 2), (d - 2) * math.comb(2, 2) * B[2])  # (d-2) C(d,2) mod 2
    else:
        put((1,), B[5])
        put((5,), dmod)
        put((1, 2), (d - 2) * B[2])
        put((1, 3), (d - 2) * B[2])
    return out


def eval_trace_power(l: int, d: int, tvec) -> int:
    """Evaluate T_l(f^d) from (T_1(f), ..., T_l(f))."""
    acc = 0
    for mono_, bit in trace_of_power_identities(l, d).items():
        term = bit
        for idx in mono_:
            term &= tvec[idx - 1]
        acc ^= term
    return acc


# ---------------------------------------------------------------------------
# the binary four-coefficient transform


def _class_sum(n, F_provider, residues, modulus, arg_of_d):
    total = 0
    for d in range(1, n + 1):
        if n % d or d % modulus not in residues:
            continue
        mu = _mobius(d)
        if mu:
            total += mu * F_provider(n // d, arg_of_d(d))
    return total


# part -> (t, [(d mod 8, F-argument), ...]) for the eight t1 = 1 cases
_L4_ODD_T1 = {
    (1, 1, 1, 0): {1: (1, 1, 1, 0), 3: (1, 0, 0, 0), 5: (1, 1, 1, 1), 7: (1, 0, 0, 1)},
    (1, 0, 0, 0): {1: (1, 0, 0, 0), 3: (1, 1, 1, 0), 5: (1, 0, 0, 1), 7: (1, 1, 1, 1)},
    (1, 1, 1, 1): {1: (1, 1, 1, 1), 3: (1, 0, 0, 1), 5: (1, 1, 1, 0), 7: (1, 0, 0, 0)},
    (1, 0, 0, 1): {1: (1, 0, 0, 1), 3: (1, 1, 1, 1), 5: (1, 0, 0, 0), 7: (1, 1, 1, 0)},
    (1, 1, 0, 0): {1: (1, 1, 0, 0), 3: (1, 0, 1, 0), 5: (1, 1, 0, 1), 7: (1, 0, 1, 1)},
    (1, 0, 1, 0): {1: (1, 0, 1, 0), 3: (1, 1, 0, 0), 5: (1, 0, 1, 1), 7: (1, 1, 0, 1)},
    (1, 1, 0, 1): {1: (1, 1, 0, 1), 3: (1, 0, 1, 1), 5: (1, 1, 0, 0), 7: (1, 0, 1, 0)},
    (1, 0, 1, 1): {1: (1, 0, 1, 1), 3: (1, 1, 0, 1), 5: (1, 0, 1, 0), 7: (1, 1, 0, 0)},
}


def I2_from_F2_l4(n: int, t, F_provider) -> int:
    """The sixteen-case binary transform n I_2(n, t1..t4) = Moebius sums of
    F_2 values, including the F_2(n/2d, .) corrections of the t1 = t3 = 0
    cases."""
    if n < 4:
        raise DomainError("needs n >= 4")
    t = tuple(t)
    if len(t) != 4:
        raise DomainError("t must have length 4")
    t1, t2, t3, t4 = t

    if t1 == 1:
        swaps = _L4_ODD_T1[t]
        total = 0
        for d in range(1, n + 1):
            if n % d or d % 2 == 0:
                continue
            mu = _mobius(d)
            if mu:
                total += mu * F_provider(n // d, swaps[d % 8])
    elif (t2, t3) == (0, 1) or (t2, t3) == (1, 1):
        if t2 == 0:
            # I(0,0,1,t4): plain odd-divisor sum
            total = _class_sum(n, F_provider, {1, 3, 5, 7}, 8, lambda d: t)
        else:
            # I(0,1,1,t4): d = 1 mod 4 keeps t4, d = 3 mod 4 flips it
            total = _class_sum(n, F_provider, {1}, 4, lambda d: (0, 1, 1, t4))
            total += _class_sum(n, F_provider, {3}, 4, lambda d: (0, 1, 1, t4 ^ 1))
    elif t2 == 0:
        # I(0,0,0,t4): odd-divisor sum minus the even-level correction
        total = _class_sum(n, F_provider, {1, 3, 5, 7}, 8, lambda d: t)
        for d in range(1, n + 1):
            if n % d or d % 2 == 0 or (n // d) % 2:
                continue
            mu = _mobius(d)
            if mu:
                total -= mu * F_provider(n // (2 * d), (0, t4))
    else:
        # I(0,1,0,t4): mod-4 split plus corrections with F(n/2d, 1, .)
        total = _class_sum(n, F_provider, {1}, 4, lambda d: (0, 1, 0, t4))
        total += _class_sum(n, F_provider, {3}, 4, lambda d: (0, 1, 0, t4 ^ 1))
        for d in range(1, n + 1):
            if n % d or d % 2 == 0 or (n // d) % 2:
                continue
            mu = _mobius(d)
            if mu:
                total -= mu * F_provider(n // (2 * d), (1, t4 if d % 4 == 1 else t4 ^ 1))
    if total % n:
        raise NonIntegralResult(f"I_2({n}, {t}) sum {total} not divisible by {n}")
    return total // n
