"""Ground-truth brute-force counting.

F_q(n, .) by element enumeration and I_q(n, .) by irreducible enumeration,
plus the classical Moebius-sum count of all monic irreducibles.  Everything
here is definitional: trace vectors come from elementary symmetric functions
of the Frobenius conjugates, irreducibles from explicit irreducibility tests
or minimal polynomials.  The derivation engines are checked against this
module, never the other way around.
"""

from __future__ import annotations

import functools
import itertools

import numpy as np

from . import config
from .errors import DomainError
from .ff_core import Tower, is_irreducible, tower_for_q
from .trace_lab import TraceSpec

_POLY_ENUM_LIMIT = 2**16  # below this, count irreducibles by direct iteration


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


def gauss_count(q: int, n: int) -> int:
    """Number of monic irreducible polynomials of degree n over F_q."""
    if n < 1:
        raise DomainError("n must be >= 1")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * q ** (n // d)
    assert total % n == 0
    return total // n


# ---------------------------------------------------------------------------
# trace tables: T_1..T_l of every element, as (order, l) arrays of F_q indices


_trace_tables = {}


def trace_table(tw: Tower, l: int) -> np.ndarray:
    """T_1..T_l of every element; cached per tower, reusing larger tables."""
    cached = _trace_tables.get(id(tw))
    if cached is not None and cached.shape[1] >= l:
        return cached[:, :l]
    tab = _trace_table_build(tw, l)
    _trace_tables[id(tw)] = tab
    if len(_trace_tables) > 8:
        _trace_tables.pop(next(iter(_trace_tables)))
    return tab


def _trace_table_build(tw: Tower, l: int) -> np.ndarray:
    config.check_budget(tw.order, f"trace table over GF({tw.q}^{tw.n})")
    b = tw.bulk()
    n = tw.n
    conj = b.all_idx()
    # elementary symmetric functions of the conjugates, updated one conjugate
    # at a time; e[k] for k > n stays zero, supporting specs with l > n
    e = [None] * (l + 1)
    for i in range(n):
        c = conj if i == 0 else b.frob_q_map(1)[conj if i == 1 else c]
        for k in range(min(l, i + 1), 0, -1):
            prev = e[k - 1]
            term = c if prev is None else b.mul(c, prev)
            e[k] = term if e[k] is None else b.add(e[k], term)
    out = np.zeros((tw.order, l), dtype=np.int64)
    for k in range(1, l + 1):
        if e[k] is not None:
            col = e[k]
            assert int(col.max(initial=0)) < tw.q, "trace values must lie in F_q"
            out[:, k - 1] = col
    return out


def count_F_brute(tw: Tower, spec: TraceSpec, jobs: int = 1) -> int:
    """Number of a in F_{q^n} matching every prescribed trace position.

    jobs > 1 splits the fold into chunks (threaded); the result is a sum of
    chunk counts and therefore independent of the chunking.
    """
    if spec.q != tw.q:
        raise DomainError("spec/tower base field mismatch")
    if not spec.values:
        return tw.order
    l = spec.max_position
    tab = trace_table(tw, l)

    def count_range(lo, hi):
        mask = np.ones(hi - lo, dtype=bool)
        for pos, want in spec.values.items():
            mask &= tab[lo:hi, pos - 1] == want
        return int(mask.sum())

    if jobs <= 1:
        return count_range(0, tw.order)
    bounds = np.linspace(0, tw.order, jobs + 1, dtype=np.int64)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(count_range, bounds[:-1], bounds[1:])
    return sum(parts)


def count_all_F_brute(tw: Tower, l: int) -> np.ndarray:
    """All q^l counts, indexed by t_1 + t_2 q + ... + t_l q^(l-1)."""
    tab = trace_table(tw, l)
    key = np.zeros(tw.order, dtype=np.int64)
    mult = 1
    for k in range(l):
        key += tab[:, k] * mult
        mult *= tw.q
    out = np.bincount(key, minlength=tw.q**l)
    assert int(out.sum()) == tw.order
    return out


def flat_index(t, q: int) -> int:
    idx = 0
    for k in range(len(t) - 1, -1, -1):
        idx = idx * q + t[k]
    return idx


# ---------------------------------------------------------------------------
# irreducible polynomials


def _exact_degree_mask(tw: Tower) -> np.ndarray:
    b = tw.bulk()
    allv = b.all_idx()
    mask = np.ones(tw.order, dtype=bool)
    for t in sorted({f for f in _prime_factors(tw.n)}):
        mask &= b.frob_q_map(tw.n // t) != allv
    return mask


def _prime_factors(m):
    out = set()
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.add(d)
            m //= d
        d += 1
    if m > 1:
        out.add(m)
    return out


def enumerate_irreducibles(q: int, n: int):
    """Yield every monic irreducible of degree n over F_q exactly once.

    Polynomials are coefficient tuples (low -> high, leading 1).  Small cases
    iterate all monic polynomials; larger ones walk the field and take
    minimal polynomials of one canonical root per conjugacy class.
    """
    config.check_budget(q**n, f"irreducible enumeration, degree {n} over GF({q})")
    tw = tower_for_q(q, n)
    if q**n <= _POLY_ENUM_LIMIT:
        base = tw.base
        for tail in itertools.product(range(q), repeat=n):
            poly = list(tail) + [1]
            if n > 1 and poly[0] == 0:
                continue
            if is_irreducible(poly, base):
                yield tuple(poly)
        return
    b = tw.bulk()
    mask = _exact_degree_mask(tw)
    # canonical representative: smallest index in the Frobenius orbit
    allv = b.all_idx()
    small = allv.copy()
    cur = allv
    for _ in range(tw.n - 1):
        cur = b.frob_q_map(1)[cur]
        small = np.minimum(small, cur)
    reps = allv[mask & (small == allv)]
    # build min polys of all representatives simultaneously: columns of
    # coefficients (high -> low), multiplied by one linear factor per conjugate
    m = reps.shape[0]
    poly = [np.ones(m, dtype=np.int64)]
    conj = reps
    for i in range(n):
        c = conj if i == 0 else b.frob_q_map(1)[conj if i == 1 else c]
        negc = b.neg(c)
        new = [poly[0]]
        for k in range(1, len(poly)):
            new.append(b.add(poly[k], b.mul(negc, poly[k - 1])))
        new.append(b.mul(negc, poly[-1]))
        poly = new
    for j in range(m):
        out = tuple(int(poly[n - k][j]) for k in range(n + 1))
        assert all(cc < q for cc in out)
        yield out


def count_I_brute(q: int, n: int, t, jobs: int = 1) -> int:
    """Number of monic degree-n irreducibles over F_q whose root a has
    T_k(a) = t_k for k = 1..len(t)."""
    l = len(t)
    config.check_budget(q**n, "irreducible count")
    tw = tower_for_q(q, n)
    tab = trace_table(tw, l)
    mask = _exact_degree_mask(tw) if n > 1 else np.ones(tw.order, dtype=bool)
    for k in range(l):
        mask &= tab[:, k] == t[k]
    cnt = int(mask.sum())
    assert cnt % n == 0
    return cnt // n


def count_I_all(q: int, n: int, l: int) -> np.ndarray:
    """All q^l irreducible counts at once (same indexing as count_all_F_brute)."""
    tw = tower_for_q(q, n)
    tab = trace_table(tw, l)
    mask = _exact_degree_mask(tw) if n > 1 else np.ones(tw.order, dtype=bool)
    key = np.zeros(tw.order, dtype=np.int64)
    mult = 1
    for k in range(l):
        key += tab[:, k] * mult
        mult *= q
    out = np.bincount(key[mask], minlength=q**l)
    assert (out % n == 0).all()
    return out // n
