"""The two counting transforms.

General q: between the table N(j) of value-vector counts and the counts
V_1(i.f) of evaluations to 1 of the nonzero linear combinations.  Binary:
between N(j) and the zero counts V(i.f), a signed Hadamard matrix, plus the
restricted-domain variant where V(0) is the domain size.

All arithmetic is exact rational with a final integrality assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, NonIntegralSolution
from .ff_core import GF


@dataclass(frozen=True)
class IndexVector:
    """Integer i in [0, q^m) with its digit vector (i_0 ... i_{m-1}) over F_q."""

    i: int
    q: int
    m: int

    def __post_init__(self):
        if not 0 <= self.i < self.q**self.m:
            raise DomainError("index out of range")

    @property
    def digits(self):
        out = []
        i = self.i
        for _ in range(self.m):
            i, d = divmod(i, self.q)
            out.append(d)
        return tuple(out)

    @classmethod
    def from_digits(cls, digits, q):
        i = 0
        for d in reversed(digits):
            i = i * q + d
        return cls(i, q, len(digits))

    def dot(self, other: "IndexVector", field=None) -> int:
        """Inner product over F_q."""
        if field is None:
            field = _field_for(self.q)
        acc = 0
        for a, b in zip(self.digits, other.digits):
            acc = field.add(acc, field.mul(a, b))
        return acc


def _field_for(q):
    from .ff_core import tower_for_q

    return tower_for_q(q, 1).base


def _dot_tables(q, m):
    """dot[i][j] over all index pairs, cached per (q, m)."""
    key = (q, m)
    if key not in _dot_cache:
        field = _field_for(q)
        size = q**m
        mul = np.array([[field.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        add = np.array([[field.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        digs = np.empty((size, m), dtype=np.int64)
        rest = np.arange(size, dtype=np.int64)
        for k in range(m):
            digs[:, k] = rest % q
            rest //= q
        tab = np.zeros((size, size), dtype=np.int64)
        for k in range(m):
            tab = add[tab, mul[np.ix_(digs[:, k], digs[:, k])]]
        _dot_cache[key] = tab
    return _dot_cache[key]


_dot_cache = {}


def forward_V1_from_N(N, q: int, m: int):
    """V_1(i) = sum over i.j = 1 of N(j); V_1(0) = sum of all N(j)."""
    size = q**m
    if len(N) != size:
        raise DomainError("table size mismatch")
    dot = _dot_tables(q, m)
    Na = np.asarray([int(x) for x in N], dtype=object)
    V = (dot == 1) @ Na
    V[0] = Na.sum()
    return [int(v) for v in V]


def solve_N_from_V1(V, q: int, m: int):
    """Invert forward_V1_from_N; raises NonIntegralSolution on bad input."""
    size = q**m
    if len(V) != size:
        raise DomainError("table size mismatch")
    dot = _dot_tables(q, m)
    Va = np.asarray([int(x) for x in V], dtype=object)
    den = q ** (m - 1)
    signed = np.where(dot == 1, 1, np.where(dot == 0, -1, 0))
    signed[:, 0] = 0
    signed[0, :] = 0
    nums = signed.T @ Va  # numerators of q^(m-1) N(j) for j >= 1
    out = [den * V[0] - sum(Va[1:])] + [int(x) for x in nums[1:]]
    return _div_ints(out, den)


def forward_V0_from_N(N, m: int):
    """q = 2 zero-count transform: V(i) = sum over i.j = 0 of N(j)."""
    size = 2**m
    if len(N) != size:
        raise DomainError("table size mismatch")
    V = [0] * size
    for i in range(size):
        V[i] = sum(N[j] for j in range(size) if _parity(i & j) == 0)
    return V


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def solve_N_from_V0(V, m: int):
    """Invert forward_V0_from_N via (1/2^(m-1)) H_m - A_m."""
    if len(V) != 2**m:
        raise DomainError("table size mismatch")
    return _div_ints(_solve_N_from_V0_numerators(V, m), 2 ** (m - 1))


def solve_restricted_domain(V, m: int, s: int):
    """Binary zero-count solve over a restricted domain A.

    The caller supplies V[0] = |A| and the counts of zeros over A for the
    other combinations; s is the number of halving parameterisation
    variables, so the final counts are N_A(j) / 2^s.
    """
    if s < 0:
        raise DomainError("s must be >= 0")
    return _div_ints(_solve_N_from_V0_numerators(V, m), 2 ** (m - 1 + s))


def _solve_N_from_V0_numerators(V, m):
    """2^(m-1) N(j) as exact integers."""
    size = 2**m
    out = []
    for j in range(size):
        acc = 0
        for i in range(size):
            acc += -int(V[i]) if _parity(i & j) else int(V[i])
        if j == 0:
            acc -= 2 ** (m - 1) * int(V[0])
        out.append(acc)
    return out


def _div_ints(nums, den):
    out = []
    for k, v in enumerate(nums):
        if v % den:
            raise NonIntegralSolution(f"entry {k} is {v}/{den}, not an integer")
        v //= den
        if v < 0:
            raise NonIntegralSolution(f"entry {k} is {v}, negative count")
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# dense matrices, used by the explicit-inverse checks


def build_S_matrix(q: int, m: int):
    """S_{q,m}: entry (i, j) is 1 if i.j = 1 or i = 0, else 0."""
    size = q**m
    dot = _dot_tables(q, m)
    return [[1 if (i == 0 or dot[i][j] == 1) else 0 for j in range(size)] for i in range(size)]


def build_S_inverse(q: int, m: int):
    size = q**m
    dot = _dot_tables(q, m)
    scale = Fraction(1, q ** (m - 1))
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            if i == 0:
                row.append(Fraction(1) if j == 0 else -scale)
            elif j == 0:
                row.append(Fraction(0))
            else:
                d = dot[i][j]
                row.append(scale if d == 1 else (-scale if d == 0 else Fraction(0)))
        out.append(row)
    return out


def build_S0_matrix(m: int):
    """Binary S_m: entry (i, j) = 1 - parity(i & j)."""
    size = 2**m
    return [[1 - _parity(i & j) for j in range(size)] for i in range(size)]


def build_S0_inverse(m: int):
    size = 2**m
    scale = Fraction(1, 2 ** (m - 1))
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            v = scale * (-1 if _parity(i & j) else 1)
            if i == 0 and j == 0:
                v -= 1
            row.append(v)
        out.append(row)
    return out
