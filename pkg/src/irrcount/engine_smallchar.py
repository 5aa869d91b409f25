"""Characteristic-2 (l <= 7) and characteristic-3 (l = 3) counting pipelines,
the built-in published formula tables, and the Kloosterman-sum connection.

The pipelines produce exact counts for a specific n (no zeta recovery): each
linear combination of trace functions becomes a curve system via the
degree-lowered identities, the system is counted over F_{q^n} averaged over
its parameterisation variables, and the zero/one-count transform turns the
results into the full table of prescribed-trace counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .artin_schreier import ASEquation, ASSystem, affine_count_system, power_sum_eval
from .errors import DomainError, NonIntegralCount, ValidityError
from .exprs import add_expr, add_term, mono
from .ff_core import tower
from .formula import CountFormula, Validity, canonical_terms
from .trace_lab import (
    CHAR2_AUX,
    binom_mod_p,
    char2_defining_rhs,
    char2_linear_arg,
    char3_linear_arg,
    trace_vector,
)
from .transforms import solve_N_from_V0, solve_N_from_V1, solve_restricted_domain
from . import tables


# ---------------------------------------------------------------------------
# characteristic 2: curve systems for V(i . f)


def _aux_union(l_set, i, param):
    aux = []
    for k, pos in enumerate(l_set):
        if (i >> k) & 1:
            for v in CHAR2_AUX[param][pos]:
                if v not in aux:
                    aux.append(v)
    return sorted(aux)


def build_system_char2(l_set, i: int, r_vec, nbar: int, param: str = "primary") -> ASSystem:
    """The intersection system whose zero-average gives V(i . f), q = 2.

    l_set are the prescribed positions (ascending), bit k of i selects
    position l_set[k]; r_vec supplies (r0, r_aux...) for the parameterising
    trace values in the order (r0, r1, r2, r3) restricted to the needed aux.
    """
    l_set = tuple(sorted(l_set))
    if not l_set or l_set[-1] > 7 or any(p0 < 1 for p0 in l_set):
        raise DomainError("positions must lie in 1..7")
    if param not in CHAR2_AUX:
        raise DomainError(f"unknown parameterisation {param!r}")
    if any(pos not in CHAR2_AUX[param] for pos in l_set):
        raise DomainError(f"parameterisation {param!r} does not cover {l_set}")
    if not 0 <= i < 2 ** len(l_set):
        raise DomainError("index out of range")
    aux = _aux_union(l_set, i, param)
    if len(r_vec) != 1 + len(aux):
        raise DomainError(f"r_vec must have length {1 + len(aux)}")
    r = {"r0": r_vec[0] % 2}
    for v, rv in zip(aux, r_vec[1:]):
        r[f"r{v[1]}"] = rv % 2
    B = {k: binom_mod_p(nbar, k, 2) for k in range(1, 8)}

    rhs = {}
    for k, pos in enumerate(l_set):
        if (i >> k) & 1:
            add_expr(rhs, char2_linear_arg(pos, r, B, param), 2)

    eqs = [ASEquation(v, char2_defining_rhs(param, v, r)) for v in aux]
    if i != 0:
        eqs.append(ASEquation(_fresh_var(aux), rhs))
    return ASSystem(2, 1, "a0", tuple(eqs), s=1 + len(aux))


def _fresh_var(aux):
    used = {int(v[1]) for v in aux}
    k = 1
    while k in used:
        k += 1
    return f"a{k}"


def V_count_char2(i: int, l_set, n: int, param: str = "primary") -> int:
    """V(i . f) = #{a : sum_k i_k T_{l_k}(a) = 0} for odd n, via curves."""
    if n % 2 == 0:
        raise DomainError("the characteristic-2 pipeline needs n odd")
    l_set = tuple(sorted(l_set))
    if i == 0:
        return 2**n
    aux = _aux_union(l_set, i, param)
    s = 1 + len(aux)
    total = 0
    for r_vec in itertools.product((0, 1), repeat=s):
        sysm = build_system_char2(l_set, i, r_vec, n, param)
        total += affine_count_system(sysm, n)
    if total % 2 ** (s + 1):
        raise NonIntegralCount(f"V count {total} not divisible by 2^{s + 1}")
    return total // 2 ** (s + 1)


# ---------------------------------------------------------------------------
# characteristic 3: curve systems for V_1(i . f), l = 3


def _char3_combination(i: int, r0: int, nbar: int):
    digits = []
    ii = i
    for _ in range(3):
        ii, d = divmod(ii, 3)
        digits.append(d)
    rhs = {}
    for k, ik in enumerate(digits):
        if ik:
            add_expr(rhs, char3_linear_arg(k + 1, r0, nbar), 3, scale=ik)
    return rhs


def V1_count_char3(i: int, n: int) -> int:
    """V_1(i . f) for f = (T_3, T_2, T_1) over F_{3^n}, n coprime to 3."""
    if n % 3 == 0:
        raise DomainError("n must be coprime to 3")
    if i == 0:
        return 3**n
    nbar = n % 9
    inv_n = pow(n % 3, -1, 3)
    total = 0
    for r0 in (0, 1, 2):
        rhs = _char3_combination(i, r0, nbar)
        add_term(rhs, mono(), -inv_n, 3)  # move the 1/n of the left side over
        sysm = ASSystem(3, 1, "a0", (ASEquation("a1", rhs),), s=1)
        total += affine_count_system(sysm, n)
    if total % 9:
        raise NonIntegralCount(f"V_1 count {total} not divisible by 9")
    return total // 9


# ---------------------------------------------------------------------------
# full tables for a specific n


def F_smallchar_counts(q: int, l: int, n: int) -> np.ndarray:
    """All q^l counts F_q(n, t) via the curve pipeline (no formulas).

    Indexing matches oracle.count_all_F_brute: t_1 + t_2 q + ... + t_l q^(l-1).
    """
    if q == 2:
        if not 1 <= l <= 7:
            raise DomainError("q = 2 supports l <= 7")
        l_set = tuple(range(1, l + 1))
        V = [V_count_char2(i, l_set, n) for i in range(2**l)]
        return np.array(solve_N_from_V0(V, l), dtype=np.int64)
    if q == 3:
        if l != 3:
            raise DomainError("q = 3 supports l = 3")
        V = [V1_count_char3(i, n) for i in range(27)]
        return np.array(solve_N_from_V1(V, 3, 3), dtype=np.int64)
    raise DomainError("small-characteristic pipeline supports q in {2, 3}")


def direct_count_char3(t, n: int) -> int:
    """F_3(n, t1, t2, t3) by the direct method: parameterise T_1(a) = t_1,
    turn the T_2/T_3 conditions into two Artin-Schreier equations, count the
    3-variable system and divide by 27.  Needs n coprime to 3."""
    if n % 3 == 0:
        raise DomainError("n must be coprime to 3")
    t1, t2, t3 = t
    inv_n = pow(n % 3, -1, 3)
    r0 = (t1 * inv_n) % 3
    eqs = []
    for l, tval in ((2, t2), (3, t3)):
        rhs = dict(char3_linear_arg(l, r0, n % 9))
        add_term(rhs, mono(), -tval * inv_n, 3)
        eqs.append(ASEquation(f"a{l - 1}", rhs))
    cnt = affine_count_system(ASSystem(3, 1, "a0", tuple(eqs), s=1), n)
    if cnt % 27:
        raise NonIntegralCount(f"direct count {cnt} not divisible by 27")
    return cnt // 27


def general_l4_counts(n: int) -> dict:
    """F_2(n, 0, 0, t3, t4) for any n >= 4 via the restricted-domain solve."""
    t3arg = char2_linear_arg(3, {"r0": 0}, {k: 0 for k in range(1, 8)})
    t4arg = char2_linear_arg(4, {"r0": 0, "r1": 0}, {k: 0 for k in range(1, 8)}, "alt")
    defin = ASEquation("a1", char2_defining_rhs("alt", "a1", {"r1": 0}))
    V = [affine_count_system(ASSystem(2, 1, "a0", (defin,)), n)]
    for i in (1, 2, 3):
        rhs = {}
        if i & 1:
            add_expr(rhs, t3arg, 2)
        if i & 2:
            add_expr(rhs, t4arg, 2)
        sysm = ASSystem(2, 1, "a0", (defin, ASEquation("a2", rhs)))
        cnt = affine_count_system(sysm, n)
        assert cnt % 2 == 0
        V.append(cnt // 2)
    N = solve_restricted_domain(V, 2, 2)
    return {(0, 0, 0, 0): N[0], (0, 0, 1, 0): N[1], (0, 0, 0, 1): N[2], (0, 0, 1, 1): N[3]}


def general_l5_counts(n: int) -> dict:
    """F_2(n, 0, 0, 0, t4, t5) for any n >= 5 via the restricted-domain solve."""
    zeros = {k: 0 for k in range(1, 8)}
    t4arg = char2_linear_arg(4, {"r0": 0, "r1": 0}, zeros, "alt")
    t5arg = char2_linear_arg(5, {"r0": 0, "r1": 0, "r2": 0}, zeros, "alt")
    d1 = ASEquation("a1", char2_defining_rhs("alt", "a1", {"r1": 0}))
    d2 = ASEquation("a2", char2_defining_rhs("alt", "a2", {"r2": 0}))
    V = [affine_count_system(ASSystem(2, 1, "a0", (d1, d2)), n)]
    for i in (1, 2, 3):
        rhs = {}
        if i & 1:
            add_expr(rhs, t4arg, 2)
        if i & 2:
            add_expr(rhs, t5arg, 2)
        sysm = ASSystem(2, 1, "a0", (d1, d2, ASEquation("a3", rhs)))
        cnt = affine_count_system(sysm, n)
        assert cnt % 2 == 0
        V.append(cnt // 2)
    N = solve_restricted_domain(V, 2, 3)
    return {(0, 0, 0, 0, 0): N[0], (0, 0, 0, 1, 0): N[1],
            (0, 0, 0, 0, 1): N[2], (0, 0, 0, 1, 1): N[3]}


# ---------------------------------------------------------------------------
# built-in published tables


@dataclass(frozen=True)
class PaperFormulaTable:
    ident: str
    q: int
    p: int
    r: int
    modulus: int
    min_n: int
    polys: dict
    basis: tuple
    scale: int
    entries: dict  # t tuple (None = wildcard) -> ((classes | "all", vector), ...)

    def t_keys(self):
        return tuple(self.entries)

    def formula(self, t, n: int) -> CountFormula:
        t = tuple(t)
        if t not in self.entries:
            raise DomainError(f"{self.ident} has no entry for t={t}")
        if n < self.min_n:
            raise ValidityError(f"{self.ident} needs n >= {self.min_n}")
        for classes, vec in self.entries[t]:
            if classes == "all" or n % self.modulus in classes:
                return self._build(t, classes, vec)
        raise ValidityError(f"{self.ident}: n={n} outside the validity classes for t={t}")

    def _build(self, t, classes, vec) -> CountFormula:
        l = sum(1 for x in t if x is not None)
        terms = canonical_terms(
            (Fraction(-c, self.scale), self.polys[name])
            for c, name in zip(vec, self.basis)
            if c
        )
        if classes == "all":
            validity = Validity(1, (0,), self.min_n)
        else:
            validity = Validity(self.modulus, tuple(classes), self.min_n)
        return CountFormula(self.q, self.p, self.r, l, terms, validity)


_table_cache = {}


def paper_table(ident: str) -> PaperFormulaTable:
    if ident not in _table_cache:
        if ident not in tables.ALL_TABLES:
            raise DomainError(f"unknown table {ident!r}; have {sorted(tables.ALL_TABLES)}")
        raw = tables.ALL_TABLES[ident]
        _table_cache[ident] = PaperFormulaTable(
            ident=raw["ident"], q=raw["q"], p=raw["p"], r=raw["r"],
            modulus=raw["modulus"], min_n=raw["min_n"], polys=dict(raw["polys"]),
            basis=tuple(raw["basis"]), scale=raw["scale"],
            entries={t: tuple((c, tuple(v)) for c, v in groups) for t, groups in raw["entries"].items()},
        )
    return _table_cache[ident]


def table_names():
    return sorted(tables.ALL_TABLES)


def eval_paper_formula(table: PaperFormulaTable, t, n: int) -> int:
    return table.formula(t, n).eval(n)


def root_identity_check(polys, coeffs, modulus: int, classes, horizon: int = 200) -> bool:
    """True iff sum_k coeffs[k] * rho_n(polys[k]) = 0 for all n <= horizon
    with n mod modulus in classes."""
    for n in range(1, horizon + 1):
        if n % modulus not in classes:
            continue
        if sum(c * power_sum_eval(p0, n) for c, p0 in zip(coeffs, polys)) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Kloosterman sums


def kloosterman(n: int, a_idx: int) -> int:
    """K_{2^n}(a) via the point count of y^2 + xy = x^3 + a."""
    if a_idx == 0:
        raise DomainError("a must be nonzero")
    tw = tower(2, 1, n)
    b = tw.bulk()
    X = b.all_idx()[1:]
    # substituting y = xz turns the fibre over x != 0 into z^2 + z = x + a/x^2
    inv2 = _inverse_square_table(tw)[1:]
    w = b.add(X, b.scalar_mul(a_idx, inv2))
    affine = 1 + 2 * int((b.trace_abs_table()[w] == 0).sum())  # x = 0: unique y
    projective = affine + 1
    return projective - 2**n


def _inverse_square_table(tw):
    """x -> x^(-2) over the whole field (0 maps to 0)."""
    key = "invsq"
    b = tw.bulk()
    if key not in b._tabs:
        allv = b.all_idx()
        e = 2**tw.n - 2  # x^(2^n - 2) = x^(-1) for x != 0
        result = np.ones(tw.order, dtype=np.int64)
        basepow = allv
        while e:
            if e & 1:
                result = b.mul(result, basepow)
            e >>= 1
            basepow = b.square(basepow)
        result[0] = 0
        b._tabs[key] = b.square(result)
    return b._tabs[key]


def kloosterman_congruence(n: int, a_idx: int, modulus: int = 32) -> int:
    """The published congruence for K_{2^n}(a) from the first trace values."""
    tw = tower(2, 1, n)
    if modulus == 32:
        if n < 4:
            raise DomainError("mod-32 congruence needs n >= 4")
        e = [int(x) for x in trace_vector(tw, a_idx, 4)]
        e1, e2, e3, e4 = e
        return (28 * e1 + 8 * e2 + 16 * (e1 * e2 + e1 * e3 + e4)) % 32
    if modulus == 64:
        if n < 6:
            raise DomainError("mod-64 congruence needs n >= 6")
        e = [int(x) for x in trace_vector(tw, a_idx, 8)]
        e1, e2, e3, e4, e5, e6, e7, e8 = e
        return (
            28 * e1 + 40 * e2 + 16 * (e1 * e2 + e1 * e3 + e4)
            + 32 * (e1 * e4 + e1 * e5 + e1 * e6 + e1 * e7 + e2 * e3 + e2 * e4
                    + e2 * e6 + e3 * e5 + e1 * e2 * e3 + e1 * e2 * e4 + e8)
        ) % 64
    raise DomainError("modulus must be 32 or 64")


def count_kloosterman_zero_mod32(n: int) -> int:
    """#{a in F_{2^n} : K(a) = 0 mod 32} = F_2(n,0,0,0,0) + F_2(n,0,0,1,0)."""
    if n < 5:
        raise DomainError("needs n >= 5")
    return eval_paper_formula(paper_table("kloosterman_mod32"), (0, 0, None, 0), n)


def kloosterman_distribution(n: int):
    """T(n, k) = #{a != 0 : 2^k divides #E_{2^n}(a)} for k = 1..n."""
    tw = tower(2, 1, n)
    b = tw.bulk()
    inv2 = _inverse_square_table(tw)
    tr = b.trace_abs_table()
    out = [0] * (n + 1)
    for a in range(1, tw.order):
        w = b.add(b.all_idx()[1:], b.scalar_mul(a, inv2[1:]))
        affine = 1 + 2 * int((tr[w] == 0).sum())
        order = affine + 1  # = 2^n + K(a)
        k = 0
        while order % 2 == 0 and k < n:
            order //= 2
            k += 1
        for j in range(1, k + 1):
            out[j] += 1
    return out[1:]
