"""The main derivation engine for l < p and n coprime to p.

For each residue class nbar of n mod p it derives closed-form count
expressions for all q^l trace vectors by the indirect (batching) method:
one indicator curve per nonzero index i, characteristic polynomials
recovered from point counts, then the evaluations-to-1 transform.  It also
builds the direct-method systems used for count-level verification.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import config
from .artin_schreier import (
    ASCurve,
    ASEquation,
    ASSystem,
    FrobeniusPoly,
    affine_count_system,
    frobenius_charpoly,
    genus_as,
)
from .errors import DomainError
from .exprs import mono
from .ff_core import GF, tower, tower_for_q
from .formula import CountFormula, FormulaSet, Validity, canonical_terms
from .oracle import count_all_F_brute, flat_index
from .transforms import IndexVector, _dot_tables


def _check_args(q, l, nbar):
    tw1 = tower_for_q(q, 1)
    p = tw1.p
    if l >= p:
        raise DomainError(f"main algorithm needs l < p (l={l}, p={p})")
    if nbar % p == 0:
        raise DomainError("n = 0 mod p is not supported")
    return tw1.p, tw1.r


def build_indicator_poly(i: int, nbar: int, q: int):
    """f(x) = -1/nbar + sum_k i_k x^(k+1), coefficients as F_q indices."""
    p, r = tower_for_q(q, 1).p, tower_for_q(q, 1).r
    if i < 1:
        raise DomainError("index must be nonzero")
    digits = []
    ii = i
    while ii:
        ii, d = divmod(ii, q)
        digits.append(d)
    base = GF(p, r) if r > 1 else GF(p)
    const = base.neg(tower_for_q(q, 1).embed_prime(pow(nbar % p, -1, p)))
    coeffs = [const] + digits
    return tuple(coeffs)


@dataclass
class DeriveReport:
    total_root_count: int
    charpolys: dict  # i -> tuple of FrobeniusPoly (one per alpha for r>1)


_derive_cache = {}


def derive_formula_set(q: int, l: int, nbar: int, _cache=True) -> FormulaSet:
    key = (q, l, nbar)
    if _cache and key in _derive_cache:
        return _derive_cache[key]
    fs, _ = derive_formula_set_with_report(q, l, nbar)
    if _cache:
        _derive_cache[key] = fs
    return fs


def derive_formula_set_with_report(q: int, l: int, nbar: int):
    p, r = _check_args(q, l, nbar)
    size = q**l
    degrees = {i: _index_degree(q, l, i) for i in range(1, size)}
    gmax = max((p - 1) * (d - 1) // 2 for d in degrees.values())

    # point counts for every curve at every needed level, sharing tables
    if r == 1:
        charpolys = _recover_r1(q, l, nbar, degrees, gmax)
    else:
        charpolys = _recover_rbig(q, l, nbar, degrees, gmax)

    dot = _dot_tables(q, l)
    # per Lemma 6, #C = q^n - (1/(p-1)) sum over ALL alpha-twist roots; for
    # r = 1 there is no twisting and the factor is 1
    factor = Fraction(1, p - 1) if r > 1 else Fraction(1)
    total_roots = sum(2 * cp.genus for cps in charpolys.values() for cp in cps)

    from .trace_lab import newton_forward

    base = GF(p, r) if r > 1 else GF(p)
    formulas = {}
    validity = Validity(p, (nbar % p,), max(l, 1))
    import itertools

    for t in itertools.product(range(q), repeat=l):
        # the transform indexes counts by the power-sum vector t'
        j = flat_index(newton_forward(t, base), q)
        acc = {}
        if j == 0:
            for i in range(1, size):
                for cp in charpolys[i]:
                    acc[cp.coeffs] = acc.get(cp.coeffs, 0) + 1
        else:
            for i in range(1, size):
                d = dot[i][j]
                if d == 1:
                    ups = -1
                elif d == 0:
                    ups = 1
                else:
                    continue
                for cp in charpolys[i]:
                    acc[cp.coeffs] = acc.get(cp.coeffs, 0) + ups
        terms = canonical_terms((factor * m, poly) for poly, m in acc.items() if m)
        formulas[t] = CountFormula(q, p, r, l, terms, validity)
    fs = FormulaSet(q, p, r, l, nbar, formulas)
    return fs, DeriveReport(total_roots, charpolys)


def _index_degree(q, l, i):
    d = 0
    ii, k = i, 0
    while ii:
        ii, dig = divmod(ii, q)
        if dig:
            d = k + 1
        k += 1
    return d


_lincomb_cache = {}


def _lincomb_hists(q, l, degrees, gmax):
    """(i, n) -> histogram over F_p of sum_k i_k Tr(x^(k+1)), shared by all
    residue classes nbar (only the trace target depends on nbar)."""
    key = (q, l)
    if key in _lincomb_cache:
        return _lincomb_cache[key]
    p = q
    lincomb = {}
    for n in range(1, gmax + 3):
        tw = tower(p, 1, n)
        config.check_budget(tw.order, "indicator curve counts")
        b = tw.bulk()
        tr_pow = {k: np.asarray(b.trace_rel_pow(k), dtype=np.int64) for k in range(1, l + 1)}
        for i, d in degrees.items():
            g = (p - 1) * (d - 1) // 2
            if n > g + 2:
                continue
            digits = IndexVector(i, q, l).digits
            acc = np.zeros(tw.order, dtype=np.int64)
            for k, ik in enumerate(digits):
                if ik:
                    acc += ik * tr_pow[k + 1]
            lincomb[(i, n)] = np.bincount(acc % p, minlength=p)
    _lincomb_cache[key] = lincomb
    return lincomb


def _recover_r1(q, l, nbar, degrees, gmax):
    """r = 1: Tr(f_i(x)) = sum_k i_k Tr(x^(k+1)) - Tr(1/nbar), batched."""
    p = q
    lincomb = _lincomb_hists(q, l, degrees, gmax)
    charpolys = {}
    inv_nbar = pow(nbar % p, -1, p)
    for i, d in degrees.items():
        g = (p - 1) * (d - 1) // 2
        counts = []
        for n in range(1, g + 3):
            # Tr(f_i(x)) = lincomb - n * (1/nbar) mod p; count zeros
            target = (n * inv_nbar) % p
            counts.append(p * int(lincomb[(i, n)][target]))
        curve = ASCurve(p, 1, build_indicator_poly(i, nbar, q), "p")
        charpolys[i] = (frobenius_charpoly(curve, counts),)
    return charpolys


def _recover_rbig(q, l, nbar, degrees, gmax):
    """r > 1: recover one charpoly per alpha-twisted prime-form curve."""
    tw1 = tower_for_q(q, 1)
    p, r = tw1.p, tw1.r
    base = GF(p, r)
    charpolys = {}
    # absolute-trace tables of w * x^k are shared per n across curves
    for i, d in degrees.items():
        g = (p - 1) * (d - 1) // 2
        f = build_indicator_poly(i, nbar, q)
        cps = []
        for alpha in range(1, q):
            fa = tuple(base.mul(alpha, c) for c in f)
            curve = ASCurve(p, r, fa, "p")
            cps.append(frobenius_charpoly(curve))
        charpolys[i] = tuple(cps)
    return charpolys


# ---------------------------------------------------------------------------
# direct method


def build_direct_system(q: int, l: int, t, nbar: int) -> ASSystem:
    """Equations a_k^q - a_k = a^k - t'_k/nbar, k = 1..l, t' = newton_forward(t)."""
    p, r = _check_args(q, l, nbar)
    from .trace_lab import newton_forward

    base = GF(p, r) if r > 1 else GF(p)
    tp = newton_forward(tuple(t), base)
    inv_nbar = pow(nbar % p, -1, p)
    eqs = []
    for k in range(1, l + 1):
        rhs = {mono(("a", k)): 1}
        shift = base.neg(base.mul(tp[k - 1], inv_nbar))
        if shift:
            rhs[mono()] = shift  # coefficient is an F_q index
        eqs.append(ASEquation(f"a{k}", rhs, "q"))
    return ASSystem(p, r, "a", tuple(eqs), s=0)


def direct_count_F(q: int, l: int, t, nbar: int, n: int) -> int:
    """F_q(n, t) via the direct method: system count divided by q^l."""
    if n % tower_for_q(q, 1).p != nbar % tower_for_q(q, 1).p:
        raise DomainError("n must be = nbar mod p")
    sys = build_direct_system(q, l, t, nbar)
    cnt = affine_count_system(sys, n)
    assert cnt % q**l == 0
    return cnt // q**l


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyReport:
    checked: int = 0
    mismatches: list = field(default_factory=list)  # (t, n, formula, oracle)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_formula_set(fs: FormulaSet, n_list) -> VerifyReport:
    report = VerifyReport()
    for n in n_list:
        if n % fs.p != fs.nbar % fs.p or n < fs.l:
            raise DomainError(f"n={n} not in class nbar={fs.nbar} mod {fs.p} with n >= l")
        tw = tower(fs.p, fs.r, n)
        table = count_all_F_brute(tw, fs.l)
        for t, f in fs.formulas.items():
            want = int(table[flat_index(t, fs.q)])
            got = f.eval(n)
            report.checked += 1
            if want != got:
                report.mismatches.append((t, n, got, want))
    return report
