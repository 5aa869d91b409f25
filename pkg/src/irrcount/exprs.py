"""Tiny sparse multivariate polynomial expressions over a tower's top field.

An expression is a dict mapping monomials to nonzero coefficients given as
F_q indices (for prime q an index is just the residue).  A monomial is a
sorted tuple of (variable name, exponent) pairs; the empty tuple is the
constant monomial.  add_term/add_expr accumulate coefficients mod p and are
meant for prime-field expressions; extension-field builders assign
coefficients directly.
"""

from __future__ import annotations

import numpy as np


def mono(*pairs):
    return tuple(sorted((v, e) for v, e in pairs if e))


def add_term(expr: dict, monomial, coeff: int, p: int) -> None:
    c = (expr.get(monomial, 0) + coeff) % p
    if c:
        expr[monomial] = c
    else:
        expr.pop(monomial, None)


def add_expr(expr: dict, other: dict, p: int, scale: int = 1) -> None:
    if scale % p == 0:
        return
    for m, c in other.items():
        add_term(expr, m, c * scale, p)


def expr_vars(expr: dict):
    out = set()
    for m in expr:
        for v, _ in m:
            out.add(v)
    return out


def eval_scalar(expr: dict, assign: dict, tw) -> int:
    """Evaluate to a field index; assign maps variable name -> index."""
    fld = tw.field
    total = 0
    for m, c in expr.items():
        val = tw.embed_base(c)
        for v, e in m:
            val = fld.mul(val, fld.pow(assign[v], e))
        total = fld.add(total, val)
    return total


def eval_bulk(expr: dict, assign: dict, bulk) -> np.ndarray:
    """Vectorized evaluation; assign maps variable name -> index array.

    The all-elements array gets its powers from the cached power maps, other
    arrays use multiply chains.
    """
    tw = bulk.tower
    allv = bulk.all_idx()
    powcache = {}

    def var_pow(v, e):
        arr = assign[v]
        if arr is allv:
            return bulk.power_map(e)
        key = (v, e)
        if key not in powcache:
            powcache[key] = bulk.bulk_pow(arr, e) if e > 1 else arr
        return powcache[key]

    total = None
    for m, c in expr.items():
        term = None
        for v, e in m:
            pw = var_pow(v, e)
            term = pw if term is None else bulk.mul(term, pw)
        if term is None:
            term = np.full(1, tw.embed_base(c), dtype=np.int64)
        elif c != 1:
            term = bulk.scalar_mul(tw.embed_base(c), term)
        total = term if total is None else bulk.add(total, term)
    if total is None:
        return np.zeros(1, dtype=np.int64)
    return total
