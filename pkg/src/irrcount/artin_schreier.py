"""Artin-Schreier curves and systems over F_q.

Affine point counting over F_{q^n}, reduction of y^q - y = f to prime form,
recovery of the Frobenius characteristic polynomial from point counts via
Newton's identities plus the functional equation, exact power-sum
evaluation, and the supersingularity divisibility test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import config
from .errors import DomainError, NonIntegralCount, ValidationFailed
from .exprs import eval_bulk, expr_vars, mono
from .ff_core import Tower, tower, tower_for_q


# ---------------------------------------------------------------------------
# curves and systems


@dataclass(frozen=True)
class ASCurve:
    """y^e - y = f(x) over F_q, with e = p (prime form) or e = q."""

    p: int
    r: int
    f: tuple  # coefficients over F_q (indices), low -> high
    e_kind: str = "p"  # "p" or "q"

    def __post_init__(self):
        if self.e_kind not in ("p", "q"):
            raise DomainError("e_kind must be 'p' or 'q'")
        if len(self.f) < 2:
            raise DomainError("deg f >= 1 required")

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def degree(self) -> int:
        return len(self.f) - 1


@dataclass(frozen=True)
class ASEquation:
    """var^e - var = rhs, rhs a sparse expression in the free/earlier vars."""

    var: str
    rhs: dict
    e_kind: str = "p"


@dataclass(frozen=True)
class ASSystem:
    """Equations sharing one free variable; s counts the halving/averaging
    parameterisation variables used to build it (informational)."""

    p: int
    r: int
    free: str
    equations: tuple
    s: int = 0

    @property
    def q(self) -> int:
        return self.p**self.r


def genus_as(curve: ASCurve) -> int:
    """(p-1)(d-1)/2 for y^p - y = f of degree d coprime to p."""
    if curve.e_kind != "p":
        raise DomainError("genus formula applies to the prime form")
    d = curve.degree
    if d % curve.p == 0:
        raise DomainError("degree divisible by p")
    return (curve.p - 1) * (d - 1) // 2


# ---------------------------------------------------------------------------
# counting


def _poly_eval_bulk(tw: Tower, coeffs, X):
    b = tw.bulk()
    acc = None
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            term = np.full(1, c, dtype=np.int64)
        else:
            xk = b.power_map(k) if X is b.all_idx() else b.bulk_pow(X, k)
            term = xk if c == 1 else b.scalar_mul(c, xk)
        acc = term if acc is None else b.add(acc, term)
    if acc is None:
        return np.zeros(1, dtype=np.int64)
    return acc


def affine_count(curve: ASCurve, n: int, jobs: int = 1) -> int:
    """Number of F_{q^n}-rational affine points.

    jobs > 1 chunks the x-enumeration; chunk counts add, so the result is
    independent of the chunking.
    """
    tw = tower(curve.p, curve.r, n)
    config.check_budget(tw.order, "affine point count")
    b = tw.bulk()
    tr_tab = b.trace_rel_table() if curve.e_kind == "q" else b.trace_abs_table()
    fibre = tw.q if curve.e_kind == "q" else curve.p

    def count_range(lo, hi):
        X = b.all_idx() if (lo, hi) == (0, tw.order) else b.all_idx()[lo:hi]
        vals = _poly_eval_bulk(tw, curve.f, X)
        return int((tr_tab[vals] == 0).sum())

    if jobs <= 1:
        return fibre * count_range(0, tw.order)
    bounds = np.linspace(0, tw.order, jobs + 1, dtype=np.int64)
    from concurrent.futures import ThreadPoolExecutor

    with ThreadPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(count_range, bounds[:-1], bounds[1:])
    return fibre * sum(parts)


def affine_count_system(sys: ASSystem, n: int) -> int:
    """Number of full solution tuples over F_{q^n}.

    Iterates the free variable in bulk; each equation var^e - var = c is
    solvable iff the relevant trace of c vanishes and then has e solutions
    differing by constants.  Variables appearing in later right-hand sides
    are branched over all e constants; the rest contribute a factor e.
    """
    tw = tower(sys.p, sys.r, n)
    config.check_budget(tw.order, "system point count")
    b = tw.bulk()
    eqs = list(sys.equations)
    if not eqs:
        return tw.order

    used_later = set()
    for k, eq in enumerate(eqs):
        later_vars = set()
        for eq2 in eqs[k + 1 :]:
            later_vars |= expr_vars(eq2.rhs)
        if eq.var in later_vars:
            used_later.add(eq.var)

    trabs = b.trace_abs_table()
    trrel = b.trace_rel_table()
    X = b.all_idx()
    total = 0
    free_factor = 1
    for eq in eqs:
        if eq.var not in used_later:
            free_factor *= sys.p if eq.e_kind == "p" else sys.q

    branch_eqs = [eq for eq in eqs if eq.var in used_later]
    offsets_per = []
    for eq in branch_eqs:
        if eq.e_kind == "p":
            offsets_per.append([tw.embed_prime(c) for c in range(sys.p)])
        else:
            offsets_per.append([tw.embed_base(c) for c in range(sys.q)])

    import itertools

    for combo in itertools.product(*offsets_per) if branch_eqs else [()]:
        assign = {sys.free: X}
        alive = np.ones(tw.order, dtype=bool)
        ci = 0
        for eq in eqs:
            rhs = eval_bulk(eq.rhs, assign, b)
            if rhs.shape[0] == 1:
                rhs = np.broadcast_to(rhs, (tw.order,))
            tr = trabs[rhs] if eq.e_kind == "p" else trrel[rhs]
            alive &= tr == 0
            if eq.var in used_later:
                root = b.as_root_table("p" if eq.e_kind == "p" else "q")[rhs]
                off = combo[ci]
                ci += 1
                if off:
                    root = b.add(root, np.full(1, off, dtype=np.int64))
                assign[eq.var] = root
        total += int(alive.sum())
    return total * free_factor


def affine_count_system_exhaustive(sys: ASSystem, n: int) -> int:
    """Independent check: enumerate all variable tuples directly."""
    tw = tower(sys.p, sys.r, n)
    names = [sys.free] + [eq.var for eq in sys.equations]
    config.check_budget(tw.order ** len(names), "exhaustive system count")
    from .exprs import eval_scalar
    import itertools

    fld = tw.field
    count = 0
    for tup in itertools.product(range(tw.order), repeat=len(names)):
        assign = dict(zip(names, tup))
        ok = True
        for eq in sys.equations:
            lhs_e = sys.p if eq.e_kind == "p" else sys.q
            y = assign[eq.var]
            lhs = fld.sub(fld.pow(y, lhs_e), y)
            if lhs != eval_scalar(eq.rhs, assign, tw):
                ok = False
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# extension reduction (q = p^r, r > 1)


def reduce_to_prime(curve: ASCurve):
    """The q-1 prime-form curves y^p - y = alpha f(x), alpha in F_q^x."""
    if curve.r == 1:
        raise DomainError("already in prime form")
    if curve.e_kind != "q":
        raise DomainError("reduction applies to y^q - y curves")
    from .ff_core import GF

    base = GF(curve.p, curve.r)
    out = []
    for alpha in range(1, curve.q):
        f = tuple(base.mul(alpha, c) for c in curve.f)
        out.append(ASCurve(curve.p, curve.r, f, "p"))
    return out


def check_reduction_identity(curve: ASCurve, n: int) -> bool:
    """(p-1) #C - sum_alpha #C_alpha = (p - q) q^n."""
    p, q = curve.p, curve.q
    lhs = (p - 1) * affine_count(curve, n)
    lhs -= sum(affine_count(c, n) for c in reduce_to_prime(curve))
    return lhs == (p - q) * q**n


# ---------------------------------------------------------------------------
# power sums of monic integer polynomials


class PowerSums:
    """rho_n for a monic integer polynomial given by its trailing
    coefficients (c_1, ..., c_deg), i.e. X^deg + c_1 X^(deg-1) + ... + c_deg."""

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs)
        self._s = [len(self.coeffs)]  # rho_0 = degree

    def rho(self, n: int) -> int:
        if n < 0:
            raise DomainError("n must be >= 0")
        c = self.coeffs
        deg = len(c)
        s = self._s
        while len(s) <= n:
            k = len(s)
            if k <= deg:
                acc = -k * c[k - 1]
                for j in range(1, k):
                    acc -= c[j - 1] * s[k - j]
            else:
                acc = 0
                for j in range(1, deg + 1):
                    acc -= c[j - 1] * s[k - j]
            s.append(acc)
        return s[n]


_power_sum_cache = {}


def power_sum_eval(poly, n: int) -> int:
    """rho_n: sum of n-th powers of the roots; poly is a FrobeniusPoly or a
    sequence of trailing coefficients (monic leading 1 implied)."""
    coeffs = tuple(poly.coeffs) if isinstance(poly, FrobeniusPoly) else tuple(int(c) for c in poly)
    ps = _power_sum_cache.get(coeffs)
    if ps is None:
        ps = _power_sum_cache[coeffs] = PowerSums(coeffs)
    return ps.rho(n)


# ---------------------------------------------------------------------------
# Frobenius characteristic polynomial recovery


@dataclass(frozen=True)
class FrobeniusPoly:
    """Monic integer polynomial X^(2g) + c_1 X^(2g-1) + ... + c_2g whose
    roots are the Weil numbers of the curve over F_q."""

    q: int
    genus: int
    coeffs: tuple  # (c_1, ..., c_2g)

    def __post_init__(self):
        if len(self.coeffs) != 2 * self.genus:
            raise DomainError("coefficient count must be 2*genus")
        check_functional_equation(self.coeffs, self.q, self.genus, strict=True)

    def rho(self, n: int) -> int:
        return power_sum_eval(self, n)


def check_functional_equation(coeffs, q: int, genus: int, strict: bool = False) -> bool:
    """c_{2g-k} = q^(g-k) c_k for 0 <= k <= g (c_0 = 1)."""
    full = (1,) + tuple(coeffs)
    ok = all(full[2 * genus - k] == q ** (genus - k) * full[k] for k in range(genus + 1))
    if strict and not ok:
        raise DomainError("functional-equation symmetry violated")
    return ok


def newton_coeffs_from_power_sums(S, upto: int):
    """c_1..c_upto from power sums S[1..upto] (S[0] unused) over ZZ."""
    c = [1]
    for k in range(1, upto + 1):
        acc = S[k]
        for j in range(1, k):
            acc += c[j] * S[k - j]
        if acc % k != 0:
            raise ValidationFailed(f"Newton step {k} not divisible by {k}")
        c.append(-acc // k)
    return c[1:]


def frobenius_charpoly(curve: ASCurve, counts=None) -> FrobeniusPoly:
    """Recover the Weil polynomial of y^p - y = f from affine counts.

    Counts over F_{q^n} for n = 1..g give c_1..c_g by Newton's identities,
    the functional equation fills the rest, and the counts at g+1, g+2
    validate the single-point-at-infinity assumption.
    """
    if curve.e_kind != "p":
        raise DomainError("charpoly recovery needs the prime form y^p - y = f")
    if curve.degree % curve.p == 0:
        raise DomainError("deg f must be coprime to p")
    g = genus_as(curve)
    q = curve.q
    if counts is None:
        counts = [affine_count(curve, n) for n in range(1, g + 3)]
    if len(counts) < g + 2:
        raise DomainError("need counts for n = 1..g+2")
    S = [0] + [q ** (n + 1) - counts[n] for n in range(len(counts))]
    c = newton_coeffs_from_power_sums(S, g) if g else []
    full = [1] + list(c) + [0] * g
    for k in range(g):
        full[2 * g - k] = q ** (g - k) * full[k]
    poly = FrobeniusPoly(q, g, tuple(full[1:]))
    for n in (g + 1, g + 2):
        if poly.rho(n) != S[n]:
            raise ValidationFailed(
                f"predicted power sum at n={n} is {poly.rho(n)}, counted {S[n]}"
            )
    return poly


def is_supersingular(poly, p: int, r: int) -> bool:
    """Stichtenoth-Xing divisibility: p^ceil(k*r/2) | c_k for 1 <= k <= g.

    Accepts a FrobeniusPoly or a plain sequence of trailing coefficients of
    even length 2g (table polynomials are factors of Weil polynomials and
    need not satisfy the functional equation themselves).
    """
    coeffs = poly.coeffs if isinstance(poly, FrobeniusPoly) else tuple(poly)
    if len(coeffs) % 2:
        raise DomainError("even degree required")
    g = len(coeffs) // 2
    for k in range(1, g + 1):
        e = -(-k * r // 2)  # ceil
        if coeffs[k - 1] % p**e != 0:
            return False
    return True
