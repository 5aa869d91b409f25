"""Trace functions, characteristic polynomials, Newton-identity changes of
variable, binomial utilities, and the degree-lowered trace identities in
characteristics 2 and 3.

Trace values are stored unsigned in F_q; the (-1)^l sign of the
characteristic polynomial is applied when extracting them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError
from .exprs import add_expr, add_term, mono
from .ff_core import Tower


# ---------------------------------------------------------------------------
# characteristic polynomial and trace vectors (scalar)


def char_poly(tw: Tower, a_idx: int):
    """Coefficients (low -> high, leading 1) of prod_i (x - a^(q^i))."""
    fld = tw.field
    poly = [1]
    conj = a_idx
    for i in range(tw.n):
        neg = fld.neg(conj)
        poly = [0] + poly
        for k in range(len(poly) - 1):
            poly[k] = fld.add(poly[k], fld.mul(neg, poly[k + 1]))
        if i < tw.n - 1:
            conj = tw.frobenius(conj, 1)
    assert all(c < tw.q for c in poly), "characteristic polynomial not over F_q"
    return tuple(poly)


def trace_vector(tw: Tower, a_idx: int, l: int):
    """(T_1(a), ..., T_l(a)) as F_q indices."""
    if not 1 <= l <= tw.n:
        raise DomainError(f"need 1 <= l <= n, got l={l}, n={tw.n}")
    cp = char_poly(tw, a_idx)
    out = []
    for k in range(1, l + 1):
        c = cp[tw.n - k]
        out.append(c if k % 2 == 0 else tw.base.neg(c))
    return tuple(out)


def power_trace(tw: Tower, a_idx: int, k: int) -> int:
    """T_1(a^k) as an F_q index."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return tw.trace_rel(tw.field.pow(a_idx, k))


# ---------------------------------------------------------------------------
# Newton's identities: between (t_1..t_l) and the power sums (t'_1..t'_l)


def newton_forward(t, q_field):
    """t'_k = p_k(t_1..t_k), the power-sum values, computed in F_q; l < p."""
    p = q_field.char
    l = len(t)
    if l >= p:
        raise DomainError(f"Newton change of variable needs l < p ({l} >= {p})")
    pk = []
    for k in range(1, l + 1):
        acc = _int_mul(q_field, k, t[k - 1])
        for j in range(1, k):
            term = q_field.mul(t[k - 1 - j], pk[j - 1])
            acc = q_field.add(acc, _int_mul(q_field, -((-1) ** (j - 1)), term))
        pk.append(_int_mul(q_field, (-1) ** (k - 1), acc))
    return tuple(pk)


def newton_inverse(tp, q_field):
    """The unique preimage of newton_forward; t_k recovered triangularly."""
    p = q_field.char
    l = len(tp)
    if l >= p:
        raise DomainError(f"Newton change of variable needs l < p ({l} >= {p})")
    t = []
    pk = []
    for k in range(1, l + 1):
        # p_k = (-1)^(k-1) (k t_k - sum_{j<k} (-1)^(j-1) t_{k-j} p_j)
        acc = _int_mul(q_field, (-1) ** (k - 1), tp[k - 1])  # k t_k - sum ...
        for j in range(1, k):
            term = q_field.mul(t[k - 1 - j], pk[j - 1])
            acc = q_field.add(acc, _int_mul(q_field, (-1) ** (j - 1), term))
        kinv = pow(k, -1, p)
        t.append(_int_mul(q_field, kinv, acc))
        pk.append(tp[k - 1])
    return tuple(t)


def _int_mul(q_field, m: int, x):
    """Multiply a field element by an integer (i.e. by m mod p)."""
    m %= q_field.char
    acc = 0
    for _ in range(m):
        acc = q_field.add(acc, x)
    return acc


# ---------------------------------------------------------------------------
# binomial coefficients mod p


def binom_mod_p(n: int, k: int, p: int) -> int:
    """Lucas' theorem."""
    if n < 0 or k < 0:
        raise DomainError("n, k must be >= 0")
    out = 1
    while k or n:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        out = out * (math.comb(ni, ki) % p) % p
        n //= p
        k //= p
    return out


def binom_period(j: int, p: int) -> int:
    """Period in n of binom(n, j) mod p."""
    if j < 1:
        raise DomainError("j must be >= 1")
    e = 0
    while p ** (e + 1) <= j:
        e += 1
    return p ** (1 + e)


# ---------------------------------------------------------------------------
# prescribed-trace specifications


@dataclass(frozen=True)
class TraceSpec:
    """Prescribed values at a set of trace positions; gaps are wildcards."""

    q: int
    values: dict = field(default_factory=dict)  # position (1-based) -> F_q index

    def __post_init__(self):
        pos = sorted(self.values)
        if pos and pos[0] < 1:
            raise DomainError("positions are 1-based")
        for v in self.values.values():
            if not 0 <= v < self.q:
                raise DomainError("prescribed value outside F_q")

    @property
    def positions(self):
        return tuple(sorted(self.values))

    @property
    def max_position(self) -> int:
        return max(self.values, default=0)

    def matches(self, tvec) -> bool:
        """tvec holds T_1..T_m values; positions beyond len(tvec) match 0."""
        for pos, want in self.values.items():
            have = tvec[pos - 1] if pos <= len(tvec) else 0
            if have != want:
                return False
        return True

    @classmethod
    def from_tuple(cls, q, t):
        """Positions 1..l from a tuple; None entries are wildcards."""
        return cls(q, {k + 1: v for k, v in enumerate(t) if v is not None})


# ---------------------------------------------------------------------------
# degree-lowered trace identities, characteristic 2
#
# Each identity rewrites T_l(a_0^2 + a_0 + r_0) as T_1 of a single argument
# in a_0 and auxiliary variables; the builders below return that argument as
# a sparse expression (see exprs).  Binomials appear through B[k] = C(n,k)
# mod 2, and the auxiliary substitutions are:
#   primary:      a_0 = a_1^2+a_1+r_1,  a_0^3 = a_2^2+a_2+r_2,  a_0^5 = a_3^2+a_3+r_3
#   alternative:  a_0^3+a_0 = a_1^2+a_1+r_1,  a_0^5+a_0 = a_2^2+a_2+r_2

CHAR2_AUX = {
    "primary": {1: (), 2: (), 3: (), 4: ("a1", "a2"), 5: ("a1", "a2"),
                6: ("a1", "a2", "a3"), 7: ("a1", "a2", "a3")},
    "alt": {1: (), 2: (), 3: (), 4: ("a1",), 5: ("a1", "a2")},
}

CHAR2_DEFINING = {
    "primary": {"a1": {mono(("a0", 1)): 1, "r": "r1"},
                "a2": {mono(("a0", 3)): 1, "r": "r2"},
                "a3": {mono(("a0", 5)): 1, "r": "r3"}},
    "alt": {"a1": {mono(("a0", 3)): 1, mono(("a0", 1)): 1, "r": "r1"},
            "a2": {mono(("a0", 5)): 1, mono(("a0", 1)): 1, "r": "r2"}},
}


def char2_defining_rhs(param: str, var: str, r: dict):
    """RHS of the defining equation var^2 + var = ... for the substitution."""
    spec = CHAR2_DEFINING[param][var]
    out = {}
    for m, c in spec.items():
        if m == "r":
            add_term(out, mono(), r[c], 2)
        else:
            add_term(out, m, c, 2)
    return out


def char2_linear_arg(l: int, r: dict, B, param: str = "primary"):
    """Argument of T_1 in the linearised form of T_l(a_0^2+a_0+r_0), q=2.

    r maps 'r0'..'r3' to bits, B maps k to C(n,k) mod 2.
    """
    if param not in CHAR2_AUX or l not in CHAR2_AUX[param]:
        raise DomainError(f"no linearised form for l={l}, parameterisation {param!r}")
    r0 = r.get("r0", 0)
    r1 = r.get("r1", 0)
    r2 = r.get("r2", 0)
    r3 = r.get("r3", 0)
    e = {}

    def put(coeff, *pairs):
        add_term(e, mono(*pairs), coeff, 2)

    if l == 1:
        put(r0 * B[1])
    elif l == 2:
        put(1, ("a0", 3))
        put(1, ("a0", 1))
        put(r0 * B[2])
    elif l == 3:
        put(1, ("a0", 5))
        put(1 + r0, ("a0", 1))
        put(r0, ("a0", 3))
        put(r0 * B[3])
    elif l == 4 and param == "primary":
        put(1, ("a2", 3)); put(1, ("a2", 1))
        put(1, ("a1", 3)); put(1, ("a1", 1))
        put(1, ("a0", 7)); put(1, ("a0", 5))
        put(r0 * r1 + r0 * r2 + r1 * r2 + r2
            + (r0 + 1) * (r1 + r2) * B[2] + r0 * B[4])
    elif l == 4:
        put(1, ("a1", 3)); put(1, ("a1", 1))
        put(1, ("a0", 7)); put(1, ("a0", 5))
        put(1 + r0 + r0 * B[2], ("a0", 3))
        put(1 + r0 + r0 * B[2], ("a0", 1))
        put(r0 * B[4] + r1 * B[2])
    elif l == 5 and param == "primary":
        put(r0, ("a2", 3)); put(r0, ("a2", 1))
        put(r0, ("a1", 3)); put(r0, ("a1", 1))
        put(1, ("a0", 9))
        put(r0, ("a0", 7))
        put(r1 + r2 + r0 * B[2], ("a0", 5))
        put(r1 + r2 + r1 * r2 + r0 * r1 * r2
            + r0 * r2 * B[2] + (r0 * r1 + r0 * r2) * B[3] + r0 * B[5])
    elif l == 5:
        put(1, ("a1", 2), ("a2", 1))
        put(1, ("a1", 1), ("a2", 2))
        put(1, ("a0", 9))
        put(1 + r0 + r0 * B[2] + r0 * B[3], ("a0", 1))
        put(r0, ("a1", 3)); put(r0, ("a1", 1))
        put(r0, ("a0", 7))
        put(r0 * B[2], ("a0", 5))
        put(r0 * B[3], ("a0", 3))
        put(r0 * r1 * B[2] + r0 * B[5])
    elif l == 6:
        put(1, ("a3", 3)); put(1, ("a3", 1))
        c = (r1 + r2 + r0 * B[2]) % 2
        put(c, ("a2", 3)); put(c, ("a2", 1))
        put(1, ("a1", 5))
        put(1 + c, ("a1", 3)); put(c, ("a1", 1))
        put(1, ("a0", 11))
        put(1 + c, ("a0", 7))
        # the pointwise check forces r0*(r1+r2+r1*r2) here, without the
        # printed "+1" in the C(n,2) group
        put(r0 * r1 + r0 * r2 + r1 * r2 + r2 * r3
            + (r0 * (r1 + r2 + r1 * r2) + r1 + r2 + r3) * B[2]
            + (r0 * r1 + r0 * r3 + r1) * B[3]
            + r0 * (r1 + r2) * B[4] + r0 * B[6])
    elif l == 7:
        put(r0, ("a3", 3)); put(r0, ("a3", 1))
        c = (r0 * r1 + r0 * r2 + r1 + r3 + r0 * B[3]) % 2
        put(c, ("a2", 3)); put(c, ("a2", 1))
        put(r0, ("a1", 5))
        put(r0 + c, ("a1", 3)); put(c, ("a1", 1))
        put(1, ("a0", 13))
        put(r0 + 1, ("a0", 11))
        put(r1 + r2 + 1 + r0 * B[2], ("a0", 9))
        put(r0 + r1 + r3 + r0 * r1 + r0 * r2 + r0 * B[3], ("a0", 7))
        put(r1 + r0 * r2 + r0 * r3 + r1 * r2 + r1 * r3 + r2 * r3
            + r0 * r1 * r2 + r0 * r2 * r3 + r1 * r2 * r3
            + (r1 + r0 * r3 + r1 * r2 + r1 * r3 + r2 * r3
               + r0 * r1 * r2 + r0 * r1 * r3 + r0 * r2 * r3) * B[2]
            + (r0 * r1 + r0 * r1 * r2) * B[3]
            + (r0 * r1 + r0 * r2) * B[2] * B[3]
            + (r0 * r1 + r0 * r3) * B[4]
            + (r0 * r1 + r0 * r2) * B[5]
            + r0 * B[7])
    return e


def lowered_trace_char2(l, a0_idx, r0, aux, nbar, tw: Tower, param="primary"):
    """Evaluate the linearised T_l(a_0^2 + a_0 + r_0) over F_{2^n}."""
    if tw.q != 2:
        raise DomainError("characteristic-2 identity requires q = 2")
    if l > 7 or l < 1:
        raise DomainError("linearised forms exist for 1 <= l <= 7")
    need = CHAR2_AUX[param][l]
    for v in need:
        if v not in aux or f"r{v[1]}" not in aux:
            raise DomainError(f"missing auxiliary entry {v}")
    B = {k: binom_mod_p(nbar, k, 2) for k in range(1, 8)}
    r = {"r0": r0 % 2}
    assign = {"a0": a0_idx}
    for v in need:
        assign[v] = aux[v]
        r[f"r{v[1]}"] = aux[f"r{v[1]}"] % 2
    arg = char2_linear_arg(l, r, B, param)
    from .exprs import eval_scalar

    return tw.trace_abs(eval_scalar(arg, assign, tw))


# ---------------------------------------------------------------------------
# degree-lowered trace identities, characteristic 3 (l <= 3)


def char3_linear_arg(l: int, r0: int, nbar: int):
    """Argument of T_1 in the linearised T_l(a_0^3 - a_0 + r_0), q = 3.

    nbar is the residue of n mod 9; the 1/n factors need it coprime to 3
    whenever r_0 is nonzero.
    """
    if l not in (1, 2, 3):
        raise DomainError("characteristic-3 forms exist for l <= 3")
    r0 %= 3
    if r0 and nbar % 3 == 0:
        raise DomainError("1/n undefined: n = 0 mod 3 with nonzero r_0")
    ninv = pow(nbar % 3, -1, 3) if nbar % 3 else 0
    e = {}
    if l == 1:
        add_term(e, mono(), r0, 3)
    elif l == 2:
        # pointwise checks force the constant +r0^2 C(n,2)/n
        add_term(e, mono(("a0", 4)), 1, 3)
        add_term(e, mono(("a0", 2)), -1, 3)
        add_term(e, mono(), r0 * r0 * binom_mod_p(nbar, 2, 3) * ninv, 3)
    else:
        # pointwise checks force T_1(a0^5 - a0^7 + ...): the degree-7/5 pair
        # carries the opposite sign to the degree-4/2 pair
        add_term(e, mono(("a0", 7)), -1, 3)
        add_term(e, mono(("a0", 5)), 1, 3)
        add_term(e, mono(("a0", 4)), r0 * (nbar + 1), 3)
        add_term(e, mono(("a0", 2)), -r0 * (nbar + 1), 3)
        add_term(e, mono(), r0 * binom_mod_p(nbar, 3, 3) * ninv, 3)
    return e


def lowered_trace_char3(l, a0_idx, r0, nbar, tw: Tower) -> int:
    if tw.q != 3:
        raise DomainError("characteristic-3 identity requires q = 3")
    arg = char3_linear_arg(l, r0, nbar)
    from .exprs import eval_scalar

    return tw.trace_abs(eval_scalar(arg, {"a0": a0_idx}, tw))
