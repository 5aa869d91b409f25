"""Closed-form count expressions and their serialization.

A CountFormula evaluates F(n) = (q^n + sum coef * rho_n(poly)) / q^l exactly,
where each poly is a monic integer polynomial given by its trailing
coefficients and rho_n is the power-sum of its roots.  Serialization is
canonical JSON (sorted keys, no whitespace, big integers as decimal strings)
so formula files are diffable and hashable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .artin_schreier import power_sum_eval
from .errors import DomainError, NonIntegralResult, ParseError, ValidityError


@dataclass(frozen=True)
class Validity:
    modulus: int = 1          # residue modulus for n (1 = no constraint)
    classes: tuple = (0,)     # allowed residues of n mod modulus
    min_n: int = 1

    def check(self, n: int) -> bool:
        return n >= self.min_n and (self.modulus == 1 or n % self.modulus in self.classes)


@dataclass(frozen=True)
class CountFormula:
    q: int
    p: int
    r: int
    divisor_exp: int                   # l: divide by q^l
    terms: tuple = ()                  # ((Fraction coef, coeff-tuple poly), ...)
    validity: Validity = field(default_factory=Validity)

    def __post_init__(self):
        for coef, poly in self.terms:
            if not isinstance(coef, Fraction):
                raise DomainError("coefficients must be Fractions")
            if not all(isinstance(c, int) for c in poly):
                raise DomainError("polynomial coefficients must be ints")

    def eval(self, n: int) -> int:
        if not self.validity.check(n):
            raise ValidityError(
                f"n={n} outside validity (mod {self.validity.modulus} in "
                f"{self.validity.classes}, n >= {self.validity.min_n})"
            )
        total = Fraction(self.q) ** n
        for coef, poly in self.terms:
            total += coef * power_sum_eval(poly, n)
        total /= Fraction(self.q) ** self.divisor_exp
        if total.denominator != 1:
            raise NonIntegralResult(f"formula value {total} at n={n} is not an integer")
        return int(total)

    def merged_with(self, other: "CountFormula") -> "CountFormula":
        """Term-list union (used for wildcard marginalization)."""
        if (self.q, self.p, self.r, self.divisor_exp) != (other.q, other.p, other.r, other.divisor_exp):
            raise DomainError("incompatible formulas")
        acc = {}
        for coef, poly in self.terms + other.terms:
            acc[poly] = acc.get(poly, Fraction(0)) + coef
        terms = canonical_terms((c, p) for p, c in acc.items() if c)
        return CountFormula(self.q, self.p, self.r, self.divisor_exp, terms, self.validity)


def canonical_terms(terms):
    """Sort by polynomial degree, then coefficient list, and drop zeros."""
    cleaned = [(Fraction(c), tuple(int(x) for x in p)) for c, p in terms if c]
    cleaned.sort(key=lambda t: (len(t[1]), t[1]))
    return tuple(cleaned)


@dataclass(frozen=True)
class FormulaSet:
    """All q^l formulas for one residue class nbar of n mod p."""

    q: int
    p: int
    r: int
    l: int
    nbar: int
    formulas: dict = field(default_factory=dict)  # t tuple -> CountFormula

    def formula(self, t) -> CountFormula:
        t = tuple(t)
        if t not in self.formulas:
            raise DomainError(f"no formula for t={t}")
        return self.formulas[t]

    def eval(self, t, n: int) -> int:
        return self.formula(t).eval(n)


# ---------------------------------------------------------------------------
# serialization


def _formula_obj(f: CountFormula):
    return {
        "q": f.q,
        "p": f.p,
        "r": f.r,
        "divisor_exp": f.divisor_exp,
        "validity": {
            "modulus": f.validity.modulus,
            "classes": sorted(f.validity.classes),
            "min_n": f.validity.min_n,
        },
        "terms": [
            {"num": str(c.numerator), "den": str(c.denominator), "poly": [str(x) for x in p]}
            for c, p in canonical_terms(f.terms)
        ],
    }


def serialize(formula: CountFormula) -> str:
    return json.dumps(_formula_obj(formula), sort_keys=True, separators=(",", ":"))


def serialize_set(fs: FormulaSet) -> str:
    obj = {
        "q": fs.q,
        "p": fs.p,
        "r": fs.r,
        "l": fs.l,
        "nbar": fs.nbar,
        "formulas": {
            ",".join(str(x) for x in t): _formula_obj(f) for t, f in sorted(fs.formulas.items())
        },
    }
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _parse_formula_obj(obj, where: str) -> CountFormula:
    try:
        q, p, r = int(obj["q"]), int(obj["p"]), int(obj["r"])
        dexp = int(obj["divisor_exp"])
        v = obj["validity"]
        validity = Validity(int(v["modulus"]), tuple(int(c) for c in v["classes"]), int(v["min_n"]))
        terms = []
        for k, t in enumerate(obj["terms"]):
            coef = Fraction(int(t["num"]), int(t["den"]))
            poly = tuple(int(x) for x in t["poly"])
            if len(poly) == 0 and coef:
                raise ParseError("empty polynomial term", f"{where}.terms[{k}]")
            terms.append((coef, poly))
    except ParseError:
        raise
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed formula: {exc}", where) from exc
    return CountFormula(q, p, r, dexp, canonical_terms(terms), validity)


def parse(text: str) -> CountFormula:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"char {exc.pos}") from exc
    if not isinstance(obj, dict):
        raise ParseError("top-level object expected", "$")
    return _parse_formula_obj(obj, "$")


def parse_set(text: str) -> FormulaSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"char {exc.pos}") from exc
    try:
        q, p, r, l, nbar = (int(obj[k]) for k in ("q", "p", "r", "l", "nbar"))
        raw = obj["formulas"]
    except (KeyError, ValueError, TypeError) as exc:
        raise ParseError(f"malformed formula set: {exc}", "$") from exc
    formulas = {}
    for key, fo in raw.items():
        t = tuple(int(x) for x in key.split(",")) if key else ()
        formulas[t] = _parse_formula_obj(fo, f"$.formulas[{key!r}]")
    return FormulaSet(q, p, r, l, nbar, formulas)
