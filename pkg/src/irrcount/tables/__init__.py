"""Built-in closed-form count tables.

One module per published table; each defines TABLE (and optionally extra
data) in the layout consumed by engine_smallchar.paper_table:

    {
      "ident": str, "q": int, "p": int, "r": int,
      "modulus": int,          # residue modulus for n (1 = all n)
      "min_n": int,
      "polys": {name: trailing-coefficient tuple},
      "basis": (name, ...),    # order of coefficient vectors
      "scale": int,            # entries are F = q^(n-l) - (1/(q^l*scale)) vec.rho
      "entries": {t-tuple: [(classes-tuple-or-"all", coeff-vector), ...]},
    }

t-tuples may contain None for wildcard positions.  The divisor exponent l of
an entry is the number of non-None positions.
"""

from . import char3, q5l4, t3traces, t4coeffs_general, t4traces, t5coeffs_general, t5traces

ALL_TABLES = {}
for _mod in (t3traces, t4traces, t5traces, t4coeffs_general, t5coeffs_general, q5l4, char3):
    for _t in _mod.TABLES:
        ALL_TABLES[_t["ident"]] = _t
