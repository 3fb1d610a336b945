"""Walkthrough: the four ternary negacyclic families.

Each builder re-derives its eligibility facts, constructs the code and its
dual, and attaches the parameter claims that the verification harness checks.
Run:  python demos/02_code_families.py
"""

from negacyclic import (build_family1, build_family2, build_family3,
                        build_family4, family1_eligible, family4_multiplier)

# Family 1: irreducible negacyclic codes of length 2*rho with a GF(9)
# companion of length rho.  Eligibility is a condition on ord_rho(3).
for rho in (5, 13):
    e = family1_eligible(rho)
    print(f"rho={rho}: rho mod 12 = {e.rho_mod_12}, ord_rho(3) = {e.ord_rho_3},"
          f" eligible case = {e.case}")
b1 = build_family1(5)
print("family 1 at rho=5:")
print("  code:", b1.code, " dual:", b1.dual)
print("  companion over GF(9):", b1.companion, " dual:", b1.companion_dual)
print("  third odd coset exponent h =", b1.h_exponent)
print("  claims:", {k: c.to_json() for k, c in b1.claims.items()})

# Family 2: check coset C_1 mod 2n for n | 3^l + 1.  The three variants
# (n = (3^l+1)/2, /4, or 3^l+1) carry different dual claims.
for ell, n in ((3, 14), (3, 28), (5, 61)):
    b2 = build_family2(ell, n)
    print(f"family 2 (l={ell}, n={n}): {b2.code}, variant={b2.variant}")
    for name, claim in b2.claims.items():
        print("   ", name, claim.to_json())

# Family 3: check lcm of the minimal polynomials at exponents 1 and 2n-1.
b3 = build_family3(4, 40)
print("family 3 (m=4, n=40):", b3.code, "dual:", b3.dual)

# Family 4: generator collects the odd cosets with digit sum j mod 4; the
# dual of the j=1 code is the j=3 code, and the digit-class multipliers hand
# the BCH bound a better vantage point.
b41 = build_family4(1, 5)
b43 = build_family4(3, 5)
print("family 4 (m=5): dims", b41.code.k, "and", b43.code.k)
print("  dual(j=1) has the j=3 zero set:",
      b41.code.dual().zero_leaders == b43.code.zero_leaders)
for j, b in ((1, b41), (3, b43)):
    v, guaranteed = family4_multiplier(j, 5)
    print(f"  j={j}: multiplier v={v} guarantees d >= {guaranteed}; "
          f"the run it exposes actually gives {b.code.bch_bound(v)}")
