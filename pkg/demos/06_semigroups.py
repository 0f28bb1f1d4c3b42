"""Numerical-monoid bookkeeping behind the constant-drop arguments.

The degrees attained by a filtered commutative subalgebra form an
additive monoid H of naturals; with g = gcd(H), only finitely many
multiples of g are missing.  The constructive members h_k certify this,
and mu = max h_k with gamma = mu + drop bound where cokernel
representatives live.
"""

from weyl1 import semigroup_analyze

for gens in ({2, 3}, {2}, {4, 6}, {3, 5}, {6, 9, 20}):
    s = semigroup_analyze(gens)
    print(f"<{', '.join(map(str, sorted(gens)))}>:")
    print(f"  gcd g = {s.g}")
    print(f"  gaps (multiples of g missing): {sorted(s.gaps)}  (nu = {s.nu})")
    print(f"  constructive members h_k = {list(s.h_list)}, mu = {s.mu}")
    for h, combo in sorted(s.h_witnesses.items()):
        terms = " + ".join(f"{k}*{g}" for g, k in sorted(combo.items()))
        print(f"    {h} = {terms}")
    print(f"  gamma(drop = -g) = mu - g = {s.gamma_of(-s.g)}")
    print()
