"""Normal-form arithmetic in the first Weyl algebra.

Everything is exact: coefficients are rationals, and every element is
kept in the canonical sum-of-Y^i-X^j form, so equality is literal.
"""

from weyl1 import H, ONE, X, Y, build_endo, apply_endo, commutator, theta, theta_prime

print("The defining relation, as a commutator:")
print("  [Y, X] =", commutator(Y, X))

print("\nProducts are rewritten into normal order (Y's left of X's):")
print("  X * Y          =", X * Y)
print("  X^2 * Y^2      =", X**2 * Y**2)
print("  (Y*X) * (Y*X)  =", H * H)

print("\nWith H = Y*X, the factorial-style ladder products:")
for i in range(1, 4):
    lhs = Y**i * X**i
    rhs = ONE
    for k in range(i):
        rhs = rhs * (H + k)
    print(f"  Y^{i}*X^{i} = H(H+1)...(H+{i-1})  ->  {lhs}  ==  {rhs}:", lhs == rhs)

print("\nThe grading-reversing automorphism theta and anti-automorphism theta':")
print("  theta:  X ->", theta(X), ", Y ->", theta(Y), ", H ->", theta(H))
print("  theta': X ->", theta_prime(X), ", Y ->", theta_prime(Y), ", H ->", theta_prime(H))
print("  theta^2 acts as the sign flip: theta(theta(X)) =", theta(theta(X)))

print("\nA commutator-one pair defines an endomorphism X -> x, Y -> y:")
e = build_endo(X, Y + X**2)
print("  pair (X, Y + X^2) verified:", e.verified)
print("  image of Y*X:", apply_endo(e, H))
print("  the relation is preserved:", apply_endo(e, commutator(Y, X)))

bad = build_endo(X, X)
print("  pair (X, X) verified:", bad.verified, "| commutator defect:", bad.defect)
