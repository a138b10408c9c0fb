"""
Reduction vectors and postulation vectors in a one-dimensional ring
===================================================================

R = k[[t^3, t^4, t^5]], I = (t^3, t^4), J = (t^3).  In dimension one the
two regions coincide for every complete reduction.
"""

from multifilt import (Filtration, SemigroupRing, fit_polynomial, hilbert_function, make_complete_reduction,
                       postulation_region, reduction_vectors, verify_dim1_correspondence)
from multifilt.filtration import box_points

S = SemigroupRing((3, 4, 5))
print("gaps of the semigroup:", S.gaps(), " conductor:", S.frobenius + 1)

I, J = S.ideal([3, 4]), S.ideal([3])
print("lengths of R/I^n:", [(I ** n).colength() for n in range(1, 8)])

# the bigraded filtration F(n1, n2) = I^n1 J^n2
F = Filtration([I, J])
P = fit_polynomial(F, 1)
print("\nHilbert polynomial:", P.as_text())

print("\n n      H(n)  P(n)")
for n in box_points(2, 3):
    h, p = hilbert_function(F, n), P(n)
    print(f" {n}  {h:>4}  {p:>4}" + ("   <- differ" if h != p else ""))

# y = t^3 * t^3 generates the complete reduction
A = make_complete_reduction(F, [[3], [3]])
print("\ncomplete reduction", A.describe(S), "y =", A.y, "certified:", A.certified)
print("reduction vectors: ", reduction_vectors(A, F).describe())
print("postulation vectors:", postulation_region(F, P).describe())

print()
print(verify_dim1_correspondence(F, A, P=P))
