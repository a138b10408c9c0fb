"""
When is the bigraded Rees algebra Cohen-Macaulay?
=================================================

Two filtrations on k[[x, y]]:  m^2 with (x^2, y^2), and m^2 with m^3.
The first has nonzero first local cohomology, so its postulation region
is not all of N^2.  The second passes every test.
"""

from multifilt import (Filtration, PolyRing, fit_polynomial, make_complete_reduction, postulation_region,
                       rees_h1, reduction_vectors, verify_dim2_bijection, verify_dim2_equivalences)

R = PolyRing(2)
m = R.maximal_ideal()
sq = [(2, 0), (0, 2)]

for label, J, second_row in [("m^2, (x^2, y^2)", R.ideal(sq), sq),
                             ("m^2, m^3", m ** 3, [(3, 0), (0, 3)])]:
    print("=" * 60)
    print(label)
    F = Filtration([m ** 2, J])
    P = fit_polynomial(F, 2)
    print("  P:", P.as_text())

    # lambda(F~(n)/F(n)) along the second axis; F~ is the Ratliff-Rush closure
    print("  rees_h1(0, k), k = 0..4:", [rees_h1(F, (0, k)) for k in range(5)])

    A = make_complete_reduction(F, [sq, second_row])
    print("  reduction", A.describe(R), "->", reduction_vectors(A, F).describe())
    print("  postulation", postulation_region(F, P).describe())

    print()
    print(verify_dim2_bijection(F, A, P=P))
    print()
    print(verify_dim2_equivalences(F, P=P, reductions=[A]))
