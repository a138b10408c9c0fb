"""
The difference formula for P - H on random monomial filtrations
===============================================================

For each random pair of monomial ideals with a monomial complete reduction,
compare Delta^2 (P - H)(n) with the length of F(n + 2e)/J F(n + e) corrected
by the Kirby-Mehran homology.
"""

import random
import sys
from pathlib import Path

from multifilt import Filtration, PolyRing, fit_polynomial, huneke_identity_check, search_monomial_reduction

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))
from oracles import random_simplex_pair  # noqa: E402

rng = random.Random(7)
R = PolyRing(2)
seen = set()
shown = 0
while shown < 4:
    g1, g2 = random_simplex_pair(rng, 4)
    F = Filtration([R.ideal(g1), R.ideal(g2)])
    if repr(F) in seen:
        continue
    seen.add(repr(F))
    A = search_monomial_reduction(F)
    if A is None:
        continue
    shown += 1
    P = fit_polynomial(F, 2)
    print(F)
    print("  reduction", A.describe(R), " P:", P.as_text())
    for n in [(0, 0), (1, 0), (0, 1), (2, 2)]:
        c = huneke_identity_check(F, A, P, n)
        print(f"  n={n}: lhs {c.lhs:>3}  quotient {c.quotient:>3}  homology {c.homology}  "
              f"{'ok' if c.holds else 'MISMATCH'}")
