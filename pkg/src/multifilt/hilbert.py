"""Hilbert functions and Bhattacharya polynomials of multigraded filtrations.

The polynomial is stored in the signed binomial basis

    P(n) = sum_{|a| <= d} (-1)^(d - |a|) e_a  prod_i C(n_i + a_i - 1, a_i)

and fitted exactly from sampled colengths.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .filtration import NotAdmissibleError, add, box_points, diag, scale, unit
from .ideals import is_infinite
from .linalg import InconsistentSystemError, SingularSystemError, solve_exact
from .region import Region, region_from_predicate
from .report import TheoremReport


class FitError(RuntimeError):
    pass


def binom(m: int, k: int) -> int:
    """C(m, k) as a polynomial in m; valid for negative m."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= m - i
    return num // math.factorial(k)


def alphas(s: int, d: int) -> list:
    """Exponent vectors with |a| <= d, by total degree descending then lex descending."""
    out = [a for a in itertools.product(range(d + 1), repeat=s) if sum(a) <= d]
    return sorted(out, key=lambda a: (sum(a), a), reverse=True)


def basis_value(alpha, n) -> int:
    v = 1
    for a, x in zip(alpha, n):
        v *= binom(x + a - 1, a)
    return v


@dataclass(frozen=True)
class HilbertPoly:
    s: int
    d: int
    coeffs: dict
    base_offset: int = field(default=0, compare=False)
    validation_margin: int = field(default=0, compare=False)

    def __call__(self, n) -> int:
        d = self.d
        return sum((-1) ** (d - sum(a)) * e * basis_value(a, n) for a, e in self.coeffs.items())

    def e(self, alpha) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    @property
    def constant(self) -> int:
        """e_0 of the all-zero index."""
        return self.e((0,) * self.s)

    def items(self):
        return [(a, self.coeffs.get(a, 0)) for a in alphas(self.s, self.d)]

    def weighted_top_sum(self) -> Fraction:
        """sum over |a| = d of d! e_a / (a_1! ... a_s!); equals Delta^d P."""
        total = Fraction(0)
        for a, e in self.items():
            if sum(a) == self.d:
                total += Fraction(math.factorial(self.d) * e, math.prod(math.factorial(x) for x in a))
        return total

    def classical(self) -> list:
        """[e_0, ..., e_d] of the usual one-graded form; s must be 1."""
        if self.s != 1:
            raise ValueError("classical coefficients need s == 1")
        return [self.e((self.d - i,)) for i in range(self.d + 1)]

    def as_text(self) -> str:
        body = ", ".join(f"({','.join(map(str, a))}):{e}" for a, e in self.items())
        return "e = {" + body + "}"

    def to_dict(self) -> dict:
        return {"s": self.s, "d": self.d,
                "coefficients": [[list(a), e] for a, e in self.items()],
                "base_offset": self.base_offset, "validation_margin": self.validation_margin}


def hilbert_function(F, n) -> int:
    length = F(n).colength()
    if is_infinite(length):
        raise NotAdmissibleError(f"F{tuple(n)} is not m-primary")
    return length


# difference operators -----------------------------------------------------------


def delta(f, k: int, n) -> int:
    """k-fold diagonal difference of f at n, via the binomial expansion."""
    if k < 0:
        raise ValueError("k must be >= 0")
    s = len(n)
    return sum((-1) ** (k - j) * math.comb(k, j) * f(add(n, diag(s, j))) for j in range(k + 1))


def delta_recursive(f, k: int, n) -> int:
    if k == 0:
        return f(n)
    s = len(n)
    step = lambda m: f(add(m, diag(s, 1))) - f(m)  # noqa: E731
    return delta_recursive(step, k - 1, n)


# fitting --------------------------------------------------------------------


def fit_function(h, s: int, d: int, base_offset: int = 8, validation_margin: int = 5,
                 max_doublings: int = 6) -> HilbertPoly:
    """Exact polynomial in the signed binomial basis agreeing with h far out."""
    if d < 0:
        raise ValueError("degree must be >= 0")
    if base_offset < 1:
        raise ValueError("base_offset must be >= 1")
    unknowns = alphas(s, d)
    offset = base_offset
    for _ in range(max_doublings + 1):
        grid = [add(diag(s, offset), b) for b in box_points(s, d)]
        rows = [[(-1) ** (d - sum(a)) * basis_value(a, n) for a in unknowns] for n in grid]
        try:
            sol = solve_exact(rows, [h(n) for n in grid])
        except SingularSystemError as exc:  # cannot happen on a full tensor grid
            raise FitError(f"internal error: {exc}") from exc
        except InconsistentSystemError:
            offset *= 2
            continue
        if all(x.denominator == 1 for x in sol):
            P = HilbertPoly(s, d, {a: int(x) for a, x in zip(unknowns, sol)}, offset, validation_margin)
            check = [add(diag(s, offset + validation_margin), b) for b in box_points(s, d + 1)]
            if all(P(n) == h(n) for n in check):
                return P
        offset *= 2
    raise FitError(f"no degree-{d} polynomial fits the tail up to offset {offset // 2}; "
                   "is the declared dimension right?")


def fit_polynomial(F, d: int | None = None, base_offset: int = 8, validation_margin: int = 5,
                   max_doublings: int = 6) -> HilbertPoly:
    """Fit the Hilbert polynomial of F; d defaults to the ring's dimension."""
    if d is None:
        d = F.ring.dimension
    if d not in (1, 2):
        raise ValueError("only dimensions 1 and 2 are supported")
    return fit_function(lambda n: hilbert_function(F, n), F.s, d, base_offset,
                        validation_margin, max_doublings)


def fit_one_graded(h, d: int, **kw) -> HilbertPoly:
    return fit_function(lambda n: h(n[0]), 1, d, **kw)


# coefficient identities -----------------------------------------------------


@dataclass
class LeadingCoefficientReport:
    weighted_top_sum: int
    delta_d_samples: list
    product_e0: int
    product_ed: int
    constant: int
    diagonal_ed: int
    kind: str

    @property
    def leading_holds(self) -> bool:
        return (self.weighted_top_sum == self.product_e0
                and all(v == self.product_e0 for v in self.delta_d_samples))

    @property
    def constant_holds(self) -> bool:
        if self.constant != self.diagonal_ed:
            return False
        return self.kind != "powers" or self.constant == self.product_ed

    @property
    def holds(self) -> bool:
        return self.leading_holds and self.constant_holds


def leading_coefficient_identity(F, P: HilbertPoly | None = None, **fit_kw) -> LeadingCoefficientReport:
    """Compare the top and constant coefficients of P with independent one-graded fits.

    The right-hand sides come from n -> colength((I_1 ... I_s)^n) and
    n -> colength(F(n e)), fitted on their own.
    """
    if P is None:
        P = fit_polynomial(F, **fit_kw)
    d = P.d
    prod = F.ideals[0]
    for I in F.ideals[1:]:
        prod = prod * I
    powers = {}

    def prod_len(k):
        if k <= 0:
            return 0
        if k not in powers:
            powers[k] = prod.power(k).colength()
        return powers[k]

    Q = fit_one_graded(prod_len, d, **fit_kw)
    D = fit_one_graded(lambda k: hilbert_function(F, diag(F.s, k)), d, **fit_kw)
    samples = [delta(P, d, n) for n in [diag(P.s, 0), diag(P.s, 3)] + [unit(P.s, i) for i in range(P.s)]]
    wts = P.weighted_top_sum()
    return LeadingCoefficientReport(
        weighted_top_sum=int(wts) if wts.denominator == 1 else wts,
        delta_d_samples=samples,
        product_e0=Q.classical()[0],
        product_ed=Q.classical()[d],
        constant=P.constant,
        diagonal_ed=D.classical()[d],
        kind=F.kind,
    )


# vanishing regions ------------------------------------------------------------


def vanishing_region(f, j: int, s: int, box: int = 6, margin: int = 3) -> Region:
    """Region of n with Delta^j f(m) = 0 for all m in [n, box + margin]^s."""
    if j == 0:
        return region_from_predicate(lambda m: f(m) == 0, s, box, margin)
    return region_from_predicate(lambda m: delta(f, j, m) == 0, s, box, margin)


def difference_function(F, P: HilbertPoly):
    """n -> P(n) - H(n)."""
    return lambda n: P(n) - hilbert_function(F, n)


# vanishing-coefficient theorems -----------------------------------------------


def verify_vanishing_theorem(F, d: int | None = None, box: int = 6, P: HilbertPoly | None = None) -> TheoremReport:
    """Check the conclusions that follow from e_{(d-1)e_i}(F) = 0 for all i.

    d = 1: P = H on N^s.  d = 2 (with H^1 vanishing): P = H on N^s and
    e_0 = 0.  For s = 2 additionally F(r, s) = I^r J^s, both base ideals are
    parameter ideals, and every e_a with |a| <= d - 1 vanishes.
    """
    if d is None:
        d = F.ring.dimension
    if P is None:
        P = fit_polynomial(F, d)
    s = F.s
    rep = TheoremReport("vanishing-coefficients")
    rep.hypothesis("Cohen-Macaulay ring", F.ring.is_cohen_macaulay)
    rep.hypothesis("e_{(d-1)e_i}(F) = 0 for all i",
                   all(P.e(scale(d - 1, unit(s, i))) == 0 for i in range(s)), "fitted polynomial")
    if d == 2:
        from .kmcomplex import h1_vanishing_on_box
        if rep.verdict == "consistent":
            rep.hypothesis("H^1 of the Rees algebra vanishes", h1_vanishing_on_box(F, box), f"[0,{box}]^{s}")
    if rep.verdict != "consistent":
        return rep
    pts = box_points(s, box)
    rep.conclusion(f"P = H on [0,{box}]^{s}", all(P(n) == hilbert_function(F, n) for n in pts))
    rep.conclusion("e_0(F) = 0", P.constant == 0)
    if s == 2:
        rep.conclusion(f"F(r,s) = I^r J^s on [0,{box}]^2", all(F(n) == F.power_product(n) for n in pts))
        rep.conclusion("base ideals are parameter ideals",
                       all(I.num_generators == d for I in F.ideals))
        rep.conclusion("e_a = 0 for |a| <= d - 1", all(e == 0 for a, e in P.items() if sum(a) <= d - 1))
    return rep
