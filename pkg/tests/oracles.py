"""Brute-force reference implementations used only by the tests.

Ideals are represented as explicit finite sets of exponents (or values)
inside a bounding box, so none of the staircase or conductor bookkeeping of
the package is reused.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction


# staircase backend ----------------------------------------------------------------


class BoxIdeal:
    """Monomial ideal of k[[x,y]]/Q restricted to total degree <= bound."""

    def __init__(self, members, quotient, bound):
        self.bound = bound
        self.quotient = tuple(quotient)
        self.members = frozenset(m for m in members if sum(m) <= bound) | self._killed(bound)

    def _killed(self, bound):
        return frozenset(m for m in _all(bound) if any(_div(q, m) for q in self.quotient))

    @classmethod
    def from_gens(cls, gens, quotient, bound):
        mem = [m for m in _all(bound) if any(_div(g, m) for g in gens)]
        return cls(mem, quotient, bound)

    def __contains__(self, m):
        return m in self.members

    def sum(self, other):
        return BoxIdeal(self.members | other.members, self.quotient, self.bound)

    def product(self, other):
        out = {(a[0] + b[0], a[1] + b[1]) for a in self.members for b in other.members}
        return BoxIdeal(out, self.quotient, self.bound)

    def intersect(self, other):
        return BoxIdeal(self.members & other.members, self.quotient, self.bound)

    def colon(self, other_gens, valid_degree):
        """Members of (self : other) up to valid_degree, judged by explicit translation."""
        return {m for m in _all(valid_degree)
                if all((m[0] + g[0], m[1] + g[1]) in self.members for g in other_gens)}

    def colength(self):
        return sum(1 for m in _all(self.bound) if m not in self.members)


def _all(bound):
    return [(a, t - a) for t in range(bound + 1) for a in range(t + 1)]


def _div(a, b):
    return a[0] <= b[0] and a[1] <= b[1]


def in_newton_hull(m, gens) -> bool:
    """m lies in conv(gens) + R_{>=0}^2, decided pair by pair with exact arithmetic."""
    for g in gens:
        if _div(g, m):
            return True
    for a, b in itertools.combinations(gens, 2):
        # need t in [0,1] with m >= t a + (1 - t) b coordinatewise
        lo, hi = Fraction(0), Fraction(1)
        for i in range(2):
            coef = a[i] - b[i]          # m_i - b_i >= t * coef
            rhs = m[i] - b[i]
            if coef > 0:
                hi = min(hi, Fraction(rhs, coef))
            elif coef < 0:
                lo = max(lo, Fraction(rhs, coef))
            elif rhs < 0:
                lo, hi = Fraction(1), Fraction(0)
        if lo <= hi:
            return True
    return False


# semigroup backend ------------------------------------------------------------


def semigroup_members(gens, bound):
    ok = [False] * (bound + 1)
    ok[0] = True
    for v in range(1, bound + 1):
        ok[v] = any(v >= a and ok[v - a] for a in gens)
    return {v for v in range(bound + 1) if ok[v]}


class ValueIdeal:
    def __init__(self, values, S, bound):
        self.S = S
        self.bound = bound
        self.values = frozenset(v for v in values if v <= bound)

    @classmethod
    def from_gens(cls, gens, S, bound):
        return cls({g + s for g in gens for s in S if g + s <= bound}, S, bound)

    def sum(self, other):
        return ValueIdeal(self.values | other.values, self.S, self.bound)

    def product(self, other):
        return ValueIdeal({a + b for a in self.values for b in other.values}, self.S, self.bound)

    def intersect(self, other):
        return ValueIdeal(self.values & other.values, self.S, self.bound)

    def colon(self, other_gens, valid):
        return {v for v in self.S if v <= valid and all(v + g in self.values for g in other_gens)}

    def colength(self):
        return len(self.S - self.values)


# random generators --------------------------------------------------------------


def random_staircase_gens(rng: random.Random, max_exp=6, m_primary=True):
    gens = {(rng.randint(0, max_exp), rng.randint(0, max_exp)) for _ in range(rng.randint(1, 4))}
    gens.discard((0, 0))
    if m_primary:
        gens.add((rng.randint(1, max_exp), 0))
        gens.add((0, rng.randint(1, max_exp)))
    return sorted(gens) or [(1, 1)]


def random_simplex_pair(rng: random.Random, max_exp=4, bias=0.8):
    """Two m-primary ideals that usually share a monomial complete reduction.

    With probability ``bias`` both ideals are pure powers x^(p k_i), y^(q k_i)
    of a common slope plus random monomials above the Newton segment;
    otherwise they are uniform random m-primary ideals.
    """
    if rng.random() < bias:
        p, q = rng.choice([(1, 1), (1, 2), (2, 1)])
        kmax = max_exp // max(p, q)
        out = []
        for _ in range(2):
            k = rng.randint(1, kmax)
            a, b = p * k, q * k
            above = [(i, j) for i in range(a + 1) for j in range(b + 1)
                     if i * b + j * a >= a * b and (i, j) not in ((a, 0), (0, b))]
            extra = rng.sample(above, rng.randint(0, min(3, len(above))))
            out.append([(a, 0), (0, b)] + extra)
        return out
    return [random_staircase_gens(rng, max_exp) for _ in range(2)]


def random_semigroup(rng: random.Random):
    while True:
        gens = sorted(set(rng.sample(range(2, 9), rng.randint(2, 3))))
        if math.gcd(*gens) == 1:
            return tuple(gens)
