"""Monomial ideals in two exact ring backends.

Staircase backend: power series rings k[[x]] or k[[x, y]], optionally modulo a
monomial ideal.  Monomials are exponent tuples; an ideal is its antichain of
minimal exponents.

Semigroup backend: numerical semigroup rings k[[t^a1, ..., t^ak]].  Monomials
are valuations (integers in the semigroup); an ideal is its value set, stored
as a conductor plus the finite set of values below it.

Neither backend ever materializes a field: lengths of monomial quotients are
lattice-point counts.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class RingMismatchError(ValueError):
    pass


class UnsupportedBackendError(TypeError):
    pass


@functools.total_ordering
class _Infinite:
    """Colength of an ideal that is not primary to the maximal ideal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("INFINITE")


INFINITE = _Infinite()


def is_infinite(value) -> bool:
    return value is INFINITE


# ---------------------------------------------------------------------------
# staircase backend
# ---------------------------------------------------------------------------


def minimalize(exps: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Minimal elements of a set of exponent tuples, sorted lexicographically."""
    pts = sorted(set(tuple(e) for e in exps))
    if not pts:
        return ()
    nv = len(pts[0])
    if nv == 1:
        return (pts[0],)
    if nv == 2:
        out = []
        best_y = None
        for p in pts:  # x ascending, then y ascending
            if best_y is None or p[1] < best_y:
                out.append(p)
                best_y = p[1]
        return tuple(out)
    out = [p for p in pts if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts)]
    return tuple(out)


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def grlex_key(m: tuple[int, ...]):
    """Sort key: total degree ascending, then x-heavier first."""
    return (sum(m), tuple(-v for v in m))


@dataclass(frozen=True)
class PolyRing:
    """k[[x]] or k[[x, y]] modulo an optional monomial ideal.

    ``dimension`` may be given to be validated; it is always derived.
    """

    num_vars: int = 2
    quotient_gens: tuple = ()
    names: tuple = ("x", "y")
    dimension: int | None = None

    def __post_init__(self):
        if self.num_vars not in (1, 2):
            raise ValueError("num_vars must be 1 or 2")
        q = tuple(tuple(int(v) for v in g) for g in self.quotient_gens)
        for g in q:
            if len(g) != self.num_vars or min(g) < 0:
                raise ValueError(f"bad quotient exponent {g}")
        q = minimalize(q)
        if any(sum(g) == 0 for g in q):
            raise ValueError("quotient by the unit ideal")
        object.__setattr__(self, "quotient_gens", q)
        object.__setattr__(self, "names", tuple(self.names[: self.num_vars]))
        dim = self._krull_dimension()
        if self.dimension is not None and self.dimension != dim:
            raise ValueError(f"declared dimension {self.dimension} but the ring has dimension {dim}")
        object.__setattr__(self, "dimension", dim)

    def _krull_dimension(self) -> int:
        if not self.quotient_gens:
            return self.num_vars
        nilpotent = [i for i in range(self.num_vars) if any(
            g[i] > 0 and sum(g) == g[i] for g in self.quotient_gens)]
        if len(nilpotent) != 1 or self.num_vars != 2:
            raise ValueError("quotient must kill a power of exactly one of two variables")
        return 1

    @property
    def is_cohen_macaulay(self) -> bool:
        # k[[x,y]]/Q with x nilpotent is free over k[[y]] iff Q = (x^a)
        return len(self.quotient_gens) <= 1

    @property
    def kind(self) -> str:
        return "staircase"

    # monomials -----------------------------------------------------------
    def is_zero(self, m) -> bool:
        return any(_divides(q, m) for q in self.quotient_gens)

    def mul(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def degree(self, m) -> int:
        return sum(m)

    def monomial_key(self, m):
        return grlex_key(m)

    def monomials_up_to(self, bound: int) -> list:
        """Nonzero monomials of total degree <= bound, in grlex order."""
        if self.num_vars == 1:
            out = [(a,) for a in range(bound + 1)]
        else:
            out = [(a, t - a) for t in range(bound + 1) for a in range(t, -1, -1)]
        return [m for m in out if not self.is_zero(m)]

    def format_monomial(self, m) -> str:
        parts = []
        for name, v in zip(self.names, m):
            if v == 1:
                parts.append(name)
            elif v > 1:
                parts.append(f"{name}^{v}")
        return "*".join(parts) or "1"

    def is_regular_sequence(self, elems: Sequence) -> bool:
        """Syntactic test for monomial regular sequences."""
        elems = [tuple(m) for m in elems]
        if self.quotient_gens:
            # only k[[x,y]]/(x^a)-type quotients are CM; there y^b is regular
            if len(self.quotient_gens) != 1 or len(elems) != 1:
                return False
            q, m = self.quotient_gens[0], elems[0]
            return all(m[i] == 0 for i in range(self.num_vars) if q[i] > 0)
        if len(elems) == 1:
            return not self.is_zero(elems[0])
        if len(elems) == 2 and self.num_vars == 2:
            supp = [frozenset(i for i, v in enumerate(m) if v) for m in elems]
            return all(len(s) == 1 for s in supp) and supp[0] != supp[1]
        return False

    # ideals --------------------------------------------------------------
    def ideal(self, gens: Iterable) -> "MonomialIdeal":
        return MonomialIdeal(self, gens)

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, [(0,) * self.num_vars])

    def principal(self, m) -> "MonomialIdeal":
        return MonomialIdeal(self, [m])

    def maximal_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal(self, [tuple(int(i == j) for j in range(self.num_vars))
                                    for i in range(self.num_vars)])


class MonomialIdeal:
    """Monomial ideal in a :class:`PolyRing`.

    ``gens`` is the canonical staircase of the ambient representative, i.e.
    the minimalized union of the given generators with the quotient
    generators.  :attr:`generators` drops the ones that vanish in the ring.
    """

    __slots__ = ("ring", "gens", "_hash")

    def __init__(self, ring: PolyRing, gens: Iterable, _canonical: bool = False):
        self.ring = ring
        if _canonical:
            self.gens = gens
        else:
            gl = []
            for g in gens:
                g = tuple(int(v) for v in g)
                if len(g) != ring.num_vars or min(g) < 0:
                    raise ValueError(f"bad exponent {g} for {ring.num_vars} variables")
                gl.append(g)
            self.gens = minimalize(gl + list(ring.quotient_gens))
        self._hash = None

    def _new(self, exps) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, minimalize(list(exps) + list(self.ring.quotient_gens)),
                             _canonical=True)

    def _check(self, other):
        if not isinstance(other, MonomialIdeal) or other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")

    @property
    def generators(self) -> tuple:
        return tuple(g for g in self.gens if g not in self.ring.quotient_gens) or ()

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and sum(self.gens[0]) == 0

    def is_m_primary(self) -> bool:
        nv = self.ring.num_vars
        return all(any(g[i] == sum(g) for g in self.gens) for i in range(nv))

    # arithmetic ------------------------------------------------------------
    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return self._new(self.gens + other.gens)

    def product(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        if self.is_unit():
            return other
        if other.is_unit():
            return self
        return self._new(tuple(a + b for a, b in zip(g, h)) for g in self.gens for h in other.gens)

    def power(self, k: int) -> "MonomialIdeal":
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.unit_ideal()
        base = self
        while k:
            if k & 1:
                result = result.product(base)
            k >>= 1
            if k:
                base = base.product(base)
        return result

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return self._new(tuple(max(a, b) for a, b in zip(g, h)) for g in self.gens for h in other.gens)

    def colon_monomial(self, m) -> "MonomialIdeal":
        return self._new(tuple(max(a - b, 0) for a, b in zip(g, m)) for g in self.gens)

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        result = None
        for g in other.gens:
            q = self.colon_monomial(g)
            result = q if result is None else result.intersect(q)
        return result

    def times(self, m) -> "MonomialIdeal":
        """The ideal m * self for a monomial m."""
        return self._new(tuple(a + b for a, b in zip(g, m)) for g in self.gens)

    def colength(self):
        """Length of R / self, or INFINITE."""
        gens = self.gens
        if self.ring.num_vars == 1:
            return gens[0][0]
        if gens[0][0] != 0 or gens[-1][1] != 0:
            return INFINITE
        total = 0
        for (x0, y0), (x1, _) in zip(gens, gens[1:]):
            total += (x1 - x0) * y0
        return total

    def member(self, m) -> bool:
        m = tuple(m)
        return any(_divides(g, m) for g in self.gens)

    def contains(self, other: "MonomialIdeal") -> bool:
        self._check(other)
        return all(self.member(g) for g in other.gens)

    def equals(self, other: "MonomialIdeal") -> bool:
        return self == other

    # integral closure ------------------------------------------------------
    def integral_closure(self) -> "MonomialIdeal":
        """Integer points of the Newton polyhedron, minimalized."""
        if self.ring.quotient_gens:
            raise UnsupportedBackendError("integral closure over a quotient ring")
        if self.ring.num_vars == 1 or self.is_unit():
            return self
        pts = list(self.gens)  # x ascending, y descending
        hull = [pts[0]]
        for p in pts[1:]:
            while len(hull) >= 2:
                (ax, ay), (bx, by) = hull[-2], hull[-1]
                # drop b unless it lies strictly below segment a-p
                cross = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
                if cross <= 0:
                    hull.pop()
                else:
                    break
            hull.append(p)
        x_lo, y_lo = hull[0][0], hull[-1][1]
        out = []
        for x in range(x_lo, hull[-1][0] + 1):
            y = y_lo
            for (ax, ay), (bx, by) in zip(hull, hull[1:]):
                # (by - ay) * (X - ax) + (bx - ax) * (Y - ay) >= 0 on the polyhedron side
                w1, w2 = ay - by, bx - ax
                c = w1 * ax + w2 * ay
                y = max(y, math.ceil(Fraction(c - w1 * x, w2)))
            out.append((x, y))
        return self._new(out)

    # dunder ----------------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.gens == other.gens

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.gens))
        return self._hash

    def __add__(self, other):
        return self.sum(other)

    def __mul__(self, other):
        return self.product(other)

    def __pow__(self, k):
        return self.power(k)

    def __and__(self, other):
        return self.intersect(other)

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    def __repr__(self):
        fm = self.ring.format_monomial
        return "(" + ", ".join(fm(g) for g in self.generators) + ")"


# ---------------------------------------------------------------------------
# semigroup backend
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SemigroupRing:
    """k[[t^a1, ..., t^ak]] for a numerical semigroup <a1, ..., ak>."""

    generators: tuple
    frobenius: int = field(init=False)
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        if not gens or any(a <= 0 for a in gens):
            raise ValueError("semigroup generators must be positive")
        if list(gens) != sorted(set(gens)):
            raise ValueError("semigroup generators must be strictly increasing")
        if math.gcd(*gens) != 1:
            raise ValueError(f"semigroup generators {gens} have gcd {math.gcd(*gens)} != 1")
        object.__setattr__(self, "generators", gens)
        bound = (gens[0] - 1) * (gens[-1] - 1) + 1 if len(gens) > 1 else 1
        table = [False] * (bound + 1)
        table[0] = True
        for v in range(1, bound + 1):
            table[v] = any(v >= a and table[v - a] for a in gens)
        frob = max((v for v in range(bound + 1) if not table[v]), default=-1)
        object.__setattr__(self, "frobenius", frob)
        object.__setattr__(self, "_members", frozenset(v for v in range(frob + 2) if table[v]))

    dimension = 1
    is_cohen_macaulay = True
    names = ("t",)

    @property
    def kind(self) -> str:
        return "semigroup"

    def contains_value(self, v: int) -> bool:
        return v > self.frobenius or v in self._members

    def gaps(self) -> list[int]:
        return [v for v in range(self.frobenius + 1) if v not in self._members]

    def is_zero(self, m) -> bool:
        return False

    def mul(self, a, b):
        return a + b

    def degree(self, m) -> int:
        return m

    def monomial_key(self, m):
        return (m,)

    def monomials_up_to(self, bound: int) -> list:
        return [v for v in range(bound + 1) if self.contains_value(v)]

    def format_monomial(self, m) -> str:
        return "1" if m == 0 else ("t" if m == 1 else f"t^{m}")

    def is_regular_sequence(self, elems: Sequence) -> bool:
        return len(elems) == 1 and self.contains_value(elems[0])

    def ideal(self, gens: Iterable) -> "SemigroupIdeal":
        return SemigroupIdeal.from_generators(self, gens)

    def unit_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal.from_generators(self, [0])

    def principal(self, m) -> "SemigroupIdeal":
        return SemigroupIdeal.from_generators(self, [m])

    def maximal_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal.from_generators(self, self.generators)


class SemigroupIdeal:
    """Monomial ideal of a semigroup ring, stored by its value set.

    Every value >= ``conductor`` is in the ideal, ``conductor - 1`` is not,
    and ``low_values`` lists the members below the conductor.
    """

    __slots__ = ("ring", "conductor", "low_values")

    def __init__(self, ring: SemigroupRing, conductor: int, low_values: Iterable[int]):
        low = set(low_values)
        while conductor > 0 and (conductor - 1) in low:
            conductor -= 1
            low.discard(conductor)
        self.ring = ring
        self.conductor = conductor
        self.low_values = frozenset(v for v in low if v < conductor)

    @classmethod
    def from_generators(cls, ring: SemigroupRing, gens: Iterable[int]) -> "SemigroupIdeal":
        gens = sorted(set(int(g) for g in gens))
        if not gens:
            raise ValueError("the zero ideal is not supported")
        for g in gens:
            if not ring.contains_value(g):
                raise ValueError(f"t^{g} is not in the ring")
        c = gens[0] + ring.frobenius + 1
        low = [v for v in range(c) if any(v >= g and ring.contains_value(v - g) for g in gens)]
        return cls(ring, c, low)

    @classmethod
    def _from_predicate(cls, ring, bound: int, pred) -> "SemigroupIdeal":
        return cls(ring, bound, [v for v in range(bound) if pred(v)])

    def _check(self, other):
        if not isinstance(other, SemigroupIdeal) or other.ring != self.ring:
            raise RingMismatchError("ideals live in different rings")

    def member(self, v) -> bool:
        return v >= self.conductor or v in self.low_values

    @property
    def min_value(self) -> int:
        return min(self.low_values) if self.low_values else self.conductor

    @property
    def generators(self) -> tuple:
        vals = sorted(self.low_values) + list(range(self.conductor, self.conductor + self.ring.generators[0]))
        S = self.ring
        gens = [v for v in vals if not any(u < v and S.contains_value(v - u) for u in vals if self.member(u))]
        return tuple(gens)

    @property
    def gens(self) -> tuple:
        return self.generators

    @property
    def num_generators(self) -> int:
        return len(self.generators)

    def is_unit(self) -> bool:
        return self.member(0)

    def is_m_primary(self) -> bool:
        return True

    def values_below(self, bound: int) -> list[int]:
        return [v for v in range(bound) if self.member(v)]

    def sum(self, other):
        self._check(other)
        c = max(self.conductor, other.conductor)
        return self._from_predicate(self.ring, c, lambda v: self.member(v) or other.member(v))

    def product(self, other):
        self._check(other)
        c = min(self.min_value + other.conductor, other.min_value + self.conductor)
        a_vals = self.values_below(c)
        return self._from_predicate(self.ring, c, lambda v: any(other.member(v - u) for u in a_vals if u <= v))

    def power(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.unit_ideal()
        for _ in range(k):
            result = result.product(self)
        return result

    def intersect(self, other):
        self._check(other)
        c = max(self.conductor, other.conductor)
        return self._from_predicate(self.ring, c, lambda v: self.member(v) and other.member(v))

    def colon(self, other):
        self._check(other)
        gens = other.generators
        c = max(self.conductor - min(gens), self.ring.frobenius + 1, 0)
        S = self.ring
        return self._from_predicate(
            S, c, lambda v: S.contains_value(v) and all(self.member(v + g) for g in gens))

    def times(self, m):
        return self.product(self.ring.principal(m))

    def colength(self):
        S = self.ring
        return sum(1 for v in range(self.conductor) if S.contains_value(v) and v not in self.low_values)

    def contains(self, other) -> bool:
        self._check(other)
        return all(self.member(v) for v in other.generators)

    def equals(self, other) -> bool:
        return self == other

    def integral_closure(self):
        raise UnsupportedBackendError("integral closure is only implemented for the staircase backend")

    def __eq__(self, other):
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return (self.ring == other.ring and self.conductor == other.conductor
                and self.low_values == other.low_values)

    def __hash__(self):
        return hash((self.ring, self.conductor, self.low_values))

    __add__ = sum
    __mul__ = product
    __pow__ = power
    __and__ = intersect

    def __le__(self, other):
        return other.contains(self)

    def __ge__(self, other):
        return self.contains(other)

    def __repr__(self):
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.generators) + ")"


def quotient_length(big, small):
    """Length of big / small for ideals small <= big."""
    if not big.contains(small):
        raise AssertionError(f"{small} is not contained in {big}")
    a, b = small.colength(), big.colength()
    if is_infinite(a) or is_infinite(b):
        if is_infinite(a) and not is_infinite(b):
            return INFINITE
        raise ValueError("length of a quotient of non-m-primary ideals")
    return a - b


def integral_closure(ideal):
    return ideal.integral_closure()


def iter_monomials_in(ideal, bound: int) -> Iterator:
    for m in ideal.ring.monomials_up_to(bound):
        if ideal.member(m):
            yield m
