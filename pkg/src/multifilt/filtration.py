"""Multigraded filtrations n -> F(n) over Z^s.

Multi-indices are plain integer tuples.  Every evaluation goes through
``plus(n)`` first, so F(n) = F(n+) holds by construction.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field

from .ideals import is_infinite

KINDS = ("powers", "integral-closure", "ratliff-rush")


class StabilizationError(RuntimeError):
    pass


class NotAdmissibleError(ValueError):
    pass


# multi-index helpers -------------------------------------------------------


def plus(n):
    return tuple(v if v > 0 else 0 for v in n)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(k, n):
    return tuple(k * v for v in n)


def diag(s, k=1):
    """k * e = (k, ..., k)."""
    return (k,) * s


def unit(s, i):
    return tuple(int(j == i) for j in range(s))


def geq(m, n) -> bool:
    return all(a >= b for a, b in zip(m, n))


def box_points(s, hi, lo=0):
    """All points of [lo, hi]^s in lexicographic order."""
    return list(itertools.product(range(lo, hi + 1), repeat=s))


def minimal_points(points):
    pts = sorted(set(points))
    return tuple(p for p in pts if not any(q != p and geq(p, q) for q in pts))


# the filtration ---------------------------------------------------------------


class Filtration:
    """Admissible filtration built from base ideals I_1, ..., I_s.

    kind:
      ``powers``            F(n) = I_1^{n1+} ... I_s^{ns+}
      ``integral-closure``  F(n) = integral closure of the power product
      ``ratliff-rush``      F(n) = Ratliff-Rush closure of the power product
    """

    def __init__(self, ideals, kind: str = "powers", names=None):
        ideals = list(ideals)
        if not ideals:
            raise ValueError("need at least one base ideal")
        if kind not in KINDS:
            raise ValueError(f"unknown filtration kind {kind!r}; expected one of {KINDS}")
        ring = ideals[0].ring
        for i, I in enumerate(ideals):
            if I.ring != ring:
                raise ValueError("base ideals must share a ring")
            if I.is_unit() or is_infinite(I.colength()):
                raise NotAdmissibleError(f"base ideal #{i + 1} {I!r} is not m-primary")
        if kind == "integral-closure" and (ring.kind != "staircase" or ring.quotient_gens):
            raise NotAdmissibleError("integral-closure filtrations need a power series ring")
        self.ring = ring
        self.ideals = tuple(ideals)
        self.kind = kind
        self.s = len(ideals)
        self.names = tuple(names) if names else tuple(f"I{i + 1}" for i in range(self.s))
        self._cache = {}
        self._lock = threading.RLock()
        self._powers = [[ring.unit_ideal(), I] for I in ideals]
        self._base = Filtration(ideals, "powers", names) if kind == "ratliff-rush" else None

    def __repr__(self):
        return f"Filtration({self.kind}, {list(self.ideals)})"

    @property
    def dimension(self) -> int:
        return self.ring.dimension

    def ideal_power(self, i: int, k: int):
        table = self._powers[i]
        with self._lock:
            while len(table) <= k:
                table.append(table[-1] * self.ideals[i])
        return table[k]

    def power_product(self, n):
        n = plus(n)
        result = None
        for i, k in enumerate(n):
            p = self.ideal_power(i, k)
            result = p if result is None else result * p
        return result

    def evaluate(self, n):
        key = plus(n)
        if len(key) != self.s:
            raise ValueError(f"multi-index {n} has arity {len(key)}, expected {self.s}")
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.kind == "powers":
            val = self.power_product(key)
        elif self.kind == "integral-closure":
            val = self.power_product(key).integral_closure()
        else:
            val = ratliff_rush(self._base, key)
        self._cache[key] = val
        return val

    __call__ = evaluate

    def slice(self, i: int) -> "SliceFiltration":
        return SliceFiltration(self, i)

    # sampled invariants -----------------------------------------------------
    def check_invariants(self, box: int = 5) -> list[str]:
        """Spot-check monotonicity, multiplicativity and I^n <= F(n) on [0, box]^s."""
        problems = []
        pts = box_points(self.s, box)
        for n in pts:
            F = self(n)
            if not F.contains(self.power_product(n)):
                problems.append(f"I^{n} not in F{n}")
            for i in range(self.s):
                if not F.contains(self(add(n, unit(self.s, i)))):
                    problems.append(f"F{n} does not contain F(n+e{i + 1})")
        half = box // 2
        for n in box_points(self.s, half):
            for m in box_points(self.s, half):
                if not self(add(n, m)).contains(self(n) * self(m)):
                    problems.append(f"F{n}F{m} not in F(n+m)")
        return problems


class SliceFiltration:
    """One-graded slice n -> F(n e_i)."""

    def __init__(self, parent: Filtration, i: int):
        self.parent = parent
        self.i = i
        self.ring = parent.ring
        self.s = 1

    def __call__(self, n):
        k = n[0] if isinstance(n, tuple) else n
        return self.parent(scale(max(k, 0), unit(self.parent.s, self.i)))


def ratliff_rush(F, n, k_margin: int = 3, k_max: int = 32):
    """Stable value of the chain (F(n + k e) : F(e)^k), k = 1, 2, ...

    Stops once ``k_margin`` consecutive terms agree.
    """
    n = plus(n)
    e = diag(F.s)
    Fe = F(e)
    power = Fe
    prev, run = None, 0
    for k in range(1, k_max + 1):
        cur = F(add(n, scale(k, e))).colon(power)
        if cur == prev:
            run += 1
            if run >= k_margin - 1:
                return cur
        else:
            run = 0
        prev = cur
        power = power * Fe
    raise StabilizationError(f"Ratliff-Rush chain at {n} did not stabilize within k <= {k_max}")


@dataclass
class AdmissibilityReport:
    box: int
    thresholds: tuple  # least observed r_i per direction, None when none works
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r is not None for r in self.thresholds)


def check_admissible_window(F: Filtration, box: int = 6) -> AdmissibilityReport:
    """Least r_i with F(n + e_i) = I_i F(n) for all n in [0, box]^s with n_i >= r_i.

    A direction is certified only if its threshold is below ``box`` (at least
    two layers agree).
    """
    if box < 2:
        raise ValueError("box must be >= 2")
    thresholds, failures = [], []
    for i in range(F.s):
        ei = unit(F.s, i)
        bad_layers = set()
        for n in box_points(F.s, box):
            if F(add(n, ei)) != F.ideals[i] * F(n):
                bad_layers.add(n[i])
                failures.append((i, n))
        r = max(bad_layers) + 1 if bad_layers else 0
        thresholds.append(r if r < box else None)
    return AdmissibilityReport(box, tuple(thresholds), failures)
