"""Up-closed subsets of N^s certified on a finite box."""

from __future__ import annotations

from dataclasses import dataclass

from .filtration import add, box_points, geq, minimal_points, unit


@dataclass(frozen=True)
class Region:
    """Points n in [0, box]^s whose defining property held on [n, box + margin]^s.

    The region is only claimed on the box it was certified on.
    """

    s: int
    corners: tuple
    box: int
    margin: int

    def __contains__(self, n) -> bool:
        return any(geq(n, c) for c in self.corners)

    def points(self) -> list:
        return [n for n in box_points(self.s, self.box) if n in self]

    def is_empty(self) -> bool:
        return not self.corners

    def is_everything(self) -> bool:
        return self.corners == ((0,) * self.s,)

    def describe(self) -> str:
        cs = ", ".join(str(c) for c in self.corners) or "none"
        return f"corners {{{cs}}} (verified on box {self.box}, margin {self.margin})"


def region_from_predicate(pred, s: int, box: int, margin: int) -> Region:
    """Region of n in [0, box]^s with pred(m) true for every m in [n, box + margin]^s."""
    top = box + margin
    good = {}
    for n in sorted(box_points(s, top), reverse=True):
        ok = bool(pred(n))
        if ok:
            for i in range(s):
                nxt = add(n, unit(s, i))
                if nxt[i] <= top and not good[nxt]:
                    ok = False
                    break
        good[n] = ok
    pts = [n for n in box_points(s, box) if good[n]]
    return Region(s, minimal_points(pts), box, margin)


def shift_corners(corners, v) -> tuple:
    return minimal_points(add(c, v) for c in corners)


def clip_below(corners, floor) -> tuple:
    """Corners of region ∩ {r >= floor}."""
    return minimal_points(tuple(max(a, b) for a, b in zip(c, floor)) for c in corners)
