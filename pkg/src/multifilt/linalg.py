"""Exact Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction


class SingularSystemError(ArithmeticError):
    pass


class InconsistentSystemError(ArithmeticError):
    pass


def solve_exact(rows, rhs):
    """Unique solution of an (over)determined integer/rational system.

    Raises SingularSystemError when the column rank is deficient and
    InconsistentSystemError when no solution exists.
    """
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    ncols = len(m[0]) - 1 if m else 0
    r = 0
    pivots = []
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in m[r:]):
        raise InconsistentSystemError("system has no solution")
    if r < ncols:
        raise SingularSystemError(f"rank {r} < {ncols} unknowns")
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x
