"""Small exact linear-algebra helpers over Fraction and int."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def rank(rows) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        pivot = next((p for p in range(r, len(m)) if m[p][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for p in range(len(m)):
            if p != r and m[p][c] != 0:
                f = m[p][c] / m[r][c]
                m[p] = [a - f * b for a, b in zip(m[p], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows) -> Fraction:
    m = [[Fraction(v) for v in row] for row in rows]
    size = len(m)
    out = Fraction(1)
    for c in range(size):
        pivot = next((p for p in range(c, size) if m[p][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            out = -out
        out *= m[c][c]
        for p in range(c + 1, size):
            if m[p][c] != 0:
                f = m[p][c] / m[c][c]
                m[p] = [a - f * b for a, b in zip(m[p], m[c])]
    return out


def solve(rows, rhs):
    """Unique solution of a square nonsingular system, or None."""
    size = len(rows)
    m = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(size):
        pivot = next((p for p in range(c, size) if m[p][c] != 0), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [a * inv for a in m[c]]
        for p in range(size):
            if p != c and m[p][c] != 0:
                f = m[p][c]
                m[p] = [a - f * b for a, b in zip(m[p], m[c])]
    return [row[-1] for row in m]


def int_det(rows) -> int:
    """Determinant of a small integer matrix by cofactor expansion."""
    size = len(rows)
    if size == 0:
        return 1
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    for c, v in enumerate(rows[0]):
        if v:
            minor = [r[:c] + r[c + 1:] for r in rows[1:]]
            total += (-1) ** c * v * int_det(minor)
    return total


def cofactor_normal(rows) -> tuple[int, ...] | None:
    """Primitive integer vector orthogonal to d-1 integer rows in Z^d, or None if dependent."""
    d = len(rows) + 1
    vec = [(-1) ** c * int_det([r[:c] + r[c + 1:] for r in rows]) for c in range(d)]
    g = 0
    for v in vec:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    return tuple(v // g for v in vec)
