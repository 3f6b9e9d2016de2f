"""Dyck paths, their poset, valleys and the module grid of CA_n / I_D.

A Dyck path of rank ``n`` is a walk from (1, 0) to (n+1, n) made of ``n`` up
steps ``(a, b) -> (a, b+1)`` and ``n`` down steps ``(a, b) -> (a+1, b)`` that
never visits a point with ``b < a - 1``.  Grid point (i, j) stands for the
indecomposable module M_{i,j}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import MalformedPath, RankMismatch

UP = "U"
DOWN = "D"


@dataclass(frozen=True, order=True)
class GridPoint:
    i: int
    j: int

    def __str__(self) -> str:
        return f"M{self.i}{self.j}" if max(self.i, self.j) < 10 else f"M{self.i},{self.j}"


@dataclass(frozen=True, order=True)
class Valley:
    """Lattice point of a path preceded by a down step and followed by an up step."""

    a: int
    b: int

    @property
    def word(self) -> tuple[int, ...]:
        """Arrow indices of the generator alpha_b ... alpha_{a-1}, left to right."""
        return tuple(range(self.b, self.a - 2, -1))


@dataclass(frozen=True)
class DyckPath:
    n: int
    steps: str

    def __post_init__(self):
        if self.n < 0:
            raise MalformedPath(f"rank must be nonnegative, got {self.n}")
        if len(self.steps) != 2 * self.n:
            raise MalformedPath(f"expected {2 * self.n} steps, got {len(self.steps)}")
        a, b = 1, 0
        for idx, s in enumerate(self.steps):
            if s == UP:
                b += 1
            elif s == DOWN:
                a += 1
            else:
                raise MalformedPath(f"invalid step {s!r} at index {idx}", idx)
            if b < a - 1:
                raise MalformedPath(f"path drops below the baseline at index {idx}", idx)
        if (a, b) != (self.n + 1, self.n):
            raise MalformedPath(f"path ends at {(a, b)}, expected {(self.n + 1, self.n)}")

    def __str__(self) -> str:
        return self.steps

    @cached_property
    def k_heights(self) -> tuple[int, ...]:
        """k_i: height of the i-th down step (1-based i, stored 0-based)."""
        out, b = [], 0
        for s in self.steps:
            if s == UP:
                b += 1
            else:
                out.append(b)
        return tuple(out)

    @cached_property
    def j_positions(self) -> tuple[int, ...]:
        """j_i: x-coordinate of the i-th up step."""
        out, a = [], 1
        for s in self.steps:
            if s == UP:
                out.append(a)
            else:
                a += 1
        return tuple(out)

    def k(self, i: int) -> int:
        return self.k_heights[i - 1]

    def j(self, i: int) -> int:
        return self.j_positions[i - 1]

    def up_position(self, i: int) -> int:
        """Index in ``steps`` of the i-th up step."""
        return self._step_index[UP][i - 1]

    def down_position(self, i: int) -> int:
        return self._step_index[DOWN][i - 1]

    @cached_property
    def _step_index(self) -> dict[str, tuple[int, ...]]:
        return {
            s: tuple(p for p, t in enumerate(self.steps) if t == s) for s in (UP, DOWN)
        }

    def below(self, i: int, j: int) -> bool:
        """True when grid point (i, j), i <= j, is on or below the path."""
        return 1 <= i <= j <= self.n and j <= self.k(i)

    @property
    def is_top(self) -> bool:
        return self.steps == UP * self.n + DOWN * self.n

    @property
    def is_bottom(self) -> bool:
        return self.steps == (UP + DOWN) * self.n

    def points(self) -> list[tuple[int, int]]:
        """Visited lattice points, starting at (1, 0)."""
        a, b = 1, 0
        pts = [(a, b)]
        for s in self.steps:
            if s == UP:
                b += 1
            else:
                a += 1
            pts.append((a, b))
        return pts


def from_steps(n: int, steps: str) -> DyckPath:
    return DyckPath(n, steps.strip().upper())


def from_heights(heights) -> DyckPath:
    """Build a path from its down-step heights k_1 <= ... <= k_n = n."""
    k = [int(h) for h in heights]
    n = len(k)
    for i, h in enumerate(k, start=1):
        if not i <= h <= n:
            raise MalformedPath(f"height k_{i}={h} outside [{i}, {n}]", i - 1)
        if i > 1 and h < k[i - 2]:
            raise MalformedPath(f"heights must be nondecreasing at k_{i}", i - 1)
    steps, b = [], 0
    for h in k:
        steps.append(UP * (h - b))
        steps.append(DOWN)
        b = h
    return DyckPath(n, "".join(steps))


def parse_path(text: str, n: int | None = None) -> DyckPath:
    """Accept either a U/D step string or comma separated k-heights."""
    text = text.strip()
    if "," in text or text.isdigit():
        path = from_heights(text.split(","))
    else:
        steps = text.upper()
        path = from_steps(len(steps) // 2 if n is None else n, steps)
    if n is not None and path.n != n:
        raise MalformedPath(f"path has rank {path.n}, expected {n}")
    return path


def top_path(n: int) -> DyckPath:
    return DyckPath(n, UP * n + DOWN * n)


def bottom_path(n: int) -> DyckPath:
    return DyckPath(n, (UP + DOWN) * n)


def enumerate_paths(n: int) -> list[DyckPath]:
    """All Dyck paths of rank n, lexicographic in the step string with U < D."""
    out: list[DyckPath] = []

    def walk(prefix: list[str], ups: int, downs: int):
        if ups == downs == n:
            out.append(DyckPath(n, "".join(prefix)))
            return
        if ups < n:
            prefix.append(UP)
            walk(prefix, ups + 1, downs)
            prefix.pop()
        # after the next down step the point is (downs+2, ups)
        if downs < n and ups >= downs + 1:
            prefix.append(DOWN)
            walk(prefix, ups, downs + 1)
            prefix.pop()

    walk([], 0, 0)
    return out


def leq(d1: DyckPath, d2: DyckPath) -> bool:
    if d1.n != d2.n:
        raise RankMismatch(f"cannot compare ranks {d1.n} and {d2.n}")
    return all(a <= b for a, b in zip(d1.k_heights, d2.k_heights))


def upper_covers(d: DyckPath) -> list[DyckPath]:
    """Paths obtained by flipping a single valley DU into a peak UD."""
    s = d.steps
    return [
        DyckPath(d.n, s[:p] + UP + DOWN + s[p + 2:])
        for p in range(len(s) - 1)
        if s[p] == DOWN and s[p + 1] == UP
    ]


def lower_covers(d: DyckPath) -> list[DyckPath]:
    s = d.steps
    out = []
    for p in range(len(s) - 1):
        if s[p] == UP and s[p + 1] == DOWN:
            cand = s[:p] + DOWN + UP + s[p + 2:]
            try:
                out.append(DyckPath(d.n, cand))
            except MalformedPath:
                pass
    return out


def valleys(d: DyckPath) -> list[Valley]:
    pts = d.points()
    s = d.steps
    return [
        Valley(*pts[p + 1])
        for p in range(len(s) - 1)
        if s[p] == DOWN and s[p + 1] == UP
    ]


def ideal_generators(d: DyckPath) -> list[tuple[int, ...]]:
    """Generator words alpha_b ... alpha_{a-1} of I_D as tuples of arrow indices."""
    return [v.word for v in valleys(d)]


def word_contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True when ``inner`` is a contiguous subword of ``outer``."""
    return min(outer) <= min(inner) and max(inner) <= max(outer)


def modules_below(d: DyckPath) -> set[GridPoint]:
    return {GridPoint(i, j) for i in range(1, d.n + 1) for j in range(i, d.k(i) + 1)}


def hasse_edges(paths: list[DyckPath]) -> list[tuple[DyckPath, DyckPath]]:
    """Covering pairs (lower, upper) among ``paths``, in enumeration order."""
    members = set(paths)
    edges = []
    for d in paths:
        for c in upper_covers(d):
            if c in members:
                edges.append((d, c))
    order = {p: idx for idx, p in enumerate(paths)}
    edges.sort(key=lambda e: (order[e[0]], order[e[1]]))
    return edges


def comparable_pairs(paths: list[DyckPath]) -> list[tuple[DyckPath, DyckPath]]:
    """All (lower, upper) pairs with lower <= upper, lower != upper."""
    out = []
    for a, b in combinations(paths, 2):
        if leq(a, b):
            out.append((a, b))
        elif leq(b, a):
            out.append((b, a))
    return out


def catalan(n: int) -> int:
    c = 1
    for m in range(n):
        c = c * 2 * (2 * m + 1) // (m + 2)
    return c
