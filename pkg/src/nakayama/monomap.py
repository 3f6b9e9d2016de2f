"""Monomial maps between the coordinate rings of comparable Dyck paths.

For lower path D~ <= D each coordinate of the smaller space is sent to a
monomial in the coordinates of the bigger one.  Maps are stored as integer
exponent rows indexed by target labels, so composition is row arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ChainMismatch, NotComparable, UnknownLabel
from .grid import DyckPath, enumerate_paths, leq
from .indexset import DIAMOND, DOWN, UP, Diamond, Label, index_set
from .report import Report
from .symbolic import Factored
from .uspace import evaluate_point, parametrization, u_system


@dataclass(frozen=True)
class MonomialMap:
    source: DyckPath
    target: DyckPath
    target_labels: tuple[Label, ...]
    rows: dict  # source Label -> tuple of exponents over target_labels

    def image(self, x: Label) -> dict[Label, int]:
        if x not in self.rows:
            raise UnknownLabel(f"{x!r} is not a source label of this map")
        return {t: e for t, e in zip(self.target_labels, self.rows[x]) if e}

    def source_labels(self) -> list[Label]:
        return sorted(self.rows)

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            self.image(x) == {x: 1} for x in self.rows
        )

    def render(self, x: Label) -> str:
        parts = []
        for t, e in self.image(x).items():
            parts.append(t.text if e == 1 else f"{t.text}^{e}")
        src = x.text[0] + "~" + x.text[1:]
        return f"{src} -> {' * '.join(parts) or '1'}"

    def to_text(self) -> list[str]:
        return [self.render(x) for x in self.source_labels()]

    def to_json(self) -> dict:
        return {
            "source": self.source.steps,
            "target": self.target.steps,
            "labels": [t.text for t in self.target_labels],
            "rows": {x.text: list(self.rows[x]) for x in self.source_labels()},
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and all(self.image(x) == other.image(x) for x in self.rows)
            and set(self.rows) == set(other.rows)
        )

    __hash__ = None


def _make(source: DyckPath, target: DyckPath, images: dict[Label, dict[Label, int]]) -> MonomialMap:
    tl = tuple(sorted(index_set(target).labels))
    rows = {x: tuple(img.get(t, 0) for t in tl) for x, img in images.items()}
    return MonomialMap(source, target, tl, rows)


def monomial_map(lower: DyckPath, upper: DyckPath) -> MonomialMap:
    """The map phi for ``lower`` <= ``upper``."""
    if lower.n != upper.n or not leq(lower, upper):
        raise NotComparable(f"{lower} is not below {upper}")
    images: dict[Label, dict[Label, int]] = {}
    for x in index_set(lower).labels:
        img = {x: 1}
        if x.kind == UP:
            for k in range(upper.j(x.i), lower.j(x.i)):
                img[Diamond(k, x.i)] = 1
        elif x.kind == DOWN:
            for l in range(lower.k(x.i) + 1, upper.k(x.i) + 1):
                img[Diamond(x.i, l)] = 1
        images[x] = img
    return _make(lower, upper, images)


def compose(second: MonomialMap, first: MonomialMap) -> MonomialMap:
    """second o first, where first: D1 -> D2 and second: D2 -> D3."""
    if first.target != second.source:
        raise ChainMismatch(f"cannot compose: {first.target} differs from {second.source}")
    images = {}
    for x in first.rows:
        acc: dict[Label, int] = {}
        for mid, e in first.image(x).items():
            for t, f in second.image(mid).items():
                acc[t] = acc.get(t, 0) + e * f
        images[x] = acc
    return _make(first.source, second.target, images)


def verify_functoriality(d1: DyckPath, d2: DyckPath, d3: DyckPath) -> bool:
    direct = monomial_map(d1, d3)
    return compose(monomial_map(d2, d3), monomial_map(d1, d2)) == direct


def partition_invariant(lower: DyckPath, upper: DyckPath) -> bool:
    """Each new diamond occurs in exactly one up row and exactly one down row."""
    phi = monomial_map(lower, upper)
    new = [
        x for x in index_set(upper).diamonds if not lower.below(x.i, x.j)
    ]
    for d in new:
        ups = sum(1 for x in phi.rows if x.kind == UP and d in phi.image(x))
        downs = sum(1 for x in phi.rows if x.kind == DOWN and d in phi.image(x))
        dias = sum(1 for x in phi.rows if x.kind == DIAMOND and d in phi.image(x))
        if (ups, downs, dias) != (1, 1, 0):
            return False
    return True


def pushforward_point(phi: MonomialMap, point: dict[Label, Fraction]) -> dict[Label, Fraction]:
    out = {}
    for x in phi.source_labels():
        v = Fraction(1)
        for t, e in phi.image(x).items():
            v *= Fraction(point[t]) ** e
        out[x] = v
    return out


def satisfies_u_equations(path: DyckPath, point: dict[Label, Fraction]) -> bool:
    system = u_system(path)
    for x, inc in system.rows.items():
        prod = Fraction(1)
        for y in inc:
            prod *= point[y]
        if point[x] + prod != 1:
            return False
    return True


def verify_parametrization_compat(lower: DyckPath, upper: DyckPath) -> Report:
    """Substituting the f-values of ``upper`` into phi gives those of ``lower``."""
    phi = monomial_map(lower, upper)
    big = parametrization(upper).factored
    small = parametrization(lower).factored
    rep = Report(f"{lower.steps}->{upper.steps}")
    for x in phi.source_labels():
        acc = Factored.one(upper.n)
        for t, e in phi.image(x).items():
            acc = acc * big[t] ** e
        diff = acc.to_rational().cross_difference(small[x].to_rational())
        rep.add(x.text, "compat", diff.is_zero(), None if diff.is_zero() else str(diff))
    return rep


def verify_pushforward(lower: DyckPath, upper: DyckPath, y) -> Report:
    """Numeric shadow of the compatibility check at one positive point."""
    phi = monomial_map(lower, upper)
    pushed = pushforward_point(phi, evaluate_point(upper, y))
    direct = evaluate_point(lower, y)
    rep = Report(f"{lower.steps}->{upper.steps}")
    rep.add("point", "pushforward", pushed == direct,
            None if pushed == direct else [str(v) for v in y])
    rep.add("point", "ueq", satisfies_u_equations(lower, pushed), None)
    return rep


def chains(n: int) -> list[tuple[DyckPath, DyckPath, DyckPath]]:
    """All chains d1 <= d2 <= d3 of distinct paths of rank n."""
    paths = enumerate_paths(n)
    out = []
    for a, b, c in combinations(paths, 3):
        for d1, d2, d3 in ((a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)):
            if leq(d1, d2) and leq(d2, d3):
                out.append((d1, d2, d3))
    return out
