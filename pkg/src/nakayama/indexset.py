"""The index set I_A of a Dyck path and its compatibility relation."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import TopPathOnly, UnknownLabel
from .grid import DyckPath

UP, DIAMOND, DOWN = "up", "diamond", "down"
_KIND_RANK = {UP: 0, DIAMOND: 1, DOWN: 2}


@dataclass(frozen=True)
class Label:
    """An up step ``Up(i)``, a down step ``Down(i)`` or a diamond ``Diamond(i, j)``.

    Labels sort ups first, then diamonds, then downs; this is the order in which
    factors of a u-equation are written.
    """

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_RANK:
            raise ValueError(f"unknown label kind {self.kind!r}")
        if self.kind == DIAMOND and not 1 <= self.i < self.j:
            raise ValueError(f"diamond needs 1 <= i < j, got ({self.i}, {self.j})")
        if self.kind != DIAMOND and (self.i < 1 or self.j != 0):
            raise ValueError(f"bad step label {self.kind}({self.i})")

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.i, self.j)

    def __lt__(self, other: "Label") -> bool:
        return self.sort_key() < other.sort_key()

    @property
    def text(self) -> str:
        """Compact syntax: ``u3``, ``s3`` (down step 3), ``d2.4``."""
        if self.kind == UP:
            return f"u{self.i}"
        if self.kind == DOWN:
            return f"s{self.i}"
        return f"d{self.i}.{self.j}"

    @property
    def display(self) -> str:
        """Notation of the grid pictures: ``3``, ``Σ3``, ``24``."""
        if self.kind == UP:
            return str(self.i)
        if self.kind == DOWN:
            return f"Σ{self.i}"
        if self.j < 10:
            return f"{self.i}{self.j}"
        return f"{self.i},{self.j}"

    @property
    def latex(self) -> str:
        if self.kind == UP:
            return f"u_{self.i}" if self.i < 10 else f"u_{{{self.i}}}"
        if self.kind == DOWN:
            return f"u_{{\\Sigma {self.i}}}"
        sep = "" if self.j < 10 else ","
        return f"u_{{{self.i}{sep}{self.j}}}"

    def to_json(self) -> dict:
        d = {"kind": self.kind, "i": self.i}
        if self.kind == DIAMOND:
            d["j"] = self.j
        return d

    @classmethod
    def from_json(cls, obj: dict) -> "Label":
        return cls(obj["kind"], int(obj["i"]), int(obj.get("j", 0)))

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        if self.kind == DIAMOND:
            return f"Diamond({self.i},{self.j})"
        return f"{self.kind.capitalize()}({self.i})"


def Up(i: int) -> Label:
    return Label(UP, i)


def Down(i: int) -> Label:
    return Label(DOWN, i)


def Diamond(i: int, j: int) -> Label:
    return Label(DIAMOND, i, j)


_LABEL_RE = re.compile(r"^(?:([us])(\d+)|d(\d+)\.(\d+))$")


def parse_label(text: str) -> Label:
    m = _LABEL_RE.match(text.strip().lower())
    if not m:
        raise UnknownLabel(f"cannot parse label {text!r}")
    if m.group(1) == "u":
        return Up(int(m.group(2)))
    if m.group(1) == "s":
        return Down(int(m.group(2)))
    return Diamond(int(m.group(3)), int(m.group(4)))


@dataclass(frozen=True)
class IndexSet:
    path: DyckPath
    labels: tuple[Label, ...]

    @property
    def n(self) -> int:
        return self.path.n

    @cached_property
    def _members(self) -> frozenset[Label]:
        return frozenset(self.labels)

    def __contains__(self, label: Label) -> bool:
        return label in self._members

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    @property
    def diamonds(self) -> tuple[Label, ...]:
        return tuple(x for x in self.labels if x.kind == DIAMOND)

    def require(self, label: Label) -> Label:
        if label not in self._members:
            raise UnknownLabel(f"{label!r} is not in the index set of {self.path}")
        return label

    @cached_property
    def _incompatible(self) -> dict[Label, tuple[Label, ...]]:
        canon = sorted(self.labels)
        return {
            x: tuple(y for y in canon if not _compatible(self.path, x, y))
            for x in self.labels
        }


def index_set(path: DyckPath) -> IndexSet:
    n = path.n
    labels = [Up(i) for i in range(1, n + 1)]
    labels += [Down(i) for i in range(1, n + 1)]
    labels += [
        Diamond(i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if path.below(i, j)
    ]
    return IndexSet(path, tuple(labels))


def _compatible(path: DyckPath, x: Label, y: Label) -> bool:
    if x == y:
        return True
    if _KIND_RANK[x.kind] > _KIND_RANK[y.kind]:
        x, y = y, x
    if x.kind == y.kind:
        if x.kind != DIAMOND:
            return True
        (a, b), (c, d) = (x.i, x.j), (y.i, y.j)
        nested = (a <= c and d <= b) or (c <= a and b <= d)
        return nested or b < c or d < a
    if x.kind == UP and y.kind == DIAMOND:
        return x.i < y.i or y.j <= x.i
    if x.kind == DIAMOND:  # y is a down step
        return y.i <= x.i or x.j < y.i
    # up step x against down step y
    return x.i < y.i or path.down_position(y.i) < path.up_position(x.i)


def compatible(iset: IndexSet, x: Label, y: Label) -> bool:
    iset.require(x)
    iset.require(y)
    return _compatible(iset.path, x, y)


def compatibility_degree(iset: IndexSet, x: Label, y: Label) -> int:
    return 0 if compatible(iset, x, y) else 1


def incompatible_set(iset: IndexSet, x: Label) -> tuple[Label, ...]:
    """Labels incompatible with ``x``, ups then diamonds then downs."""
    iset.require(x)
    return iset._incompatible[x]


def compatibility_matrix(iset: IndexSet) -> list[list[int]]:
    return [[compatibility_degree(iset, x, y) for y in iset.labels] for x in iset.labels]


def chord_label(iset: IndexSet, x: Label) -> tuple[int, int]:
    """Chord of the (n+3)-gon attached to ``x`` for the full path algebra."""
    if not iset.path.is_top:
        raise TopPathOnly("chord labels exist only for the top path")
    iset.require(x)
    n = iset.n
    if x.kind == UP:
        return (1, x.i + 2)
    if x.kind == DOWN:
        return (x.i + 1, n + 3)
    return (x.i + 1, x.j + 2)


def chords_cross(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    (a, b), (c, d) = sorted(c1), sorted(c2)
    return a < c < b < d or c < a < d < b
