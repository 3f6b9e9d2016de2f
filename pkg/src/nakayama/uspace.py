"""u-equations, the F-polynomial parametrization, g-vectors and boundary divisors."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import _exact
from .errors import PoleAtPoint, UnknownLabel
from .grid import DyckPath, from_heights, top_path
from .indexset import (
    DIAMOND,
    DOWN,
    UP,
    Diamond,
    Down,
    IndexSet,
    Label,
    Up,
    index_set,
    incompatible_set,
)
from .report import Report
from .symbolic import F_atom, Factored, RationalFunction, y_atom


# --- u-equations -------------------------------------------------------------


@dataclass(frozen=True)
class UEquationSystem:
    iset: IndexSet
    rows: dict  # Label -> tuple of incompatible labels, canonical order

    @property
    def path(self) -> DyckPath:
        return self.iset.path

    def labels(self) -> list[Label]:
        """Equation order: ups, diamonds, downs."""
        return sorted(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def equation_text(self, x: Label) -> str:
        prod = "*".join(y.text for y in self.rows[x]) or "1"
        return f"{x.text} + {prod} = 1"

    def equation_latex(self, x: Label, tilde: bool = False) -> str:
        def tex(lab: Label) -> str:
            s = lab.latex
            return "\\widetilde{u}" + s[1:] if tilde else s

        prod = " ".join(tex(y) for y in self.rows[x]) or "1"
        return f"{tex(x)} + {prod} = 1"

    def to_text(self) -> list[str]:
        return [self.equation_text(x) for x in self.labels()]

    def to_latex(self, tilde: bool = False) -> list[str]:
        return [self.equation_latex(x, tilde) for x in self.labels()]

    def to_json(self) -> list[dict]:
        return [
            {"label": x.text, "incompatible": [y.text for y in self.rows[x]]}
            for x in self.labels()
        ]


def u_system(path: DyckPath) -> UEquationSystem:
    iset = index_set(path)
    return UEquationSystem(iset, {x: incompatible_set(iset, x) for x in iset.labels})


# --- parametrization ---------------------------------------------------------


def _f_factored(path: DyckPath, x: Label) -> Factored:
    n = path.n
    F = lambda a, b: F_atom(n, a, b)  # noqa: E731
    if x.kind == DIAMOND:
        i, j = x.i, x.j
        return Factored.from_factors(
            n, [(F(i, j), 1), (F(i + 1, j - 1), 1), (F(i + 1, j), -1), (F(i, j - 1), -1)]
        )
    if x.kind == UP:
        ji = path.j(x.i)
        return Factored.from_factors(n, [(F(ji, x.i - 1), 1), (F(ji, x.i), -1)])
    ki = path.k(x.i)
    return Factored.from_factors(
        n, [(y_atom(x.i), 1), (F(x.i + 1, ki), 1), (F(x.i, ki), -1)]
    )


def _closed_form(path: DyckPath, x: Label) -> Factored:
    """The positive expression for 1 - f_X."""
    n = path.n
    F = lambda a, b: F_atom(n, a, b)  # noqa: E731
    if x.kind == DIAMOND:
        i, j = x.i, x.j
        ys = [(y_atom(m), 1) for m in range(i + 1, j + 1)]
        return Factored.from_factors(n, ys + [(F(i, j - 1), -1), (F(i + 1, j), -1)])
    if x.kind == UP:
        ji = path.j(x.i)
        ys = [(y_atom(m), 1) for m in range(ji, x.i + 1)]
        return Factored.from_factors(n, ys + [(F(ji, x.i), -1)])
    return Factored.from_factors(n, [(F(x.i, path.k(x.i)), -1)])


class Parametrization:
    """The map X -> f_X, kept in factored form and expanded on demand."""

    def __init__(self, path: DyckPath):
        self.path = path
        self.iset = index_set(path)
        self.factored = {x: _f_factored(path, x) for x in self.iset.labels}

    @property
    def n(self) -> int:
        return self.path.n

    def __getitem__(self, x: Label) -> RationalFunction:
        return self.rational(x)

    def rational(self, x: Label) -> RationalFunction:
        if x not in self.factored:
            raise UnknownLabel(f"{x!r} is not in the index set of {self.path}")
        return self.factored[x].to_rational()

    def labels(self) -> tuple[Label, ...]:
        return self.iset.labels

    def closed_form(self, x: Label) -> Factored:
        return _closed_form(self.path, x)


def parametrization(path: DyckPath) -> Parametrization:
    return Parametrization(path)


def verify_parametrization(path: DyckPath, expand: bool = False) -> Report:
    """Check every u-equation and every closed form for 1 - f_X.

    With ``expand=True`` the product side is multiplied out as an unreduced
    rational function instead of being cancelled in factored form first.
    """
    par = parametrization(path)
    system = u_system(path)
    rep = Report(path.steps)
    one = RationalFunction.constant(path.n, 1)
    for x in system.labels():
        fx = par.factored[x]
        if expand:
            prod = one
            for y in system.rows[x]:
                prod = prod * par.factored[y].to_rational()
        else:
            acc = Factored.one(path.n)
            for y in system.rows[x]:
                acc = acc * par.factored[y]
            prod = acc.to_rational()
        lhs = fx.to_rational() + prod
        diff = lhs.cross_difference(one)
        rep.add(x.text, "ueq", diff.is_zero(), None if diff.is_zero() else str(diff))

        closed = par.closed_form(x).to_rational()
        diff2 = (one - fx.to_rational()).cross_difference(closed)
        rep.add(x.text, "closed", diff2.is_zero(), None if diff2.is_zero() else str(diff2))
    return rep


# --- g-vectors and tropical duality --------------------------------------------


def g_vector(x: Label, n: int) -> tuple[int, ...]:
    g = [0] * n
    if x.kind == DOWN:
        g[x.i - 1] = 1
    elif x.kind == UP:
        g[x.i - 1] = -1
    else:
        g[x.i - 1] = 1
        g[x.j - 1] = -1
    return tuple(g)


def tropical_matrix(path: DyckPath) -> tuple[list[Label], list[list[Fraction]]]:
    par = parametrization(path)
    labels = sorted(par.labels())
    gs = [g_vector(y, path.n) for y in labels]
    return labels, [[par.factored[x].trop(g) for g in gs] for x in labels]


def verify_tropical_duality(path: DyckPath) -> Report:
    labels, mat = tropical_matrix(path)
    rep = Report(path.steps)
    for a, x in enumerate(labels):
        bad = [
            (labels[b].text, str(v))
            for b, v in enumerate(mat[a])
            if v != (1 if a == b else 0)
        ]
        rep.add(x.text, "trop", not bad, bad or None)
    return rep


# --- points and dimension ----------------------------------------------------


def evaluate_point(path: DyckPath, y) -> dict[Label, Fraction]:
    if len(y) != path.n:
        raise ValueError(f"expected {path.n} coordinates, got {len(y)}")
    y = [Fraction(v) for v in y]
    par = parametrization(path)
    out = {}
    for x in sorted(par.labels()):
        try:
            out[x] = par.factored[x].evaluate(y)
        except ZeroDivisionError as exc:
            raise PoleAtPoint(f"f_{x.text} has a pole at {y}") from exc
    return out


def jacobian(path: DyckPath, y) -> list[list[Fraction]]:
    par = parametrization(path)
    y = [Fraction(v) for v in y]
    try:
        return [par.factored[x].gradient(y) for x in sorted(par.labels())]
    except ZeroDivisionError as exc:
        raise PoleAtPoint(f"parametrization has a pole at {y}") from exc


def jacobian_rank(path: DyckPath, y) -> int:
    return _exact.rank(jacobian(path, y))


# --- boundary divisors -------------------------------------------------------


@dataclass(frozen=True)
class DivisorFactorization:
    """Splitting of the slice u_X = 0 into two smaller configuration spaces.

    ``relabel`` sends each label of I_A compatible with X (other than X) to a
    pair (side, label) with side 0 for ``left`` and 1 for ``right``.
    """

    path: DyckPath
    label: Label
    left: DyckPath
    right: DyckPath
    relabel: dict

    @property
    def ranks(self) -> tuple[int, int]:
        return (self.left.n, self.right.n)


def _path_from_diamonds(n: int, diamonds: set[tuple[int, int]]) -> DyckPath:
    k = [max([p] + [l for (a, l) in diamonds if a == p]) for p in range(1, n + 1)]
    return from_heights(k) if n else DyckPath(0, "")


def _heights_path(k: list[int]) -> DyckPath:
    return from_heights(k) if k else DyckPath(0, "")


def divisor_factorization(path: DyckPath, x: Label) -> DivisorFactorization:
    iset = index_set(path)
    iset.require(x)
    n = path.n
    relabel: dict[Label, tuple[int, Label]] = {}

    if x.kind == DIAMOND:
        i, j = x.i, x.j
        w = j - i
        left = top_path(w - 1)
        c = lambda v: v if v <= i else v - w  # noqa: E731
        outer: set[tuple[int, int]] = set()
        for p in range(1, n + 1):
            if p < i:
                relabel[Up(p)] = (1, Up(p))
            elif p >= j:
                relabel[Up(p)] = (1, Up(p - w))
            if p <= i:
                relabel[Down(p)] = (1, Down(p))
            elif p > j:
                relabel[Down(p)] = (1, Down(p - w))
        for d in iset.diamonds:
            a, b = d.i, d.j
            if d == x:
                continue
            if a == i and b < j:
                relabel[d] = (0, Up(b - i))
            elif b == j and a > i:
                relabel[d] = (0, Down(a - i))
            elif i < a and b < j:
                relabel[d] = (0, Diamond(a - i, b - i))
            elif (a <= i and j <= b) or b < i or j < a:
                outer.add((c(a), c(b)))
                relabel[d] = (1, Diamond(c(a), c(b)))
        right = _path_from_diamonds(n - w, outer)
        return DivisorFactorization(path, x, left, right, relabel)

    i = x.i
    k = path.k_heights
    right = _heights_path([k[q + i - 1] - i for q in range(1, n - i + 1)])
    left = _heights_path([min(k[p - 1], i - 1) for p in range(1, i)])
    # right side is rank n - i and plays the role of A', left is A''
    for d in iset.diamonds:
        a, b = d.i, d.j
        if b < i:
            relabel[d] = (1, d)
        elif a > i:
            relabel[d] = (0, Diamond(a - i, b - i))
    for p in range(1, n + 1):
        if p < i:
            relabel[Up(p)] = (1, Up(p))
        if p > i:
            relabel[Down(p)] = (0, Down(p - i))
    if x.kind == UP:
        for p in range(i + 1, n + 1):
            relabel[Up(p)] = (0, Up(p - i))
        for p in range(1, i):
            if path.below(p, i):
                relabel[Diamond(p, i)] = (1, Down(p))
            else:
                relabel[Down(p)] = (1, Down(p))
    else:
        for p in range(1, i):
            relabel[Down(p)] = (1, Down(p))
        for p in range(i + 1, n + 1):
            if p <= path.k(i):
                relabel[Diamond(i, p)] = (0, Up(p - i))
            else:
                relabel[Up(p)] = (0, Up(p - i))
    return DivisorFactorization(path, x, right, left, relabel)


def expected_divisor_ranks(n: int, x: Label) -> tuple[int, int]:
    if x.kind == DIAMOND:
        return (x.j - x.i - 1, n + x.i - x.j)
    return (n - x.i, x.i - 1)


def residual_system(path: DyckPath, x: Label) -> dict[Label, frozenset[Label]]:
    """Equations left after u_X = 0 and u_Y = 1 for every Y incompatible with X."""
    system = u_system(path)
    inc_x = set(system.rows[x])
    survivors = {z for z in system.rows if z != x and z not in inc_x}
    out = {}
    for z in survivors:
        # X never appears here: it is compatible with every survivor
        out[z] = frozenset(w for w in system.rows[z] if w in survivors)
    return out


def verify_divisor(path: DyckPath, x: Label) -> Report:
    fact = divisor_factorization(path, x)
    rep = Report(path.steps)
    residual = residual_system(path, x)
    sides = (u_system(fact.left), u_system(fact.right))

    rep.add(x.text, "divisor-ranks", fact.ranks == expected_divisor_ranks(path.n, x),
            {"ranks": list(fact.ranks)})

    targets = {(s, lab) for s in (0, 1) for lab in sides[s].rows}
    images = list(fact.relabel.values())
    bijective = (
        set(fact.relabel) == set(residual)
        and len(set(images)) == len(images)
        and set(images) == targets
    )
    rep.add(x.text, "divisor-relabel", bijective,
            None if bijective else {"survivors": len(residual), "targets": len(targets)})
    if not bijective:
        return rep

    mismatches = []
    for z, inc in residual.items():
        side, zz = fact.relabel[z]
        mapped = {fact.relabel[w] for w in inc}
        expected = {(side, w) for w in sides[side].rows[zz]}
        if mapped != expected:
            mismatches.append(z.text)
    rep.add(x.text, "divisor", not mismatches, mismatches or None)
    return rep


def verify_all_divisors(path: DyckPath) -> Report:
    rep = Report(path.steps)
    for x in index_set(path).labels:
        try:
            rep.extend(verify_divisor(path, x))
        except Exception as exc:  # construction bug surfaces as a failed check
            rep.add(x.text, "divisor", False, repr(exc))
    return rep


def documented_divisor_example() -> dict:
    """The slice u_2 = 0 for CA_5/<alpha_2 alpha_1>, with ranks as computed here.

    The factorization CA_1 x CA_2 sometimes quoted for this slice cannot hold:
    the two ranks must add up to n - 1 = 4.
    """
    path = from_heights([2, 5, 5, 5, 5])
    fact = divisor_factorization(path, Up(2))
    ok = verify_divisor(path, Up(2)).passed
    return {
        "path": path.steps,
        "label": "u2",
        "claimed_ranks": [1, 2],
        "computed_ranks": list(fact.ranks),
        "left": fact.left.steps,
        "right": fact.right.steps,
        "verified": ok,
    }

