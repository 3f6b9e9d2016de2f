"""Exact polynomial and rational-function arithmetic in y_1, ..., y_n.

Polynomials are sparse maps from dense exponent tuples to Python ints.
Rational functions are unreduced numerator/denominator pairs compared by
cross-multiplication.  ``Factored`` keeps a Laurent monomial in the atoms
y_i and F_{i,j}, which is the natural shape of every f_X and lets products
cancel before anything is expanded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .errors import ZeroDenominator

Exponent = tuple[int, ...]


class Polynomial:
    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != nvars:
                raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
            if c:
                clean[tuple(e)] = int(c)
        self.terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, k: int) -> "Polynomial":
        """The variable y_k (1-based)."""
        e = [0] * nvars
        e[k - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Exponent, coeff: int = 1) -> "Polynomial":
        return cls(len(exps), {tuple(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        self._check(other)
        return other

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.terms.items())))
        return self._hash

    def evaluate(self, point) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = Fraction(c)
            for v, k in zip(point, e):
                if k:
                    term *= Fraction(v) ** k
            total += term
        return total

    def derivative(self, k: int) -> "Polynomial":
        """Formal partial derivative in y_k (1-based)."""
        out = {}
        for e, c in self.terms.items():
            p = e[k - 1]
            if p:
                e2 = list(e)
                e2[k - 1] = p - 1
                out[tuple(e2)] = c * p
        return Polynomial(self.nvars, out)

    def support(self) -> list[Exponent]:
        return list(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.terms.items()]

    @classmethod
    def from_json(cls, nvars: int, data) -> "Polynomial":
        return cls(nvars, {tuple(e): c for e, c in data})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            factors = []
            for idx, k in enumerate(e, start=1):
                if k == 1:
                    factors.append(f"y{idx}")
                elif k > 1:
                    factors.append(f"y{idx}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.constant(num.nvars, 1)
        num._check(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        self.num = num
        self.den = den

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @classmethod
    def constant(cls, nvars: int, c: int) -> "RationalFunction":
        return cls(Polynomial.constant(nvars, c))

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, int):
            return RationalFunction.constant(self.nvars, other)
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        return other

    def __add__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Polynomial)):
            other = self._coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def cross_difference(self, other: "RationalFunction") -> Polynomial:
        """num1*den2 - num2*den1; zero exactly when the two are equal."""
        other = self._coerce(other)
        return self.num * other.den - other.num * self.den

    def evaluate(self, point) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.num.evaluate(point) / d

    def __str__(self) -> str:
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def rf_mul(a: RationalFunction, b: RationalFunction) -> RationalFunction:
    return a * b


def rf_equal(a: RationalFunction, b: RationalFunction) -> bool:
    return a == b


def partial_derivative(p: Polynomial, k: int) -> Polynomial:
    return p.derivative(k)


@lru_cache(maxsize=None)
def f_polynomial(n: int, i: int, j: int) -> Polynomial:
    """F_{i,j} = 1 + y_i + y_i y_{i+1} + ... + y_i...y_j in n variables.

    Returns 1 when i = 0, j = n + 1 or i > j.
    """
    if not (0 <= i <= n + 1 and 0 <= j <= n + 1):
        raise ValueError(f"F index ({i}, {j}) out of range for n={n}")
    if i == 0 or j == n + 1 or i > j:
        return Polynomial.constant(n, 1)
    terms = {(0,) * n: 1}
    e = [0] * n
    for m in range(i, j + 1):
        e[m - 1] = 1
        terms[tuple(e)] = 1
    return Polynomial(n, terms)


def y_range(n: int, i: int, j: int) -> Polynomial:
    """The monomial y_i y_{i+1} ... y_j (1 when i > j)."""
    e = [0] * n
    for m in range(i, j + 1):
        e[m - 1] = 1
    return Polynomial.monomial(tuple(e))


# --- tropical evaluation -------------------------------------------------------


@dataclass(frozen=True)
class TropicalForm:
    """Support of a subtraction-free expression; evaluates to min <a, Y>."""

    support: frozenset[Exponent]

    @classmethod
    def of(cls, p: Polynomial) -> "TropicalForm":
        return cls(frozenset(p.support()))

    def __call__(self, point) -> Fraction:
        return trop_eval(self, point)


def trop_eval(form: TropicalForm, point) -> Fraction:
    if not form.support:
        raise ValueError("tropicalization of the zero polynomial")
    pt = [Fraction(v) for v in point]
    return min(sum((a * v for a, v in zip(e, pt)), Fraction(0)) for e in form.support)


# --- factored Laurent monomials in y_i and F_{i,j} ----------------------------


@dataclass(frozen=True, order=True)
class Atom:
    """Either the variable y_i (``kind='y'``) or the polynomial F_{i,j} (``'F'``)."""

    kind: str
    i: int
    j: int = 0

    def polynomial(self, n: int) -> Polynomial:
        if self.kind == "y":
            return Polynomial.variable(n, self.i)
        return f_polynomial(n, self.i, self.j)

    def trop(self, point) -> Fraction:
        if self.kind == "y":
            return Fraction(point[self.i - 1])
        # min over the prefix sums 0, Y_i, Y_i + Y_{i+1}, ...
        best = acc = Fraction(0)
        for m in range(self.i, self.j + 1):
            acc += Fraction(point[m - 1])
            best = min(best, acc)
        return best

    def value(self, point) -> Fraction:
        if self.kind == "y":
            return Fraction(point[self.i - 1])
        total = acc = Fraction(1)
        for m in range(self.i, self.j + 1):
            acc *= Fraction(point[m - 1])
            total += acc
        return total

    def derivative_value(self, point, k: int) -> Fraction:
        """d(atom)/dy_k evaluated at ``point``."""
        if self.kind == "y":
            return Fraction(1 if k == self.i else 0)
        if not self.i <= k <= self.j:
            return Fraction(0)
        # terms y_i...y_m with m >= k contain y_k exactly once
        total = Fraction(0)
        acc = Fraction(1)
        for m in range(self.i, self.j + 1):
            if m != k:
                acc *= Fraction(point[m - 1])
            if m >= k:
                total += acc
        return total

    def __str__(self) -> str:
        return f"y{self.i}" if self.kind == "y" else f"F{self.i},{self.j}"


def y_atom(i: int) -> Atom:
    return Atom("y", i)


def F_atom(n: int, i: int, j: int) -> Atom | None:
    """Atom for F_{i,j}, or None when the convention makes it the constant 1."""
    if i == 0 or j == n + 1 or i > j:
        return None
    return Atom("F", i, j)


class Factored:
    """Laurent monomial prod atom^e with integer exponents, in n variables."""

    __slots__ = ("n", "exps")

    def __init__(self, n: int, exps: Mapping[Atom, int] | None = None):
        self.n = n
        self.exps = {a: e for a, e in sorted((exps or {}).items()) if e}

    @classmethod
    def one(cls, n: int) -> "Factored":
        return cls(n)

    @classmethod
    def from_factors(cls, n: int, factors: Iterable[tuple[Atom | None, int]]) -> "Factored":
        out: dict[Atom, int] = {}
        for atom, e in factors:
            if atom is not None:
                out[atom] = out.get(atom, 0) + e
        return cls(n, out)

    def __mul__(self, other: "Factored") -> "Factored":
        out = dict(self.exps)
        for a, e in other.exps.items():
            out[a] = out.get(a, 0) + e
        return Factored(self.n, out)

    def __pow__(self, k: int) -> "Factored":
        return Factored(self.n, {a: e * k for a, e in self.exps.items()})

    def inverse(self) -> "Factored":
        return self ** -1

    def __truediv__(self, other: "Factored") -> "Factored":
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        return isinstance(other, Factored) and self.n == other.n and self.exps == other.exps

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.exps.items())))

    def is_one(self) -> bool:
        return not self.exps

    def to_rational(self) -> RationalFunction:
        num = Polynomial.constant(self.n, 1)
        den = Polynomial.constant(self.n, 1)
        for a, e in self.exps.items():
            p = a.polynomial(self.n)
            if e > 0:
                num = num * p**e
            else:
                den = den * p ** (-e)
        return RationalFunction(num, den)

    def trop(self, point) -> Fraction:
        return sum((e * a.trop(point) for a, e in self.exps.items()), Fraction(0))

    def evaluate(self, point) -> Fraction:
        out = Fraction(1)
        for a, e in self.exps.items():
            v = a.value(point)
            if v == 0 and e < 0:
                raise ZeroDivisionError(f"{a} vanishes at point")
            out *= v**e
        return out

    def gradient(self, point) -> list[Fraction]:
        """Exact partial derivatives at ``point`` via the logarithmic derivative."""
        value = self.evaluate(point)
        grad = []
        for k in range(1, self.n + 1):
            s = Fraction(0)
            for a, e in self.exps.items():
                d = a.derivative_value(point, k)
                if d:
                    s += e * d / a.value(point)
            grad.append(value * s)
        return grad

    def factors(self) -> list[tuple[Atom, int]]:
        return list(self.exps.items())

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        num = [f"{a}^{e}" if e > 1 else str(a) for a, e in self.exps.items() if e > 0]
        den = [f"{a}^{-e}" if e < -1 else str(a) for a, e in self.exps.items() if e < 0]
        top = "*".join(num) or "1"
        return top if not den else f"{top} / ({'*'.join(den)})"

    def __repr__(self) -> str:
        return f"Factored({self})"


def trop_of_monomial_in_F(factors: Iterable[tuple[Atom, int]]) -> Callable[[object], Fraction]:
    """Piecewise-linear evaluator Y -> sum e * trop(atom)(Y)."""
    factors = list(factors)

    def evaluate(point) -> Fraction:
        return sum((e * a.trop(point) for a, e in factors), Fraction(0))

    return evaluate
