"""Sparse multivariate and dense univariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction` throughout. Both polynomial
classes are immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

Rational = Fraction
Monomial = tuple

_RATIONAL_LITERAL = re.compile(r"[+-]?\d+(/\d+)?")


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently smuggle rounding into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_LITERAL.fullmatch(text):
            raise ValueError(f"malformed rational literal {value!r}, expected 'p' or 'p/q'")
        return Fraction(text)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


class MultiPoly:
    """Sparse polynomial in ``nvars`` variables, keyed by exponent tuples."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object] | None = None):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        clean: dict[tuple, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have length {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = as_rational(coeff)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "MultiPoly":
        # terms already validated and free of zeros
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MultiPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    # inspection

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def support(self) -> frozenset:
        return frozenset(self._terms)

    def degree_in(self, index: int) -> int:
        """Largest exponent of variable ``index`` (0-based)."""
        if not self._terms:
            raise ValueError("the zero polynomial has no defined degree")
        if not 0 <= index < self.nvars:
            raise IndexError(f"variable index {index} out of range for {self.nvars} variables")
        return max(e[index] for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            raise ValueError("the zero polynomial has no defined degree")
        return max(sum(e) for e in self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        pt = [as_rational(x) for x in point]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(pt, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def partial(self, index: int) -> "MultiPoly":
        out = {}
        for exps, c in self._terms.items():
            e = exps[index]
            if e:
                new = list(exps)
                new[index] = e - 1
                out[tuple(new)] = c * e
        return MultiPoly._raw(self.nvars, out)

    def shift(self, offsets: Sequence) -> "MultiPoly":
        """Return ``f(x_1 + o_1, ..., x_n + o_n)``."""
        if len(offsets) != self.nvars:
            raise ValueError("offset vector has the wrong length")
        result = self
        for i, off in enumerate(offsets):
            off = as_rational(off)
            if off:
                xi = MultiPoly.variable(self.nvars, i) + MultiPoly.constant(self.nvars, off)
                result = result.compose_variable(i, xi)
        return result

    def compose_variable(self, index: int, replacement: "MultiPoly") -> "MultiPoly":
        """Substitute ``replacement`` for variable ``index``."""
        powers = {0: MultiPoly.constant(self.nvars, 1)}
        out = MultiPoly.zero(self.nvars)
        for exps, c in self._terms.items():
            e = exps[index]
            if e not in powers:
                powers[e] = replacement**e
            rest = list(exps)
            rest[index] = 0
            out = out + MultiPoly._raw(self.nvars, {tuple(rest): c}) * powers[e]
        return out

    def permute(self, order: Sequence[int]) -> "MultiPoly":
        """New variable ``k`` is old variable ``order[k]``."""
        if sorted(order) != list(range(self.nvars)):
            raise ValueError(f"{list(order)} is not a permutation of range({self.nvars})")
        return MultiPoly._raw(
            self.nvars, {tuple(exps[j] for j in order): c for exps, c in self._terms.items()}
        )

    # arithmetic

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"arity mismatch: {self.nvars} vs {other.nvars} variables")
            return other
        return MultiPoly.constant(self.nvars, other)

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            v = out.get(exps, 0) + c
            if v:
                out[exps] = v
            else:
                out.pop(exps, None)
        return MultiPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                k = as_rational(other)
            except TypeError:
                return NotImplemented
            if not k:
                return MultiPoly.zero(self.nvars)
            return MultiPoly._raw(self.nvars, {e: c * k for e, c in self._terms.items()})
        other = self._coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = MultiPoly.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self._terms == other._terms
        try:
            return self == MultiPoly.constant(self.nvars, other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # printing

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        """Terms in graded-lex order, highest first."""
        return sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        names = list(names) if names is not None else default_names(self.nvars)
        if len(names) != self.nvars:
            raise ValueError("wrong number of variable names")
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            else:
                body = format_rational(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"MultiPoly({self.nvars}, {self.to_string()!r})"


def default_names(nvars: int) -> list[str]:
    return [f"x{i + 1}" for i in range(nvars)]


class UniPoly:
    """Dense univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: list) -> "UniPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            k = as_rational(other)
            return UniPoly._raw([c * k for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        # integer convolution over one denominator per operand
        da = lcm(*(x.denominator for x in a))
        db = lcm(*(y.denominator for y in b))
        ia = [x.numerator * (da // x.denominator) for x in a]
        ib = [y.numerator * (db // y.denominator) for y in b]
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(ia):
            if x:
                for j, y in enumerate(ib):
                    out[i + j] += x * y
        den = da * db
        return UniPoly._raw([Fraction(c, den) for c in out])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dlen = len(other.coeffs)
        lead = other.coeffs[-1]
        if len(rem) < dlen:
            return UniPoly(), self
        quot = [Fraction(0)] * (len(rem) - dlen + 1)
        for k in range(len(rem) - dlen, -1, -1):
            q = rem[k + dlen - 1] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return UniPoly._raw(quot), UniPoly._raw(rem[: dlen - 1])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def exact_div(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "UniPoly":
        return UniPoly._raw([c * i for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd; gcd(0, 0) = 0."""
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def shift(self, x0) -> "UniPoly":
        """Return ``p(x + x0)`` by repeated synthetic division."""
        x0 = as_rational(x0)
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for j in range(n - 2, i - 1, -1):
                cs[j] += x0 * cs[j + 1]
        return UniPoly._raw(cs)

    def to_string(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = {(i,): c for i, c in enumerate(self.coeffs) if c}
        return MultiPoly(1, terms).to_string([var])

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"UniPoly({self.to_string()!r})"


def root_multiplicity(p: UniPoly, x0) -> int:
    """Largest ``k`` with ``(X - x0)^k`` dividing ``p``."""
    if not p:
        raise ValueError("root multiplicity of the zero polynomial is undefined")
    x0 = as_rational(x0)
    cs = list(p.coeffs)
    k = 0
    while True:
        # synthetic division by (X - x0)
        acc = Fraction(0)
        quot = []
        for c in reversed(cs):
            acc = acc * x0 + c
            quot.append(acc)
        if acc:
            return k
        k += 1
        cs = list(reversed(quot[:-1]))
