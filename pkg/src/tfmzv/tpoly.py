"""Univariate polynomials in ``t`` with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class TPoly:
    """Dense polynomial in t, constant term first, trailing zeros trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, coeffs: tuple[Fraction, ...]) -> TPoly:
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def const(cls, c: Scalar) -> TPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, degree: int) -> TPoly:
        return cls([0] * degree + [c])

    @classmethod
    def coerce(cls, c) -> TPoly:
        if isinstance(c, TPoly):
            return c
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == TPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> TPoly:
        return TPoly._trusted(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> TPoly:
        if not isinstance(other, TPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = TPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return TPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> TPoly:
        if not isinstance(other, (TPoly, int, Fraction)):
            return NotImplemented
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other) -> TPoly:
        return TPoly.coerce(other) - self

    def __mul__(self, other) -> TPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return TPoly._trusted(tuple(c * other for c in self.coeffs))
        if not isinstance(other, TPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> TPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def substitute(self, a: Scalar, b: Scalar) -> TPoly:
        """Return q(a + b t)."""
        lin = TPoly((a, b))
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * lin + c
        return acc

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Iterable[str]) -> TPoly:
        return cls(Fraction(s) for s in items)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(str(c))
        return " + ".join(parts).replace("+ -", "- ")


ZERO = TPoly()
ONE = TPoly((1,))
T = TPoly((0, 1))
