"""Formal finite linear combinations with ``TPoly`` coefficients.

``Combo`` is shared by index combinations (the space I[t]) and word
combinations (the algebra H_t).  Subclasses fix the key type, the
concatenation of keys, and the text format of keys.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator

from .tpoly import TPoly, ZERO

_Acc = dict  # key -> {degree: scalar}


def _acc_add(acc: _Acc, key, coeff: TPoly, scale: TPoly) -> None:
    row = acc.get(key)
    if row is None:
        row = acc[key] = {}
    for i, a in enumerate(scale.coeffs):
        if a:
            for j, b in enumerate(coeff.coeffs):
                if b:
                    row[i + j] = row.get(i + j, 0) + a * b


class Combo:
    __slots__ = ("terms",)

    key_field = "key"

    def __init__(self, terms=None):
        d: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for key, c in items:
                key = self.check_key(key)
                c = TPoly.coerce(c)
                if key in d:
                    c = d[key] + c
                if c:
                    d[key] = c
                else:
                    d.pop(key, None)
        self.terms: dict = d

    # -- hooks -------------------------------------------------------------
    @classmethod
    def check_key(cls, key):
        return key

    @staticmethod
    def concat(a, b):
        return a + b

    @staticmethod
    def sort_key(key):
        return key

    @staticmethod
    def format_key(key) -> str:
        return str(key)

    @staticmethod
    def parse_key(text: str):
        return text

    # -- construction ------------------------------------------------------
    @classmethod
    def _trusted(cls, terms: dict):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def _from_acc(cls, acc: _Acc):
        terms = {}
        for key, row in acc.items():
            if not row:
                continue
            top = max(row)
            poly = TPoly([row.get(i, 0) for i in range(top + 1)])
            if poly:
                terms[key] = poly
        return cls._trusted(terms)

    @classmethod
    def zero(cls):
        return cls._trusted({})

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    @classmethod
    def from_graded(cls, graded: Iterable[tuple[Hashable, int, object]]):
        """Sum of ``scalar * t**degree * key`` over ``(key, degree, scalar)``."""
        acc: _Acc = {}
        for key, deg, c in graded:
            if not c:
                continue
            row = acc.get(key)
            if row is None:
                acc[key] = {deg: c}
            else:
                row[deg] = row.get(deg, 0) + c
        return cls._from_acc(acc)

    @classmethod
    def sum(cls, combos: Iterable[Combo]):
        acc: _Acc = {}
        one = TPoly.const(1)
        for v in combos:
            for key, c in v.terms.items():
                _acc_add(acc, key, c, one)
        return cls._from_acc(acc)

    # -- linear structure --------------------------------------------------
    def apply(self, f: Callable[[Hashable], Combo], cls=None):
        """Extend ``f`` (key -> combo) linearly over ``Q[t]``."""
        acc: _Acc = {}
        for key, c in self.terms.items():
            img = f(key)
            if cls is None:
                cls = type(img)
            for k2, c2 in img.terms.items():
                _acc_add(acc, k2, c2, c)
        return (cls or type(self))._from_acc(acc)

    def bilinear(self, other: Combo, f: Callable[[Hashable, Hashable], Combo], cls=None):
        acc: _Acc = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                img = f(k1, k2)
                if cls is None:
                    cls = type(img)
                scale = c1 * c2
                for k3, c3 in img.terms.items():
                    _acc_add(acc, k3, c3, scale)
        return (cls or type(self))._from_acc(acc)

    def map_keys(self, f: Callable[[Hashable], Hashable], cls=None):
        """Apply a key-to-key map linearly (images may collide)."""
        cls = cls or type(self)
        out: dict = {}
        for key, c in self.terms.items():
            k2 = f(key)
            c2 = out[k2] + c if k2 in out else c
            if c2:
                out[k2] = c2
            else:
                out.pop(k2, None)
        return cls._trusted(out)

    def __add__(self, other):
        if not isinstance(other, Combo):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            c2 = out[key] + c if key in out else c
            if c2:
                out[key] = c2
            else:
                del out[key]
        return type(self)._trusted(out)

    def __neg__(self):
        return type(self)._trusted({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Combo):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> Combo:
        c = TPoly.coerce(c)
        if not c:
            return type(self).zero()
        if c.is_constant():
            s = c.coeffs[0]
            return type(self)._trusted({k: v * s for k, v in self.terms.items()})
        return type(self)._trusted({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Combo):
            cat = self.concat
            return self.bilinear(other, lambda a, b: type(self)._trusted({cat(a, b): TPoly.const(1)}), type(self))
        if isinstance(other, (int, Fraction, TPoly)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            return self.scale(other)
        return NotImplemented

    # -- inspection --------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Combo):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None  # mutable-looking container semantics; compare structurally

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.items())

    def __contains__(self, key) -> bool:
        return key in self.terms

    def items(self) -> list[tuple[Hashable, TPoly]]:
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def keys(self) -> list:
        return [k for k, _ in self.items()]

    def coefficient(self, key) -> TPoly:
        return self.terms.get(key, ZERO)

    def degree(self) -> int:
        """Largest t-degree among coefficients (-1 for zero)."""
        return max((c.degree for c in self.terms.values()), default=-1)

    def t_coeff(self, n: int):
        """Coefficient of t**n, as a combination with constant coefficients."""
        out = {}
        for key, c in self.terms.items():
            a = c.coeff(n)
            if a:
                out[key] = TPoly.const(a)
        return type(self)._trusted(out)

    def at_t(self, value):
        """Specialize t to a rational value."""
        out = {}
        for key, c in self.terms.items():
            a = c(value)
            if a:
                out[key] = TPoly.const(a)
        return type(self)._trusted(out)

    def substitute(self, a, b):
        """Substitute t -> a + b t in every coefficient."""
        out = {}
        for key, c in self.terms.items():
            c2 = c.substitute(a, b)
            if c2:
                out[key] = c2
        return type(self)._trusted(out)

    def mass(self) -> Fraction:
        """Sum of all coefficients at t = 1."""
        return sum((c(1) for c in self.terms.values()), Fraction(0))

    # -- text / json -------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [{self.key_field: self.format_key(k), "tcoeffs": c.to_strings()} for k, c in self.items()]

    @classmethod
    def from_json(cls, items: Iterable[dict]):
        return cls((cls.parse_key(it[cls.key_field]), TPoly.from_strings(it["tcoeffs"])) for it in items)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, c in self.items():
            k = self.format_key(key)
            if c == 1:
                parts.append(f"[{k}]")
            elif c.is_constant():
                parts.append(f"{c}*[{k}]")
            else:
                parts.append(f"({c})*[{k}]")
        return " + ".join(parts)
