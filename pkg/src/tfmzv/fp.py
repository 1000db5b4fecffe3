"""Evaluation of truncated multiple harmonic sums and their t-interpolations over F_p."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, MutableMapping, Sequence

import numpy as np

from .combo import Combo
from .indices import Index, IndexCombo, check_index, contractions
from .tpoly import TPoly

MAX_PRIME = 10_000
MAX_T_DEPTH = 12


class NotPrimeError(ValueError):
    def __init__(self, p: int, witness: int | None):
        if witness is None:
            msg = f"{p} is not an odd prime >= 3"
        elif witness == 2:
            msg = f"{p} is even, not an odd prime"
        else:
            msg = f"{p} is not an odd prime ({witness} divides {p})"
        super().__init__(msg)
        self.p = p
        self.witness = witness


class PDividesDenominator(ArithmeticError):
    """A rational coefficient cannot be reduced modulo p."""

    def __init__(self, p: int, key, coefficient):
        super().__init__(f"p={p} divides the denominator of coefficient {coefficient} on {key!r}")
        self.p = p
        self.key = key
        self.coefficient = coefficient


def smallest_factor(n: int) -> int | None:
    """Smallest prime factor of n >= 2 by trial division (None if n is prime)."""
    if n % 2 == 0:
        return 2 if n != 2 else None
    d = 3
    while d * d <= n:
        if n % d == 0:
            return d
        d += 2
    return None


def odd_primes(lo: int, hi: int) -> list[int]:
    return [p for p in range(max(lo, 3), hi + 1) if p % 2 and smallest_factor(p) is None]


class FpPoly:
    """Polynomial in t over F_p, constant term first, trailing zeros trimmed."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        cs = [c % p for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.p = p
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def const(cls, p: int, c: int) -> FpPoly:
        return cls(p, (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == FpPoly(self.p, (other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def _lift(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        raise TypeError(f"cannot combine FpPoly with {type(other).__name__}")

    def __add__(self, other) -> FpPoly:
        other = self._lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return FpPoly(self.p, out)

    __radd__ = __add__

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other) -> FpPoly:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> FpPoly:
        return self._lift(other) - self

    def __mul__(self, other) -> FpPoly:
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return FpPoly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * value + c) % self.p
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    def __repr__(self) -> str:
        return f"FpPoly(p={self.p}, {list(self.coeffs)})"


def poly_compose_affine(q: FpPoly, a: int, b: int) -> FpPoly:
    """q(a + b t) over F_p."""
    lin = FpPoly(q.p, (a, b))
    acc = FpPoly(q.p)
    for c in reversed(q.coeffs):
        acc = acc * lin + c
    return acc


class PrimeCtx:
    """Per-prime tables (inverses, powers, Bernoulli numbers) and value caches.

    ``tcache`` maps an index to the coefficient list of its interpolated value
    and may be shared with a persistent store.
    """

    def __init__(self, p: int, tcache: MutableMapping[Index, tuple[int, ...]] | None = None):
        if isinstance(p, bool) or not isinstance(p, int) or p < 3:
            raise NotPrimeError(p, 2 if isinstance(p, int) and p == 2 else None)
        w = smallest_factor(p)
        if w is not None:
            raise NotPrimeError(p, w)
        if p > MAX_PRIME:
            raise ValueError(f"p={p} exceeds the supported range p <= {MAX_PRIME}")
        self.p = p
        inv = [0] * p
        inv[1] = 1
        for m in range(2, p):
            inv[m] = (p - (p // m) * inv[p % m] % p) % p
        self.inv = inv
        self._inv_arr = np.array(inv[1:], dtype=np.int64)
        self._pow: dict[int, np.ndarray] = {}
        self._strict: dict[Index, int] = {}
        self._star: dict[Index, int] = {}
        self.tcache: MutableMapping[Index, tuple[int, ...]] = {} if tcache is None else tcache
        self._bernoulli: list[int] | None = None

    def __repr__(self) -> str:
        return f"PrimeCtx({self.p})"

    def reduce(self, c: Fraction | int, key=None) -> int:
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise PDividesDenominator(self.p, key, c)
        return c.numerator * pow(c.denominator, -1, self.p) % self.p

    def reduce_poly(self, c: TPoly, key=None) -> FpPoly:
        return FpPoly(self.p, [self.reduce(a, key) for a in c.coeffs])

    def inv_powers(self, k: int) -> np.ndarray:
        """Array of m^(-k) mod p for m = 1..p-1."""
        arr = self._pow.get(k)
        if arr is None:
            arr = np.array([pow(int(v), k, self.p) for v in self._inv_arr], dtype=np.int64)
            self._pow[k] = arr
        return arr

    def bernoulli_table(self) -> list[int]:
        """B_0 .. B_{p-2} mod p from sum_{j<=n} C(n+1, j) B_j = 0."""
        if self._bernoulli is None:
            p = self.p
            table = np.zeros(max(p - 1, 1), dtype=np.int64)
            table[0] = 1
            row = np.zeros(p + 1, dtype=np.int64)
            row[:2] = 1  # C(1, j)
            for n in range(1, p - 1):
                row[1:n + 2] = (row[1:n + 2] + row[:n + 1]) % p  # now C(n+1, j)
                s = int(np.dot(row[:n], table[:n]) % p)
                table[n] = -s * self.inv[n + 1] % p
            self._bernoulli = [int(b) for b in table]
        return self._bernoulli


def make_ctx(p: int) -> PrimeCtx:
    return PrimeCtx(p)


def _sweep(ctx: PrimeCtx, k: Index, star: bool) -> int:
    # vec[m-1] = sum over chains ending at m of the weighted terms
    p = ctx.p
    vec = ctx.inv_powers(k[0])
    for part in k[1:]:
        run = np.cumsum(vec) % p
        if not star:
            run = np.concatenate(([0], run[:-1]))
        vec = run * ctx.inv_powers(part) % p
    return int(vec.sum() % p)


def fmzv_eval(ctx: PrimeCtx, k: Sequence[int], star: bool = False) -> int:
    """Truncated sum over 1 <= m_1 < ... < m_r < p (<= for ``star``) mod p."""
    k = check_index(k)
    if not k:
        raise ValueError("fmzv_eval needs a non-empty index")
    cache = ctx._star if star else ctx._strict
    val = cache.get(k)
    if val is None:
        val = cache[k] = _sweep(ctx, k, star)
    return val


def brute_oracle(ctx: PrimeCtx, k: Sequence[int], star: bool = False) -> int:
    """The literal nested-loop sum; only for small p and depth."""
    k = check_index(k)
    if not k:
        raise ValueError("brute_oracle needs a non-empty index")
    if ctx.p > 31 or len(k) > 4:
        raise ValueError("brute_oracle is limited to p <= 31 and depth <= 4")
    p = ctx.p
    chains = combinations_with_replacement if star else combinations
    total = 0
    for ms in chains(range(1, p), len(k)):
        term = 1
        for m, e in zip(ms, k):
            term = term * pow(m, -e, p) % p
        total += term
    return total % p


def fmzv_t_eval(ctx: PrimeCtx, k: Sequence[int]) -> FpPoly:
    """Sum over contractions q of k of zeta_p(q) t^(dep(k) - dep(q))."""
    k = check_index(k)
    if not k:
        return FpPoly.const(ctx.p, 1)
    cached = ctx.tcache.get(k)
    if cached is not None:
        return FpPoly(ctx.p, cached)
    if len(k) > MAX_T_DEPTH:
        raise ValueError(f"depth {len(k)} exceeds the contraction limit {MAX_T_DEPTH}")
    coeffs = [0] * len(k)
    for q, plus in contractions(k):
        coeffs[plus] += fmzv_eval(ctx, q)
    poly = FpPoly(ctx.p, coeffs)
    ctx.tcache[k] = poly.coeffs
    return poly


def z_map_index(ctx: PrimeCtx, v: IndexCombo, interpolated: bool = True) -> FpPoly:
    """Linear evaluation of an index combination over F_p[t].

    ``interpolated`` selects the t-interpolated values; otherwise the plain
    strict values are used (the coefficients' t-dependence is kept).
    """
    acc = FpPoly(ctx.p)
    for k, c in v.terms.items():
        cp = ctx.reduce_poly(c, k)
        if not k:
            val = FpPoly.const(ctx.p, 1)
        elif interpolated:
            val = fmzv_t_eval(ctx, k)
        else:
            val = FpPoly.const(ctx.p, fmzv_eval(ctx, k))
        acc = acc + cp * val
    return acc


def z_map_word(ctx: PrimeCtx, w: Combo, interpolated: bool = True) -> FpPoly:
    from .words import z_convert

    return z_map_index(ctx, z_convert(w), interpolated)


def bernoulli_mod(ctx: PrimeCtx, n: int) -> int:
    if not 0 <= n <= ctx.p - 2:
        raise ValueError(f"B_{n} is not p-integral-checked for p={ctx.p}; need 0 <= n <= p-2")
    return ctx.bernoulli_table()[n]


def zA_single(ctx: PrimeCtx, k: int) -> int:
    """B_{p-k} / k mod p."""
    if k < 2 or ctx.p < k + 2:
        raise ValueError(f"zA_single needs k >= 2 and p >= k + 2 (k={k}, p={ctx.p})")
    return bernoulli_mod(ctx, ctx.p - k) * ctx.inv[k] % ctx.p
