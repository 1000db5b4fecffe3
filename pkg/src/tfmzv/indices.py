"""Indices, the space I[t] of their combinations, and index-level constructions.

An index is a plain tuple of positive integers.  Combinations of indices
with coefficients in Q[t] are ``IndexCombo`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb
from typing import Iterator, Sequence

from .combo import Combo
from .tpoly import T, TPoly

Index = tuple[int, ...]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def check_index(k: Sequence[int]) -> Index:
    k = tuple(k)
    for part in k:
        if not isinstance(part, int) or isinstance(part, bool) or part < 1:
            raise ValueError(f"index parts must be positive integers, got {k!r}")
    return k


def parse_index(text: str) -> Index:
    """Parse ``"1,2,3"``; the empty string is the empty index."""
    text = text.strip()
    if not text:
        return ()
    try:
        return check_index(int(s) for s in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed index {text!r}: {exc}") from None


def format_index(k: Index) -> str:
    return ",".join(map(str, k))


def _require_nonempty(k: Index, op: str) -> None:
    if not k:
        raise ValueError(f"{op} is not defined for the empty index")


class IndexCombo(Combo):
    """Element of I[t]; the product is concatenation of indices."""

    __slots__ = ()
    key_field = "index"

    @classmethod
    def check_key(cls, key) -> Index:
        return check_index(key)

    @staticmethod
    def sort_key(key: Index):
        return (sum(key), len(key), key)

    @staticmethod
    def format_key(key: Index) -> str:
        return format_index(key)

    @staticmethod
    def parse_key(text: str) -> Index:
        return parse_index(text)

    @classmethod
    def from_counts(cls, counts) -> IndexCombo:
        items = counts.items() if hasattr(counts, "items") else counts
        return cls.from_graded((k, 0, c) for k, c in items)

    @classmethod
    def of(cls, *indices: Sequence[int]) -> IndexCombo:
        """Sum of the given indices, each with coefficient one."""
        return cls.from_counts((check_index(k), 1) for k in indices)


def measures(k: Sequence[int]) -> tuple[int, int]:
    k = check_index(k)
    return sum(k), len(k)


def is_all_ones(k: Index) -> bool:
    return all(part == 1 for part in k)


# -- enumeration -------------------------------------------------------------

def compositions(n: int, parts: int | None = None) -> Iterator[Index]:
    """Compositions of ``n`` (optionally with a fixed number of parts), lexicographic."""
    if parts is None:
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in compositions(n - first):
                yield (first,) + rest
        return
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - parts + 2):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def weak_compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Sequences of ``parts`` non-negative integers summing to ``n``, lexicographic."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in weak_compositions(n - first, parts - 1):
            yield (first,) + rest


def indices_up_to(max_weight: int, max_depth: int | None = None, min_weight: int = 1) -> Iterator[Index]:
    """All non-empty indices ordered by weight, then lexicographically."""
    for w in range(max(min_weight, 1), max_weight + 1):
        for k in compositions(w):
            if max_depth is None or len(k) <= max_depth:
                yield k


# -- t-index -----------------------------------------------------------------

def contractions(k: Index) -> Iterator[tuple[Index, int]]:
    """Every comma/plus filling of ``k`` as ``(index, number_of_pluses)``."""
    r = len(k)
    if r == 0:
        yield (), 0
        return
    for mask in product((0, 1), repeat=r - 1):
        out = [k[0]]
        for part, plus in zip(k[1:], mask):
            if plus:
                out[-1] += part
            else:
                out.append(part)
        yield tuple(out), sum(mask)


@lru_cache(maxsize=None)
def _t_index(k: Index) -> IndexCombo:
    return IndexCombo.from_graded((c, plus, 1) for c, plus in contractions(k))


def t_index(k: Sequence[int]) -> IndexCombo:
    k = check_index(k)
    _require_nonempty(k, "t_index")
    return _t_index(k)


def t_coeff(k: Sequence[int], m: int) -> IndexCombo:
    """The coefficient of the t-index of ``k`` at ``t**m`` (zero for m < 0)."""
    k = check_index(k)
    if m < 0:
        return IndexCombo.zero()
    if not k:
        return IndexCombo.from_counts({(): 1}) if m == 0 else IndexCombo.zero()
    return _t_index(k).t_coeff(m)


def t_index_of(v: IndexCombo) -> IndexCombo:
    """Q[t]-linear extension of the t-index; the empty index maps to itself."""
    return v.apply(lambda k: _t_index(k) if k else IndexCombo.from_counts({(): 1}), IndexCombo)


# -- cyclic index ------------------------------------------------------------

def _cyclic_filling(k: Index, pluses: frozenset[int]) -> Index:
    r = len(k)
    comma_gaps = [g for g in range(r) if g not in pluses]
    start = (comma_gaps[-1] + 1) % r
    out = []
    acc = 0
    for step in range(r):
        pos = (start + step) % r
        acc += k[pos]
        if pos not in pluses:
            out.append(acc)
            acc = 0
    return tuple(out)


def cyclic_index(k: Sequence[int], m: int) -> IndexCombo:
    """Sum over cyclic fillings of ``k`` with exactly ``m`` pluses.

    Gap ``g`` sits after position ``g``; gap ``r-1`` wraps to the front.  The
    block containing the first entry leads.
    """
    k = check_index(k)
    _require_nonempty(k, "cyclic_index")
    r = len(k)
    if not 0 <= m <= r - 1:
        raise ValueError(f"cyclic_index needs 0 <= m <= {r - 1}, got m={m}")
    counts: dict[Index, int] = {}
    for gaps in combinations(range(r), m):
        key = _cyclic_filling(k, frozenset(gaps))
        counts[key] = counts.get(key, 0) + 1
    return IndexCombo.from_counts(counts)


# -- Hoffman dual and friends -------------------------------------------------

_SWAP = str.maketrans("+,", ",+")


def hoffman_dual(k: Sequence[int]) -> Index:
    k = check_index(k)
    _require_nonempty(k, "hoffman_dual")
    seps = ",".join("+" * (part - 1) for part in k).translate(_SWAP)
    return tuple(len(seg) + 1 for seg in seps.split(","))


def dual_combo(v: IndexCombo) -> IndexCombo:
    return v.map_keys(hoffman_dual)


def oplus(k: Index, e: Sequence[int]) -> Index:
    if len(k) != len(e):
        raise ValueError("componentwise sum needs equal depths")
    return tuple(a + b for a, b in zip(k, e))


def ohno_sum(k: Sequence[int], m: int, variant: str = "G") -> IndexCombo:
    """Ohno-type sums ``G1``, ``G2`` and ``G = G1 - G2``."""
    k = check_index(k)
    _require_nonempty(k, "ohno_sum")
    if variant not in ("G1", "G2", "G"):
        raise ValueError(f"unknown variant {variant!r}")
    g1 = IndexCombo.from_counts((oplus(k, e), 1) for e in weak_compositions(m, len(k)))
    if variant == "G1":
        return g1
    kd = hoffman_dual(k)
    g2 = IndexCombo.from_counts((hoffman_dual(oplus(kd, e)), 1) for e in weak_compositions(m, len(kd)))
    return g2 if variant == "G2" else g1 - g2


@lru_cache(maxsize=None)
def _phi_index(k: Index) -> IndexCombo:
    sign = -1 if len(k) % 2 else 1
    pieces = [list(compositions(part)) for part in k]
    return IndexCombo.from_counts((sum(choice, ()), sign) for choice in product(*pieces))


def phi_index(v: IndexCombo) -> IndexCombo:
    """Linear involution: sign (-1)^depth times the sum of all refinements."""
    return v.apply(_phi_index, IndexCombo)


# -- tilde shuffle ------------------------------------------------------------

@lru_cache(maxsize=None)
def _shuffle_tuples(a: tuple, b: tuple) -> dict:
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    out: dict = {}
    for rest, c in _shuffle_tuples(a[1:], b).items():
        key = (a[0],) + rest
        out[key] = out.get(key, 0) + c
    for rest, c in _shuffle_tuples(a, b[1:]).items():
        key = (b[0],) + rest
        out[key] = out.get(key, 0) + c
    return out


def tilde_shuffle(u: IndexCombo, v: IndexCombo) -> IndexCombo:
    """Shuffle of indices treated as words in their parts."""
    return u.bilinear(v, lambda a, b: IndexCombo.from_counts(_shuffle_tuples(a, b)), IndexCombo)


# -- Bowman--Bradley sums -----------------------------------------------------

@dataclass(frozen=True)
class BBSpec:
    """Odd strings ``a``, ``b`` (same length l) and even singletons ``c`` (m of them)."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "c", tuple(self.c))
        if len(self.a) != len(self.b):
            raise ValueError("a and b must have the same length")
        if not self.a and not self.c:
            raise ValueError("(l, m) = (0, 0) is excluded")
        if any(x < 1 or x % 2 == 0 for x in self.a + self.b):
            raise ValueError(f"a and b entries must be odd positive integers: {self}")
        if any(x < 1 or x % 2 for x in self.c):
            raise ValueError(f"c entries must be even positive integers: {self}")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.a)

    @property
    def m(self) -> int:
        return len(self.c)

    @property
    def weight(self) -> int:
        return sum(self.a) + sum(self.b) + sum(self.c)

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b), "c": list(self.c)}


@lru_cache(maxsize=None)
def _bb_sum(spec: BBSpec) -> IndexCombo:
    counts: dict[Index, int] = {}
    for sa in permutations(spec.a):
        for sb in permutations(spec.b):
            key = tuple(x for pair in zip(sa, sb) for x in pair)
            counts[key] = counts.get(key, 0) + 1
    acc = IndexCombo.from_counts(counts)
    for c in spec.c:
        acc = tilde_shuffle(acc, IndexCombo.from_counts({(c,): 1}))
    return acc


def bb_sum(spec: BBSpec) -> IndexCombo:
    """The symmetrized sum B_a (no t-index applied)."""
    return _bb_sum(spec)


@lru_cache(maxsize=None)
def _bb_element(spec: BBSpec) -> IndexCombo:
    return t_index_of(_bb_sum(spec))


def bb_element(spec: BBSpec) -> IndexCombo:
    """The t-index of B_a; its t**n coefficient is B^{(n)}."""
    return _bb_element(spec)


def bb_coeff(spec: BBSpec, n: int) -> IndexCombo:
    return _bb_element(spec).t_coeff(n)


# -- weighted-sum building blocks ----------------------------------------------

def plain_sum(k: int, r: int) -> IndexCombo:
    """S(k, r): every index of weight k and depth r, once."""
    return IndexCombo.from_counts((c, 1) for c in compositions(k, r))


@lru_cache(maxsize=None)
def _weighted_ft(k: int, r: int) -> IndexCombo:
    plain = IndexCombo.from_counts((c, 2 ** (c[-1] - 1)) for c in compositions(k, r))
    return t_index_of(plain)


def _ohno_prime(k: int, r: int, n: int, variant: str) -> IndexCombo:
    terms = []
    for m in range(k - r):
        base = (1,) * (r - n - 1) + (k - r - m + 1,)
        coeff = 2 ** (k - r - m - 1) * binom(m + n, n)
        terms.append(ohno_sum(base, m + n, variant).scale(-coeff))
    return IndexCombo.sum(terms)


WEIGHTED_KINDS = ("Ft", "F", "Sprime", "G1prime", "G2prime", "H")


def weighted_elements(k: int, r: int, n: int, kind: str) -> IndexCombo:
    if kind not in WEIGHTED_KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {WEIGHTED_KINDS}")
    if not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got k={k}, r={r}")
    if kind == "Ft":
        return _weighted_ft(k, r)
    if not 0 <= n <= r - 1:
        raise ValueError(f"need 0 <= n <= r-1, got r={r}, n={n}")
    if kind == "F":
        return _weighted_ft(k, r).t_coeff(n)
    if kind == "Sprime":
        return plain_sum(k, r - n).scale(-binom(k - r + n, n))
    if kind == "G1prime":
        return _ohno_prime(k, r, n, "G1")
    if kind == "G2prime":
        return _ohno_prime(k, r, n, "G2")
    return (
        weighted_elements(k, r, n, "F")
        + weighted_elements(k, r, n, "Sprime")
        + weighted_elements(k, r, n, "G1prime")
        - weighted_elements(k, r, n, "G2prime")
    )


# -- cyclic sum relation ------------------------------------------------------

def rotation(k: Index, start: int) -> Index:
    start %= len(k)
    return k[start:] + k[:start]


def cyclic_relation_plain(k: Index) -> IndexCombo:
    """Left minus right side of the cyclic sum formula before taking t-indices."""
    r = len(k)
    lhs: dict[Index, int] = {}
    one_minus_t: dict[Index, int] = {}
    trailing: dict[Index, int] = {}
    for l in range(1, r + 1):
        kl = k[l - 1]
        rot = rotation(k, l)  # (k_{l+1}, ..., k_r, k_1, ..., k_l)
        rest = rot[:-1]
        for j in range(1, kl):
            key = (j,) + rest + (kl + 1 - j,)
            lhs[key] = lhs.get(key, 0) + 1
        for key in (rest + (kl + 1,), (rot[0] + 1,) + rot[1:]):
            one_minus_t[key] = one_minus_t.get(key, 0) + 1
        key = (1,) + rot
        trailing[key] = trailing.get(key, 0) + 1
    return (
        IndexCombo.from_counts(lhs)
        - IndexCombo.from_counts(one_minus_t).scale(1 - T)
        - IndexCombo.from_counts(trailing)
    )


@lru_cache(maxsize=None)
def _cyclic_relation(k: Index) -> IndexCombo:
    return t_index_of(cyclic_relation_plain(k))


def cyclic_relation(k: Sequence[int]) -> IndexCombo:
    """F^t(k): the cyclic sum formula as a formal element of I[t]."""
    k = check_index(k)
    _require_nonempty(k, "cyclic_relation")
    if is_all_ones(k):
        raise ValueError(f"cyclic_relation is not defined on all-ones index {k}")
    return _cyclic_relation(k)


def cyclic_relation_at_zero(v: IndexCombo) -> IndexCombo:
    """Linear extension of F^0 over combinations of non-all-ones indices."""
    return v.apply(lambda k: cyclic_relation(k).at_t(0), IndexCombo)


# -- symmetric sums -----------------------------------------------------------

def symmetric_sum_element(k: Sequence[int]) -> IndexCombo:
    k = check_index(k)
    _require_nonempty(k, "symmetric_sum_element")
    counts: dict[Index, int] = {}
    for perm in permutations(k):
        counts[perm] = counts.get(perm, 0) + 1
    return IndexCombo.from_counts(counts)


__all__ = [
    "BBSpec", "Index", "IndexCombo", "TPoly", "WEIGHTED_KINDS", "bb_coeff", "bb_element", "bb_sum",
    "binom", "check_index", "compositions", "contractions", "cyclic_index", "cyclic_relation",
    "cyclic_relation_at_zero", "cyclic_relation_plain", "dual_combo", "format_index", "hoffman_dual",
    "indices_up_to", "is_all_ones", "measures", "ohno_sum", "oplus", "parse_index", "phi_index",
    "plain_sum", "rotation", "symmetric_sum_element", "t_coeff", "t_index", "t_index_of",
    "tilde_shuffle", "weak_compositions", "weighted_elements",
]
