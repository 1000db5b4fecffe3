"""Registry of checked statements and their instance generators."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from typing import Callable, Iterator

from ..indices import BBSpec, Index, indices_up_to, is_all_ones
from ..words import in_yhx, words_up_to

SYMBOLIC = "symbolic"
NUMERIC = "numeric"
PER_PRIME = "per-prime-exact"


@dataclass(frozen=True)
class TheoremDescriptor:
    id: str
    kind: str
    anchor: str
    schema: tuple[str, ...]


@dataclass(frozen=True)
class Bounds:
    """Enumeration bounds.

    ``max_weight``/``max_depth`` bound the numeric families; the remaining
    fields are per-theorem caps (numeric caps are further clipped by
    ``max_weight``, symbolic caps are used as given).
    """

    max_weight: int = 8
    max_depth: int = 5
    pair_weight: int = 6
    word_weight: int = 7
    derivation_order: int = 3
    bb_length: int = 4
    bb_part: int = 5
    cyclic_symbolic_weight: int = 7
    weighted_symbolic_k: int = 9
    word_symbolic_weight: int = 7
    transport_weight: int = 6

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"bound {name} must be a non-negative integer, got {value!r}")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Instance:
    theorem: str
    params: tuple[tuple[str, object], ...]
    weight: int

    @property
    def kwargs(self) -> dict:
        return dict(self.params)

    def params_json(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in self.params}

    def label(self) -> str:
        inner = ";".join(f"{k}={','.join(map(str, v)) if isinstance(v, tuple) else v}" for k, v in self.params)
        return f"{self.theorem}[{inner}]"


def _inst(theorem: str, weight: int, **params) -> Instance:
    return Instance(theorem, tuple(params.items()), weight)


def _indices(max_weight: int, max_depth: int) -> Iterator[Index]:
    return indices_up_to(max_weight, max_depth)


def _index_pairs(total: int, max_depth: int) -> Iterator[tuple[Index, Index]]:
    pool = list(_indices(total - 1, max_depth))
    for i, u in enumerate(pool):
        for v in pool[i:]:
            if sum(u) + sum(v) <= total:
                yield u, v


def _h1_words(max_len: int) -> list[str]:
    return [w for w in words_up_to(max_len, 1) if w[0] == "y"]


def _depth(word: str) -> int:
    return word.count("y")


# -- generators -----------------------------------------------------------------

def _gen_sum_formula(b: Bounds):
    for k in range(2, b.max_weight + 1):
        for r in range(1, min(k, b.max_depth) + 1):
            yield _inst("sum-formula", k, k=k, r=r)


def _gen_cyclic_sum(b: Bounds):
    for k in _indices(b.max_weight, b.max_depth):
        if not is_all_ones(k):
            yield _inst("cyclic-sum", sum(k) + 1, k=k)


def bb_specs(max_length: int, max_part: int) -> Iterator[BBSpec]:
    """BBSpecs with 2l + m <= max_length and parts <= max_part, as sorted tuples."""
    odd = [x for x in range(1, max_part + 1) if x % 2]
    even = [x for x in range(2, max_part + 1) if x % 2 == 0]
    for l in range(max_length // 2 + 1):
        for m in range(max_length - 2 * l + 1):
            if l == 0 and m == 0:
                continue
            for a in combinations_with_replacement(odd, l):
                for bb in combinations_with_replacement(odd, l):
                    for c in combinations_with_replacement(even, m):
                        yield BBSpec(a, bb, c)


def _gen_bowman_bradley(b: Bounds):
    for spec in bb_specs(b.bb_length, b.bb_part):
        yield _inst("bowman-bradley", spec.weight, a=spec.a, b=spec.b, c=spec.c)


def _gen_weighted_sum(b: Bounds):
    for k in range(1, b.max_weight + 1):
        for r in range(1, min(k, b.max_depth) + 1, 2):
            yield _inst("weighted-sum", k, k=k, r=r)


def _gen_pairs(theorem: str):
    def gen(b: Bounds):
        total = min(b.pair_weight, b.max_weight)
        for u, v in _index_pairs(total, b.max_depth):
            yield _inst(theorem, sum(u) + sum(v), u=u, v=v)

    return gen


def _gen_symmetric_sum(b: Bounds):
    for k in _indices(b.max_weight, b.max_depth):
        if list(k) == sorted(k):
            yield _inst("symmetric-sum", sum(k), k=k)


def _gen_single_pp(theorem: str):
    def gen(b: Bounds):
        for k in _indices(min(b.pair_weight, b.max_weight), b.max_depth):
            yield _inst(theorem, sum(k), k=k)

    return gen


def _gen_t_shuffle(b: Bounds):
    total = min(b.pair_weight, b.max_weight)
    words = _h1_words(total - 1)
    for w1 in words:
        for w2 in words:
            if len(w1) + len(w2) <= total and _depth(w1) + _depth(w2) <= b.max_depth:
                yield _inst("t-shuffle", len(w1) + len(w2), w1=w1, w2=w2)


def _gen_duality_star(b: Bounds):
    for k in _indices(b.max_weight, b.max_depth):
        yield _inst("duality-star", sum(k), k=k)


def _yhx_words(b: Bounds) -> list[str]:
    cap = min(b.word_weight, b.max_weight)
    return [w for w in words_up_to(cap, 2) if in_yhx(w) and _depth(w) <= b.max_depth]


def _gen_duality_phi(b: Bounds):
    for w in _yhx_words(b):
        yield _inst("duality-phi", len(w), w=w)


def _gen_duality_t(b: Bounds):
    yield _inst("duality-t", 0, w="")
    for w in _yhx_words(b):
        yield _inst("duality-t", len(w), w=w)


def _gen_derivation(b: Bounds):
    for l in range(1, b.derivation_order + 1):
        for w in _yhx_words(b):
            yield _inst("derivation", len(w) + l - 1, w=w, l=l)


def _gen_hoffman(b: Bounds):
    for k in _indices(b.max_weight, b.max_depth):
        if k[-1] >= 2:
            yield _inst("hoffman", sum(k), k=k)


def _gen_ohno(b: Bounds):
    for k in _indices(b.max_weight - 1, b.max_depth):
        for m in range(1, b.max_weight - sum(k) + 1):
            yield _inst("ohno-type", sum(k) + m, k=k, m=m)


def _gen_plain_sum(b: Bounds):
    for k in range(1, b.max_weight + 1):
        for r in range(1, min(k, b.max_depth) + 1):
            yield _inst("plain-sum", k, k=k, r=r)


def _gen_z_transport(b: Bounds):
    for k in _indices(min(b.transport_weight, b.max_weight), b.max_depth):
        yield _inst("z-transport", sum(k), k=k)


def _gen_lemma_cyclic(theorem: str):
    def gen(b: Bounds):
        for k in _indices(b.cyclic_symbolic_weight, None):
            if not is_all_ones(k):
                for m in range(len(k)):
                    yield _inst(theorem, sum(k), k=k, m=m)

    return gen


def _gen_keyprop_bb(b: Bounds):
    for spec in bb_specs(b.bb_length, b.bb_part):
        for n in range(2 * spec.l + spec.m):
            yield _inst("keyprop-bb", spec.weight, a=spec.a, b=spec.b, c=spec.c, n=n)


def _gen_weighted_lemma(theorem: str, odd_only: bool):
    def gen(b: Bounds):
        for k in range(1, b.weighted_symbolic_k + 1):
            for r in range(1, k + 1):
                if odd_only and r % 2 == 0:
                    continue
                for n in range(r):
                    yield _inst(theorem, k, k=k, r=r, n=n)

    return gen


def _gen_lemma_snu(b: Bounds):
    for w in _h1_words(b.word_symbolic_weight):
        yield _inst("lemma-Snu", len(w), w=w)


def _gen_lemma_prod_st(b: Bounds):
    words = _h1_words(b.word_symbolic_weight - 1)
    for w1 in words:
        for w2 in words:
            if len(w1) + len(w2) <= b.word_symbolic_weight:
                yield _inst("lemma-prodSt", len(w1) + len(w2), w1=w1, w2=w2)


def _gen_transport_consistency(b: Bounds):
    for u, v in _index_pairs(b.transport_weight, None):
        yield _inst("transport-consistency", sum(u) + sum(v), u=u, v=v)


_ENTRIES: list[tuple[TheoremDescriptor, Callable[[Bounds], Iterator[Instance]]]] = [
    (TheoremDescriptor("sum-formula", NUMERIC, "Sum formula: sum of zeta^t over k_r >= 2 equals "
                       "sum_j {C(k-1,j)+(-1)^r C(k-1,r-1-j)} t^j (1-t)^(r-1-j) Z(k)", ("k", "r")), _gen_sum_formula),
    (TheoremDescriptor("cyclic-sum", NUMERIC, "Cyclic sum formula, non-empty k not all ones", ("k",)), _gen_cyclic_sum),
    (TheoremDescriptor("bowman-bradley", NUMERIC, "zeta^t(B_a) = 0 for a in I_{l,m}", ("a", "b", "c")),
     _gen_bowman_bradley),
    (TheoremDescriptor("weighted-sum", NUMERIC, "Weighted sum formula: sum 2^(k_r-1) zeta^t(k) = 0 for odd r",
                       ("k", "r")), _gen_weighted_sum),
    (TheoremDescriptor("harmonic", PER_PRIME, "Z(w1 * w2) = Z(w1) Z(w2)", ("u", "v")), _gen_pairs("harmonic")),
    (TheoremDescriptor("t-harmonic", PER_PRIME, "Harmonic relation: Z^t(w1 *_t w2) = Z^t(w1) Z^t(w2)", ("u", "v")),
     _gen_pairs("t-harmonic")),
    (TheoremDescriptor("symmetric-sum", NUMERIC, "Symmetric sum formula: sum over permutations of zeta^t = 0",
                       ("k",)), _gen_symmetric_sum),
    (TheoremDescriptor("antipode", PER_PRIME, "Antipode-like relation: "
                       "sum_i (-1)^i zeta^t(k_1..k_i) zeta^(1-t)(k_r..k_(i+1)) = 0", ("k",)), _gen_single_pp("antipode")),
    (TheoremDescriptor("t-shuffle", NUMERIC, "Shuffle relation: Z^t(w1 sh_t w2) = Z^t(w1 nu(w2) - w1 x L_y^-1(nu(w2) t))",
                       ("w1", "w2")), _gen_t_shuffle),
    (TheoremDescriptor("reversal", PER_PRIME, "Reversal formula: Z^t(w) = Z^t(nu(w))", ("k",)),
     _gen_single_pp("reversal")),
    (TheoremDescriptor("duality-star", NUMERIC, "zeta*(k) = -zeta*(k dual)", ("k",)), _gen_duality_star),
    (TheoremDescriptor("duality-phi", NUMERIC, "Z(w) = Z(phi(w))", ("w",)), _gen_duality_phi),
    (TheoremDescriptor("duality-t", NUMERIC, "Duality relation: Z^t(w) = -Z^t(phi^t(w))", ("w",)), _gen_duality_t),
    (TheoremDescriptor("derivation", NUMERIC, "Derivation relation: Z^t(R_x^-1 d^t_l(w)) = 0 on yH_t x",
                       ("w", "l")), _gen_derivation),
    (TheoremDescriptor("hoffman", NUMERIC, "Hoffman's relation for k_r >= 2", ("k",)), _gen_hoffman),
    (TheoremDescriptor("ohno-type", NUMERIC, "Ohno-type relation: zeta(G(k, m)) = 0", ("k", "m")), _gen_ohno),
    (TheoremDescriptor("plain-sum", NUMERIC, "zeta(S(k, r)) = 0", ("k", "r")), _gen_plain_sum),
    (TheoremDescriptor("z-transport", PER_PRIME, "Z^t = Z o S_t", ("k",)), _gen_z_transport),
    (TheoremDescriptor("lemma-cyclic", SYMBOLIC, "Cyclic lemma: rotated t_m-coefficients against supp C_m(k)",
                       ("k", "m")), _gen_lemma_cyclic("lemma-cyclic")),
    (TheoremDescriptor("prop-cyclic-coeff", SYMBOLIC, "F^t(k)_m = F^0(C_m(k))", ("k", "m")),
     _gen_lemma_cyclic("prop-cyclic-coeff")),
    (TheoremDescriptor("keyprop-bb", SYMBOLIC, "(n+1) B^(n+1)_{l,m}[a] as a sum of B^(n) terms",
                       ("a", "b", "c", "n")), _gen_keyprop_bb),
    (TheoremDescriptor("lemma-F-closed", SYMBOLIC, "closed form of F(k, r, n) with 2^(i-1) C(k-r+n-i, n-1)",
                       ("k", "r", "n")), _gen_weighted_lemma("lemma-F-closed", False)),
    (TheoremDescriptor("lemma-FSG1", SYMBOLIC, "F(k, r, n) + S'(k, r, n) + G'_1(k, r, n) = 0", ("k", "r", "n")),
     _gen_weighted_lemma("lemma-FSG1", False)),
    (TheoremDescriptor("lemma-G2phi", SYMBOLIC, "G'_2 + phi(G'_2) = C(k-r+n, n) ({1}^k) for even k, else 0",
                       ("k", "r", "n")), _gen_weighted_lemma("lemma-G2phi", True)),
    (TheoremDescriptor("keyprop-weighted", SYMBOLIC, "H + phi(H) = -C(k-r+n, n) ({1}^k) if k is even, else 0",
                       ("k", "r", "n")), _gen_weighted_lemma("keyprop-weighted", True)),
    (TheoremDescriptor("lemma-Snu", SYMBOLIC, "S_t o nu = nu o S_t", ("w",)), _gen_lemma_snu),
    (TheoremDescriptor("lemma-prodSt", SYMBOLIC, "S_t(w1) S_t(w2) = S_t(w1 w2 - w1 x L_y^-1(w2 t))", ("w1", "w2")),
     _gen_lemma_prod_st),
    (TheoremDescriptor("transport-consistency", SYMBOLIC, "t-harmonic four-term recursion equals the S_t transport",
                       ("u", "v")), _gen_transport_consistency),
]

_BY_ID = {d.id: (d, gen) for d, gen in _ENTRIES}


def registry() -> list[TheoremDescriptor]:
    return [d for d, _ in _ENTRIES]


def theorem_ids() -> list[str]:
    return [d.id for d, _ in _ENTRIES]


def descriptor(theorem_id: str) -> TheoremDescriptor:
    try:
        return _BY_ID[theorem_id][0]
    except KeyError:
        raise UnknownTheorem(theorem_id) from None


class UnknownTheorem(KeyError):
    def __init__(self, theorem_id: str):
        super().__init__(theorem_id)
        self.theorem_id = theorem_id

    def __str__(self) -> str:
        return f"unknown theorem id {self.theorem_id!r}; valid ids: {', '.join(theorem_ids())}"


def instances(theorem_id: str, bounds: Bounds | None = None) -> list[Instance]:
    """Deterministic, exhaustive instance list for one theorem."""
    if theorem_id not in _BY_ID:
        raise UnknownTheorem(theorem_id)
    return list(_BY_ID[theorem_id][1](bounds or Bounds()))


def expand_ids(ids) -> list[str]:
    """Resolve ``all`` and validate; duplicates are dropped, order kept."""
    out: list[str] = []
    for theorem_id in ids:
        names = theorem_ids() if theorem_id == "all" else [theorem_id]
        for name in names:
            if name not in _BY_ID:
                raise UnknownTheorem(name)
            if name not in out:
                out.append(name)
    return out


__all__ = [
    "Bounds",
    "Instance",
    "NUMERIC",
    "PER_PRIME",
    "SYMBOLIC",
    "TheoremDescriptor",
    "UnknownTheorem",
    "bb_specs",
    "descriptor",
    "expand_ids",
    "instances",
    "registry",
    "theorem_ids",
]
