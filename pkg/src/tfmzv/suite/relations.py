"""Left-minus-right builders for every checked statement.

Numeric builders return a function ``ctx -> FpPoly`` whose value must vanish
identically; symbolic builders return the exact difference of both sides as
a combination (zero means the identity holds).  The algebra modules stay
statement-agnostic: every relation is assembled here.
"""

from __future__ import annotations

from typing import Callable

from ..fp import FpPoly, PrimeCtx, fmzv_t_eval, poly_compose_affine, z_map_index, zA_single
from ..indices import (
    BBSpec,
    Index,
    IndexCombo,
    binom,
    bb_coeff,
    bb_sum,
    compositions,
    cyclic_index,
    cyclic_relation,
    cyclic_relation_at_zero,
    cyclic_relation_plain,
    hoffman_dual,
    ohno_sum,
    phi_index,
    plain_sum,
    rotation,
    symmetric_sum_element,
    t_coeff,
    weighted_elements,
)
from ..tpoly import T, TPoly
from ..words import (
    WordCombo,
    derivation,
    harmonic,
    ly_inv,
    nu_map,
    phi_t,
    phi_word,
    rx_inv,
    s_transform,
    t_harmonic,
    t_harmonic_recursive,
    t_shuffle,
    z_convert,
    z_encode,
)

Residual = Callable[[PrimeCtx], FpPoly]


def _w(word: str) -> WordCombo:
    return WordCombo.of(word)


def _idx(k: Index) -> IndexCombo:
    return IndexCombo.of(k)


def _zt(combo) -> Residual:
    v = z_convert(combo) if isinstance(combo, WordCombo) else combo
    return lambda ctx: z_map_index(ctx, v, interpolated=True)


def _z(combo) -> Residual:
    v = z_convert(combo) if isinstance(combo, WordCombo) else combo
    return lambda ctx: z_map_index(ctx, v, interpolated=False)


# -- index-level elements -------------------------------------------------------

def sum_formula_lhs(k: int, r: int) -> IndexCombo:
    return IndexCombo.from_counts((c, 1) for c in compositions(k, r) if c[-1] >= 2)


def sum_formula_coefficient(k: int, r: int) -> TPoly:
    """sum_j {C(k-1, j) + (-1)^r C(k-1, r-1-j)} t^j (1-t)^(r-1-j)."""
    one_minus_t = TPoly((1, -1))
    acc = TPoly()
    sign = -1 if r % 2 else 1
    for j in range(r):
        c = binom(k - 1, j) + sign * binom(k - 1, r - 1 - j)
        if c:
            acc = acc + T ** j * one_minus_t ** (r - 1 - j) * c
    return acc


def weighted_sum_plain(k: int, r: int) -> IndexCombo:
    return IndexCombo.from_counts((c, 2 ** (c[-1] - 1)) for c in compositions(k, r))


def hoffman_element(k: Index) -> IndexCombo:
    """Left minus right side of Hoffman's relation for k with k_r >= 2.

    Each term is built from k by the stated modification; the final entry
    is then lowered by one.
    """
    r = len(k)

    def lower(seq: tuple) -> Index:
        return seq[:-1] + (seq[-1] - 1,)

    graded = []
    for i in range(r):
        bumped = k[:i] + (k[i] + 1,) + k[i + 1:]
        delta = 1 if i == 0 else 0
        key = lower(bumped)
        graded.append((key, 0, 1))
        graded.append((key, 1, k[i] + delta - 2))
        for j in range(2, k[i] + 1):
            graded.append((lower(k[:i] + (k[i] + 1 - j, j) + k[i + 1:]), 0, -1))
    for i in range(r - 1):
        key = lower(k[:i] + (k[i] + k[i + 1] + 1,) + k[i + 2:])
        graded.append((key, 1, -1))
        graded.append((key, 2, 1))
    return IndexCombo.from_graded(graded)


def derivation_element(word: str, l: int) -> WordCombo:
    """R_x^{-1} of the twisted derivation applied to ``word``."""
    return rx_inv(derivation(_w(word), l, twisted=True))


def shuffle_rhs(w1: WordCombo, w2: WordCombo) -> WordCombo:
    """w1 nu(w2) - w1 x L_y^{-1}(nu(w2)) t."""
    nu2 = nu_map(w2)
    return w1 * nu2 - (w1 * _w("x") * ly_inv(nu2)).scale(T)


def prod_st_rhs(w1: WordCombo, w2: WordCombo) -> WordCombo:
    """S_t(w1 w2 - w1 x L_y^{-1}(w2) t)."""
    return s_transform(w1 * w2 - (w1 * _w("x") * ly_inv(w2)).scale(T))


# -- numeric residuals ---------------------------------------------------------------

def _sum_formula(k: int, r: int) -> Residual:
    lhs = sum_formula_lhs(k, r)
    coeff = sum_formula_coefficient(k, r)

    def run(ctx):
        return z_map_index(ctx, lhs) - ctx.reduce_poly(coeff) * zA_single(ctx, k)

    return run


def _harmonic(u: Index, v: Index) -> Residual:
    prod = harmonic(_w(z_encode(u)), _w(z_encode(v)))
    left = _z(prod)
    return lambda ctx: left(ctx) - _z(_idx(u))(ctx) * _z(_idx(v))(ctx)


def _t_harmonic(u: Index, v: Index) -> Residual:
    prod = t_harmonic(_w(z_encode(u)), _w(z_encode(v)))
    left = _zt(prod)
    return lambda ctx: left(ctx) - fmzv_t_eval(ctx, u) * fmzv_t_eval(ctx, v)


def _antipode(k: Index) -> Residual:
    r = len(k)

    def run(ctx):
        acc = FpPoly(ctx.p)
        for i in range(r + 1):
            head = fmzv_t_eval(ctx, k[:i])
            tail = poly_compose_affine(fmzv_t_eval(ctx, k[i:][::-1]), 1, -1)
            term = head * tail
            acc = acc - term if i % 2 else acc + term
        return acc

    return run


def _t_shuffle(w1: str, w2: str) -> Residual:
    a, b = _w(w1), _w(w2)
    return _zt(t_shuffle(a, b) - shuffle_rhs(a, b))


def _reversal(k: Index) -> Residual:
    return _zt(_idx(k) - z_convert(nu_map(_w(z_encode(k)))))


def _duality_star(k: Index) -> Residual:
    dual = hoffman_dual(k)
    return lambda ctx: FpPoly.const(ctx.p, fmzv_t_eval(ctx, k)(1) + fmzv_t_eval(ctx, dual)(1))


def _duality_phi(w: str) -> Residual:
    v = _w(w)
    return _z(v - phi_word(v))


def _duality_t(w: str) -> Residual:
    v = _w(w)
    return _zt(v + phi_t(v))


def _z_transport(k: Index) -> Residual:
    left = _zt(_idx(k))
    right = _z(s_transform(_w(z_encode(k))))
    return lambda ctx: left(ctx) - right(ctx)


NUMERIC_BUILDERS: dict[str, Callable[..., Residual]] = {
    "sum-formula": _sum_formula,
    "cyclic-sum": lambda k: _zt(cyclic_relation_plain(k)),
    "bowman-bradley": lambda a, b, c: _zt(bb_sum(BBSpec(a, b, c))),
    "weighted-sum": lambda k, r: _zt(weighted_sum_plain(k, r)),
    "harmonic": _harmonic,
    "t-harmonic": _t_harmonic,
    "symmetric-sum": lambda k: _zt(symmetric_sum_element(k)),
    "antipode": _antipode,
    "t-shuffle": _t_shuffle,
    "reversal": _reversal,
    "duality-star": _duality_star,
    "duality-phi": _duality_phi,
    "duality-t": _duality_t,
    "derivation": lambda w, l: _zt(derivation_element(w, l)),
    "hoffman": lambda k: _zt(hoffman_element(k)),
    "ohno-type": lambda k, m: _z(ohno_sum(k, m, "G")),
    "plain-sum": lambda k, r: _z(plain_sum(k, r)),
    "z-transport": _z_transport,
}


# -- symbolic differences -----------------------------------------------------------

def lemma_cyclic(k: Index, m: int) -> IndexCombo:
    r = len(k)
    lhs = []
    tail_terms = []
    for l in range(1, r + 1):
        rot = rotation(k, l)  # (k_{l+1}, ..., k_l)
        kl = k[l - 1]
        for j in range(1, kl):
            lhs.append(t_coeff((j,) + rot[:-1] + (kl + 1 - j,), m))
        tail_terms.append(t_coeff(rotation(k, l - 1) + (1,), m))

    def f(a: Index) -> IndexCombo:
        d = len(a)
        counts: dict[Index, int] = {}
        for i in range(d):
            rest = a[i + 1:] + a[:i]
            for j in range(1, a[i]):
                key = (j,) + rest + (a[i] + 1 - j,)
                counts[key] = counts.get(key, 0) + 1
            key = a[i:] + a[:i] + (1,)
            counts[key] = counts.get(key, 0) + 1
        return IndexCombo.from_counts(counts)

    rhs = cyclic_index(k, m).apply(f, IndexCombo) - IndexCombo.sum(tail_terms)
    return IndexCombo.sum(lhs) - rhs


def prop_cyclic_coeff(k: Index, m: int) -> IndexCombo:
    return cyclic_relation(k).t_coeff(m) - cyclic_relation_at_zero(cyclic_index(k, m))


def _bb_term(a, b, c, n: int) -> IndexCombo:
    if not a and not c:
        return IndexCombo.zero()
    return bb_coeff(BBSpec(tuple(a), tuple(b), tuple(c)), n)


def keyprop_bb(a: Index, b: Index, c: Index, n: int) -> IndexCombo:
    l, m = len(a), len(c)
    lhs = bb_coeff(BBSpec(a, b, c), n + 1).scale(n + 1)
    parts = []
    for j in range(m):
        c_rest = c[:j] + c[j + 1:]
        for i in range(l):
            a2 = a[:i] + (a[i] + c[j],) + a[i + 1:]
            b2 = b[:i] + (b[i] + c[j],) + b[i + 1:]
            parts.append(_bb_term(a2, b, c_rest, n).scale(2))
            parts.append(_bb_term(a, b2, c_rest, n).scale(2))
    for i in range(l):
        for j in range(l):
            parts.append(_bb_term(a[:i] + a[i + 1:], b[:j] + b[j + 1:], (a[i] + b[j],) + c, n))
    for i in range(m):
        for j in range(i + 1, m):
            rest = tuple(x for s, x in enumerate(c) if s not in (i, j))
            parts.append(_bb_term(a, b, (c[i] + c[j],) + rest, n).scale(2))
    return lhs - IndexCombo.sum(parts)


def f_closed_form(k: int, r: int, n: int) -> IndexCombo:
    d = r - n
    counts = {}
    for a in compositions(k, d):
        last = a[-1]
        c = sum(2 ** (i - 1) * binom(k - r + n - i, n - 1) for i in range(1, last))
        c += 2 ** (last - 1) * binom(k - r + n - last + 1, n)
        counts[a] = c
    return IndexCombo.from_counts(counts)


def _ones(k: int) -> IndexCombo:
    return IndexCombo.of((1,) * k)


def lemma_f_closed(k: int, r: int, n: int) -> IndexCombo:
    return weighted_elements(k, r, n, "F") - f_closed_form(k, r, n)


def lemma_fsg1(k: int, r: int, n: int) -> IndexCombo:
    return IndexCombo.sum(weighted_elements(k, r, n, kind) for kind in ("F", "Sprime", "G1prime"))


def lemma_g2phi(k: int, r: int, n: int) -> IndexCombo:
    g2 = weighted_elements(k, r, n, "G2prime")
    expected = _ones(k).scale(binom(k - r + n, n)) if k % 2 == 0 else IndexCombo.zero()
    return g2 + phi_index(g2) - expected


def keyprop_weighted(k: int, r: int, n: int) -> IndexCombo:
    h = weighted_elements(k, r, n, "H")
    expected = _ones(k).scale(-binom(k - r + n, n)) if k % 2 == 0 else IndexCombo.zero()
    return h + phi_index(h) - expected


def lemma_snu(w: str) -> WordCombo:
    v = _w(w)
    return s_transform(nu_map(v)) - nu_map(s_transform(v))


def lemma_prod_st(w1: str, w2: str) -> WordCombo:
    a, b = _w(w1), _w(w2)
    return s_transform(a) * s_transform(b) - prod_st_rhs(a, b)


def transport_consistency(u: Index, v: Index) -> WordCombo:
    a, b = _w(z_encode(u)), _w(z_encode(v))
    return t_harmonic_recursive(a, b) - t_harmonic(a, b)


SYMBOLIC_BUILDERS: dict[str, Callable[..., object]] = {
    "lemma-cyclic": lemma_cyclic,
    "prop-cyclic-coeff": prop_cyclic_coeff,
    "keyprop-bb": keyprop_bb,
    "lemma-F-closed": lemma_f_closed,
    "lemma-FSG1": lemma_fsg1,
    "lemma-G2phi": lemma_g2phi,
    "keyprop-weighted": keyprop_weighted,
    "lemma-Snu": lemma_snu,
    "lemma-prodSt": lemma_prod_st,
    "transport-consistency": transport_consistency,
}

__all__ = [
    "NUMERIC_BUILDERS",
    "SYMBOLIC_BUILDERS",
    "Residual",
    "derivation_element",
    "f_closed_form",
    "hoffman_element",
    "prod_st_rhs",
    "shuffle_rhs",
    "sum_formula_coefficient",
    "sum_formula_lhs",
    "weighted_sum_plain",
]
