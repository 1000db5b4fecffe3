from itertools import combinations, product
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from conftest import index_st
from tfmzv.indices import (
    BBSpec, IndexCombo, bb_element, compositions, cyclic_index, cyclic_relation, cyclic_relation_at_zero,
    hoffman_dual, indices_up_to, ohno_sum, parse_index, phi_index, symmetric_sum_element, t_coeff,
    t_index, tilde_shuffle, weighted_elements,
)
from tfmzv.tpoly import ONE, T, TPoly

I = IndexCombo.of


def tc(*pairs):
    """IndexCombo from (index, coefficient) pairs."""
    return IndexCombo(pairs)


# -- independent oracles -------------------------------------------------------

def t_index_oracle(k):
    # fill the r-1 boxes of the string "k1 _ k2 _ ... kr" and read off the index
    out = {}
    for fill in product(",+", repeat=len(k) - 1):
        text = str(k[0]) + "".join(f + str(x) for f, x in zip(fill, k[1:]))
        idx = tuple(eval(seg) for seg in text.split(","))
        out.setdefault(idx, TPoly())
        out[idx] = out[idx] + T ** fill.count("+")
    return IndexCombo(out)


def dual_oracle(k):
    # comma positions of the all-ones string are the partial sums; the dual takes the complement
    n = sum(k)
    cuts = {sum(k[:i]) for i in range(1, len(k))}
    other = [0] + [c for c in range(1, n) if c not in cuts] + [n]
    return tuple(b - a for a, b in zip(other, other[1:]))


def cyclic_oracle(k, m):
    r = len(k)
    out = {}
    for pluses in combinations(range(r), m):
        # gap g follows entry g; walk back from entry 0 while the gap before it is '+'
        start = 0
        while (start - 1) % r in pluses and len(pluses) < r:
            start = (start - 1) % r
        blocks, acc = [], 0
        for step in range(r):
            pos = (start + step) % r
            acc += k[pos]
            if pos not in pluses:
                blocks.append(acc)
                acc = 0
        out[tuple(blocks)] = out.get(tuple(blocks), 0) + 1
    return IndexCombo.from_counts(out)


# -- t-index -------------------------------------------------------------------

def test_t_index_examples():
    assert t_index((1, 1)) == tc(((1, 1), 1), ((2,), T))
    assert t_index((1, 1, 1)) == tc(((1, 1, 1), 1), ((2, 1), T), ((1, 2), T), ((3,), T * T))
    assert t_index((2, 1)) == tc(((2, 1), 1), ((3,), T))
    with pytest.raises(ValueError):
        t_index(())


def test_t_coeff_examples():
    assert t_coeff((1, 1, 1), 1) == I((2, 1), (1, 2))
    assert t_coeff((1, 1, 1), 2) == I((3,))
    assert t_coeff((2, 1), 5) == 0
    assert t_coeff((2, 1), -1) == 0


@given(index_st(8))
def test_t_index_structure(k):
    v = t_index(k)
    assert v == t_index_oracle(k)
    assert v.t_coeff(0) == I(k)
    assert v.t_coeff(len(k) - 1) == I((sum(k),))
    rebuilt = IndexCombo.sum(t_coeff(k, m).scale(T ** m) for m in range(len(k) + 2))
    assert rebuilt == v


# -- cyclic index --------------------------------------------------------------

def test_cyclic_index_examples():
    assert cyclic_index((1, 2, 3), 1) == I((3, 3), (1, 5), (4, 2))
    assert cyclic_index((1, 2, 3), 2) == IndexCombo.from_counts({(6,): 3})
    assert cyclic_index((2, 1), 0) == I((2, 1))
    with pytest.raises(ValueError):
        cyclic_index((2, 1), 2)


@given(index_st(8, 5), st.data())
def test_cyclic_index_matches_enumeration(k, data):
    m = data.draw(st.integers(0, len(k) - 1))
    v = cyclic_index(k, m)
    assert v == cyclic_oracle(k, m)
    assert all(len(idx) == len(k) - m and sum(idx) == sum(k) for idx in v.keys())
    assert v.mass() == comb(len(k), m)


# -- Hoffman dual, Ohno sums, phi ----------------------------------------------------

def test_hoffman_dual_examples():
    assert hoffman_dual((3,)) == (1, 1, 1)
    assert hoffman_dual((1, 2)) == (2, 1)
    assert hoffman_dual(hoffman_dual((2, 1, 4))) == (2, 1, 4)
    with pytest.raises(ValueError):
        hoffman_dual(())


def test_hoffman_dual_involution():
    for k in indices_up_to(10):
        d = hoffman_dual(k)
        assert d == dual_oracle(k)
        assert hoffman_dual(d) == k
        assert sum(d) == sum(k) and len(d) == sum(k) - len(k) + 1


def test_ohno_sum_examples():
    assert ohno_sum((1, 2), 1, "G1") == I((2, 2), (1, 3))
    assert ohno_sum((3,), 0, "G") == 0
    # dual of (1,2) is (2,1); e in {(1,0),(0,1)} gives (3,1),(2,2) whose duals are below
    assert ohno_sum((1, 2), 1, "G2") == I((1, 1, 2), (1, 2, 1))
    assert ohno_sum((1, 2), 1, "G") == I((2, 2), (1, 3)) - I((1, 1, 2), (1, 2, 1))


@given(index_st(6), st.integers(0, 3))
def test_ohno_sum_shape(k, m):
    g1, g2 = ohno_sum(k, m, "G1"), ohno_sum(k, m, "G2")
    assert g1.degree() <= 0 and g2.degree() <= 0
    assert all(sum(x) == sum(k) + m for x in g1.keys() + g2.keys())
    assert g1.mass() == comb(m + len(k) - 1, m)


def test_phi_index_examples():
    assert phi_index(I((2,))) == -I((2,), (1, 1))
    assert phi_index(I((1, 1))) == I((1, 1))
    assert phi_index(phi_index(I((3, 1)))) == I((3, 1))


@given(index_st(7))
def test_phi_index_involution(k):
    v = phi_index(I(k))
    assert phi_index(v) == I(k)
    refinements = list(product(*[list(compositions(x)) for x in k]))
    assert abs(v.mass()) == len(refinements)


# -- tilde shuffle and Bowman--Bradley sums ---------------------------------------------

def test_tilde_shuffle_examples():
    assert tilde_shuffle(I((1,)), I((2,))) == I((1, 2), (2, 1))
    assert tilde_shuffle(I((1,)), I((1,))) == IndexCombo.from_counts({(1, 1): 2})
    assert tilde_shuffle(I((2,)), I((2,))) == IndexCombo.from_counts({(2, 2): 2})
    assert tilde_shuffle(I(()), I((3, 1))) == I((3, 1))


@given(index_st(4), index_st(3), index_st(2))
def test_tilde_shuffle_algebra(a, b, c):
    A, B, C = I(a), I(b), I(c)
    assert tilde_shuffle(A, B) == tilde_shuffle(B, A)
    assert tilde_shuffle(tilde_shuffle(A, B), C) == tilde_shuffle(A, tilde_shuffle(B, C))
    assert tilde_shuffle(A, B).mass() == comb(len(a) + len(b), len(a))


def test_bb_element_examples():
    assert bb_element(BBSpec((), (), (2,))) == I((2,))
    assert bb_element(BBSpec((), (), (2, 2))) == IndexCombo({(2, 2): 2, (4,): 2 * T})
    assert bb_element(BBSpec((1,), (1,))) == tc(((1, 1), 1), ((2,), T))
    spec = BBSpec((1, 3), (1, 1), (2,))
    assert bb_element(spec).degree() <= 2 * spec.l + spec.m - 1


@pytest.mark.parametrize("a,b,c", [((), (), ()), ((2,), (1,), ()), ((1,), (1,), (3,)), ((1,), (), ())])
def test_bb_spec_rejects(a, b, c):
    with pytest.raises(ValueError):
        BBSpec(a, b, c)


# -- weighted sums --------------------------------------------------------------------

def test_weighted_ft_example():
    # 2^(k_r - 1) weights: (1,2) gets 2, (2,1) gets 1
    expected = t_index((1, 2)).scale(2) + t_index((2, 1))
    assert weighted_elements(3, 2, 0, "Ft") == expected
    assert expected == tc(((1, 2), 2), ((2, 1), 1), ((3,), 3 * T))


def test_weighted_f_is_constant_part():
    assert weighted_elements(4, 2, 0, "F") == weighted_elements(4, 2, 0, "Ft").t_coeff(0)


def test_weighted_h_phi_even_k():
    h = weighted_elements(4, 3, 0, "H")
    assert h + phi_index(h) == I((1, 1, 1, 1)).scale(-comb(4 - 3 + 0, 0))


def test_weighted_ranges():
    with pytest.raises(ValueError):
        weighted_elements(3, 4, 0, "F")
    with pytest.raises(ValueError):
        weighted_elements(4, 2, 2, "H")
    with pytest.raises(ValueError):
        weighted_elements(4, 2, 0, "nope")


# -- cyclic relation and symmetric sums ---------------------------------------------------

def test_cyclic_relation_examples():
    assert cyclic_relation((2,)) == IndexCombo({(3,): -2 * (ONE - T)})
    v = cyclic_relation((2, 1))
    assert v.t_coeff(1) == cyclic_relation_at_zero(IndexCombo.from_counts({(3,): 2}))
    assert cyclic_index((2, 1), 1) == IndexCombo.from_counts({(3,): 2})
    assert cyclic_relation((3, 1)).t_coeff(0) == cyclic_relation_at_zero(I((3, 1)))
    with pytest.raises(ValueError):
        cyclic_relation((1, 1))


def test_symmetric_sum_examples():
    assert symmetric_sum_element((1, 2)) == I((1, 2), (2, 1))
    assert symmetric_sum_element((1, 1)) == IndexCombo.from_counts({(1, 1): 2})
    v = symmetric_sum_element((1, 2, 3))
    assert len(v) == 6 and all(c == 1 for _, c in v)


@given(index_st(8, 5))
def test_symmetric_sum_mass(k):
    assert symmetric_sum_element(k).mass() == factorial(len(k))


def test_parse_index():
    assert parse_index("1,2,3") == (1, 2, 3)
    assert parse_index("") == ()
    for bad in ("0", "1,,2", "a", "-1"):
        with pytest.raises(ValueError):
            parse_index(bad)
