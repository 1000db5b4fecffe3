from fractions import Fraction

from hypothesis import given, strategies as st

from tfmzv.indices import IndexCombo
from tfmzv.tpoly import ONE, T, TPoly, ZERO

polys = st.lists(st.fractions(-20, 20, max_denominator=6), max_size=4).map(TPoly)


def test_canonical_trim():
    assert TPoly((1, 0, 0)).coeffs == (1,)
    assert TPoly((0, 0)) == ZERO
    assert ZERO.degree == -1


def test_arithmetic_and_eval():
    q = (ONE - T) ** 2
    assert q == TPoly((1, -2, 1))
    assert q(3) == 4
    assert T.substitute(1, -1) == ONE - T
    assert TPoly((Fraction(1, 2),)).to_strings() == ["1/2"]


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a - a == ZERO


@given(polys, st.fractions(-5, 5, max_denominator=5))
def test_substitute_matches_evaluation(a, x):
    assert a.substitute(1, -1)(x) == a(1 - x)


def test_strings_round_trip():
    q = TPoly((Fraction(-3, 4), 0, 5))
    assert TPoly.from_strings(q.to_strings()) == q


def test_combo_cancellation_and_json():
    v = IndexCombo.of((1, 2)) - IndexCombo.of((1, 2))
    assert v == 0 and not v
    w = IndexCombo({(2, 1): T, (3,): Fraction(1, 3)})
    assert IndexCombo.from_json(w.to_json()) == w
    assert w.t_coeff(1) == IndexCombo.of((2, 1))
    assert w.at_t(0) == IndexCombo({(3,): Fraction(1, 3)})
