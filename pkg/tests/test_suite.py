import json
from math import factorial

import pytest

from tfmzv.fp import FpPoly, PDividesDenominator, PrimeCtx
from tfmzv.indices import indices_up_to, is_all_ones, symmetric_sum_element
from tfmzv.suite import (
    NUMERIC, PER_PRIME, SYMBOLIC, Bounds, Instance, UnknownTheorem, bb_specs, check_numeric,
    check_over_primes, check_symbolic, descriptor, expand_ids, instances, min_prime, registry,
    run_suite, theorem_ids,
)
from tfmzv.suite import relations
from tfmzv.suite.runner import _plan
from tfmzv.words import z_convert, z_encode

NUMERIC_IDS = ["sum-formula", "cyclic-sum", "bowman-bradley", "weighted-sum", "symmetric-sum", "t-shuffle",
               "duality-star", "duality-phi", "duality-t", "derivation", "hoffman", "ohno-type", "plain-sum"]
PER_PRIME_IDS = ["harmonic", "t-harmonic", "antipode", "reversal", "z-transport"]
SYMBOLIC_IDS = ["lemma-cyclic", "prop-cyclic-coeff", "keyprop-bb", "lemma-F-closed", "lemma-FSG1",
                "lemma-G2phi", "keyprop-weighted", "lemma-Snu", "lemma-prodSt", "transport-consistency"]


def inst(theorem, weight, **params):
    return Instance(theorem, tuple(params.items()), weight)


# -- registry -----------------------------------------------------------------------

def test_registry_content():
    ids = theorem_ids()
    assert len(ids) == len(set(ids))
    kinds = {d.id: d.kind for d in registry()}
    assert kinds["duality-t"] == NUMERIC
    assert kinds["keyprop-bb"] == SYMBOLIC
    for group, kind in ((NUMERIC_IDS, NUMERIC), (PER_PRIME_IDS, PER_PRIME), (SYMBOLIC_IDS, SYMBOLIC)):
        assert all(kinds[t] == kind for t in group)
    assert set(ids) == set(NUMERIC_IDS + PER_PRIME_IDS + SYMBOLIC_IDS)
    assert set(ids) == set(relations.NUMERIC_BUILDERS) | set(relations.SYMBOLIC_BUILDERS)


def test_unknown_ids():
    with pytest.raises(UnknownTheorem) as err:
        instances("no-such-id")
    assert "duality-t" in str(err.value)
    with pytest.raises(UnknownTheorem):
        expand_ids(["harmonic", "nope"])
    with pytest.raises(UnknownTheorem):
        descriptor("nope")


def test_expand_ids():
    assert expand_ids(["all"]) == theorem_ids()
    assert expand_ids(["reversal", "harmonic", "reversal"]) == ["reversal", "harmonic"]
    assert expand_ids([]) == []


def test_bounds_validation():
    with pytest.raises(ValueError):
        Bounds(max_weight=-1)
    with pytest.raises(ValueError):
        Bounds(max_depth=2.5)
    assert Bounds().to_json()["max_weight"] == 8


# -- instance generators ----------------------------------------------------------------

def test_weighted_instances():
    got = [(i.kwargs["k"], i.kwargs["r"]) for i in instances("weighted-sum", Bounds(max_weight=4))]
    assert got == [(1, 1), (2, 1), (3, 1), (3, 3), (4, 1), (4, 3)]


def test_cyclic_instances():
    got = [i.kwargs["k"] for i in instances("cyclic-sum", Bounds(max_weight=2))]
    assert got == [(2,)]
    assert all(not is_all_ones(i.kwargs["k"]) for i in instances("cyclic-sum"))


def test_bb_instances():
    specs = {(s.a, s.b, s.c) for s in bb_specs(2, 3)}
    assert ((1,), (1,), ()) in specs and ((), (), (2,)) in specs
    got = {(i.kwargs["a"], i.kwargs["b"], i.kwargs["c"]) for i in
           instances("bowman-bradley", Bounds(bb_length=2, bb_part=3))}
    assert got == specs
    for s in bb_specs(4, 5):
        assert 2 * s.l + s.m <= 4 and max(s.a + s.b + s.c) <= 5


def test_hypothesis_filters():
    assert all(i.kwargs["k"][-1] >= 2 for i in instances("hoffman"))
    for tid in ("derivation", "duality-phi"):
        assert all(w[0] == "y" and w[-1] == "x" for w in (i.kwargs["w"] for i in instances(tid)))
    assert all(i.kwargs["r"] % 2 for i in instances("weighted-sum"))
    assert all(i.kwargs["r"] % 2 for i in instances("keyprop-weighted"))


def test_instances_deterministic():
    for tid in theorem_ids():
        assert instances(tid) == instances(tid)


def test_min_prime():
    assert min_prime(inst("harmonic", 6, u=(1, 2), v=(3,))) == 3
    assert min_prime(inst("hoffman", 6, k=(4, 2))) == 9


# -- checks --------------------------------------------------------------------------------

def test_check_numeric_examples(ctx5):
    for i in (inst("sum-formula", 3, k=3, r=2), inst("duality-star", 3, k=(1, 2)), inst("cyclic-sum", 3, k=(2,))):
        assert check_numeric(i, ctx5, below_threshold=True).status == "pass"
        with pytest.raises(ValueError):
            check_numeric(i, ctx5)


def test_sum_formula_hand_value(ctx5):
    # LHS zeta^t_5(1,2) = 1; RHS coefficient 3 times zA(3) = 2
    assert relations.sum_formula_coefficient(3, 2) == 3
    lhs = relations.sum_formula_lhs(3, 2)
    assert list(lhs.keys()) == [(1, 2)]


def test_check_numeric_rejects_symbolic(ctx5):
    with pytest.raises(ValueError):
        check_numeric(inst("lemma-Snu", 3, w="yyx"), ctx5)
    with pytest.raises(ValueError):
        check_symbolic(inst("harmonic", 2, u=(1,), v=(1,)))


def test_check_symbolic_examples():
    assert check_symbolic(inst("prop-cyclic-coeff", 3, k=(2, 1), m=1)).status == "pass"
    assert check_symbolic(inst("lemma-Snu", 3, w="yyx")).status == "pass"
    assert check_symbolic(inst("keyprop-bb", 4, a=(), b=(), c=(2, 2), n=0)).status == "pass"


def test_failure_carries_witness(monkeypatch):
    monkeypatch.setitem(relations.NUMERIC_BUILDERS, "plain-sum", lambda k, r: (lambda ctx: FpPoly(ctx.p, [0, 1])))
    _plan.cache_clear()
    try:
        out = check_over_primes(inst("plain-sum", 2, k=2, r=1), [5, 7, 11], PrimeCtx)
    finally:
        _plan.cache_clear()
    assert out.status == "fail"
    assert out.prime == 5 and out.residual == [0, 1]
    assert [p for p, _ in out.failures] == [5, 7, 11]
    assert out.to_json()["prime"] == 5


def test_denominator_skip(monkeypatch):
    def builder(k, r):
        def residual(ctx):
            raise PDividesDenominator(ctx.p, (k,), "1/7")
        return residual

    monkeypatch.setitem(relations.NUMERIC_BUILDERS, "plain-sum", builder)
    _plan.cache_clear()
    try:
        out = check_over_primes(inst("plain-sum", 2, k=2, r=1), [7], PrimeCtx)
    finally:
        _plan.cache_clear()
    assert out.status == "skipped" and out.skipped[0][0] == 7
    assert check_over_primes(inst("plain-sum", 20, k=20, r=1), [5, 7], PrimeCtx).status == "skipped"


def test_hoffman_is_derivation_l1():
    for k in indices_up_to(8):
        if k[-1] >= 2:
            assert relations.hoffman_element(k) == -z_convert(relations.derivation_element(z_encode(k), 1))


def test_symmetric_sum_counts():
    for i in instances("symmetric-sum"):
        k = i.kwargs["k"]
        assert symmetric_sum_element(k).mass() == factorial(len(k))


# -- suite runs ------------------------------------------------------------------------------

def test_empty_run():
    report = run_suite([], primes=[11])
    assert report.outcomes == [] and report.exit_code == 0
    assert report.summary()["instances"] == 0


def test_harmonic_small_primes():
    report = run_suite(["harmonic"], Bounds(max_weight=5), primes=[3, 5, 7])
    assert report.exit_code == 0
    assert all(o.primes_tested == (3, 5, 7) for o in report.outcomes)


def test_report_formats():
    report = run_suite(["weighted-sum", "lemma-Snu"], Bounds(max_weight=4, word_symbolic_weight=3), primes=[11, 13])
    doc = json.loads(report.to_json())
    assert doc["suite"]["theorems"] == ["weighted-sum", "lemma-Snu"]
    assert doc["summary"]["fail"] == 0
    assert doc["primes"] == [11, 13]
    rows = report.to_csv().splitlines()
    assert rows[0].startswith("theorem,params") and len(rows) == len(report.outcomes) + 1
    with pytest.raises(ValueError):
        report.render("xml")


def test_parallel_matches_serial():
    ids, b = ["cyclic-sum", "lemma-F-closed"], Bounds(max_weight=5, weighted_symbolic_k=5)
    one = run_suite(ids, b, primes=[11, 13]).to_json()
    two = run_suite(ids, b, primes=[11, 13], jobs=2).to_json()
    assert one == two


def test_bad_primes_rejected():
    with pytest.raises(ValueError):
        run_suite(["harmonic"], primes=[9])
