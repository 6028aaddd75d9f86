import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from hovm.holes import HoleSet
from hovm.oracle import oracle_module, oracle_weights
from hovm.rootdata import DynkinGraph, independent_sets, parse_gcm
from hovm.verify import random_sl2n_spec
from hovm.weights import HighestWeight, depth_vectors, integrability
from hovm.weightsets import (
    HovmSpec,
    altwts_check,
    inclusion_exclusion_char,
    minkowski_family_check,
    psi_k,
    psi_separating_weight,
    pvm_member,
    pvm_weight_set,
    spec_from_sets,
    weight_member,
    weight_set,
    weight_set_minkowski,
)

SL22 = parse_gcm("A1^2")
SL23 = parse_gcm("A1^3")
A4 = parse_gcm("A4")


def v00():
    lam = HighestWeight(SL22, [0, 0])
    return HovmSpec(lam, HoleSet({1, 2}, [{1, 2}]))


def test_pvm_member_sl22():
    lam = HighestWeight(SL22, [0, 0])
    for n in range(6):
        assert pvm_member(lam, {1}, (0, n))
    assert not pvm_member(lam, {1}, (1, 0))
    assert pvm_member(lam, set(), (5, 3))  # Verma
    assert pvm_member(lam, {1}, (0, 0))
    with pytest.raises(ValueError):
        pvm_member(HighestWeight(SL22, [-1, 0]), {1}, (0, 0))


def test_weight_member_v00():
    spec = v00()
    assert not weight_member(spec, (1, 1))
    assert weight_member(spec, (0, 3))
    assert weight_member(spec, (4, 0))
    assert not weight_member(spec, (-1, 0))


def test_weight_set_v00():
    spec = v00()
    ws = weight_set(spec, 4)
    assert ws == {c for c in depth_vectors(2, 4) if c[0] * c[1] == 0}
    assert len(ws) == 9


def test_zero_module():
    lam = HighestWeight(SL22, [0, 0])
    spec = HovmSpec(lam, HoleSet({1, 2}, [set()]))
    assert spec.is_zero()
    assert weight_set(spec, 5) == set()
    assert weight_set_minkowski(spec, 5) == set()


def test_sl5_rank4_weight_set():
    lam = HighestWeight(A4, [1, 0, 0, -1])
    assert integrability(lam) == {1, 2, 3}
    spec = spec_from_sets(lam, [{2}, {1, 3}])
    assert sorted(map(sorted, spec.min_transversals())) == [[1, 2], [2, 3]]
    ws = weight_set(spec, 8)
    assert ws == pvm_weight_set(lam, {1, 2}, 8) | pvm_weight_set(lam, {2, 3}, 8)


def test_triple_hole_axes():
    lam = HighestWeight(SL23, [0, 0, 0])
    spec = spec_from_sets(lam, [{1, 2}, {2, 3}, {1, 3}])
    ws = weight_set(spec, 5)
    axes = {c for c in depth_vectors(3, 5) if sum(1 for x in c if x) <= 1}
    assert ws == axes


def test_parabolic_specialization():
    # holes = all singletons of J reproduces the parabolic Verma weight set
    lam = HighestWeight(parse_gcm("A3"), [1, 0, "x"])
    spec = spec_from_sets(lam, [{1}, {2}])
    for c in depth_vectors(3, 6):
        assert weight_member(spec, c) == pvm_member(lam, {1, 2}, c)


def test_monotonicity_adding_holes():
    lam = HighestWeight(SL23, [1, 0, 2])
    small = spec_from_sets(lam, [{1, 2}])
    large = spec_from_sets(lam, [{1, 2}, {3}])
    assert weight_set(large, 6) <= weight_set(small, 6)


def test_t2_minkowski_small_types():
    cases = [
        ("A2", [1, 1], [[1], [2]]),
        ("A3", [1, 0, 1], [[1, 3]]),
        ("B2", [1, 0], [[1]]),
        ("A1^2", [0, 0], [[1, 2]]),
    ]
    for name, evals, holes in cases:
        lam = HighestWeight(parse_gcm(name), evals)
        spec = spec_from_sets(lam, [frozenset(h) for h in holes])
        assert weight_set_minkowski(spec, 8) == weight_set(spec, 8)


def test_minkowski_family():
    lam = HighestWeight(parse_gcm("A2"), [1, 1])
    assert minkowski_family_check(lam, {1}, {1, 2}, 6)
    assert minkowski_family_check(lam, {1}, {1}, 6)
    assert minkowski_family_check(lam, set(), {1, 2}, 6)
    with pytest.raises(ValueError):
        minkowski_family_check(lam, {1, 2}, {1}, 6)
    sl2 = HighestWeight(parse_gcm("A1"), [2])
    assert minkowski_family_check(sl2, set(), {1}, 8)


def test_psi_k_stability():
    lam = HighestWeight(SL23, [0, 1, 0])
    spec = spec_from_sets(lam, [{1, 2}, {2, 3}, {1, 3}])
    base = weight_set(spec, 6)
    for k in (1, 2, 3, math.inf):
        assert psi_k(spec, k, 6) == base


def test_psi_separating_weight():
    lam = HighestWeight(SL22, [0, 0])
    h1 = HoleSet({1, 2}, [{1, 2}])
    h2 = HoleSet({1, 2}, [{1}])
    # {1} is in the closure of h2 but not of h1, so the witness is lambda_{1}
    w = psi_separating_weight(lam, h1, h2)
    assert w == (1, 0)
    s1, s2 = HovmSpec(lam, h1), HovmSpec(lam, h2)
    assert weight_member(s1, w) != weight_member(s2, w)
    with pytest.raises(ValueError):
        psi_separating_weight(lam, h1, h1)
    hs1, hs2 = HoleSet({1, 2}, [{1}]), HoleSet({1, 2}, [{2}])
    assert psi_separating_weight(lam, hs1, hs2) in {(1, 0), (0, 1)}


def test_altwts():
    assert altwts_check(v00(), 6)
    lam = HighestWeight(A4, [1, 0, 0, -1])
    assert altwts_check(spec_from_sets(lam, [{2}, {1, 3}]), 6)
    verma = HovmSpec(lam, HoleSet(integrability(lam), []))
    assert altwts_check(verma, 5)


def test_inclusion_exclusion_char_requires_sl2n():
    lam = HighestWeight(parse_gcm("A2"), [1, 1])
    with pytest.raises(ValueError):
        inclusion_exclusion_char(spec_from_sets(lam, [{1}]), 4)


def test_inclusion_exclusion_char_v00():
    ch = inclusion_exclusion_char(v00(), 5)
    assert ch.is_zero_one()
    assert ch.support() == weight_set(v00(), 5)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=40, deadline=None)
def test_oracle_equivalence_random(seed):
    rng = random.Random(seed)
    spec = random_sl2n_spec(rng)
    mod = oracle_module(spec.lam, spec.holes, 8)
    assert weight_set(spec, 8) == oracle_weights(mod)


@given(st.integers(min_value=0, max_value=10**6))
@settings(max_examples=25, deadline=None)
def test_weak_minkowski_random(seed):
    # freeness over the nodes outside the hole support
    rng = random.Random(seed)
    spec = random_sl2n_spec(rng)
    ws = weight_set(spec, 8)
    outside = [i for i in spec.gcm.nodes if i not in spec.holes.support()]
    for c in ws:
        for i in outside:
            bumped = tuple(
                x + 1 if k == i - 1 else x for k, x in enumerate(c)
            )
            if sum(bumped) <= 8:
                assert bumped in ws
