from fractions import Fraction

import pytest

import cantor


REFERENCE_LIST = [
    cantor.Rational(2, 3),
    cantor.Rational(1, 2),
    cantor.Rational(1, 1),
    cantor.Rational(7, 8),
    cantor.Rational(5, 6),
    cantor.Rational(5, 8),
]


def test_expansion_is_exact():
    d = cantor.expansion(cantor.Rational(2, 3), 3)
    assert str(d) == "0.1(2)_3"
    assert d.value() == cantor.Rational(2, 3)
    assert cantor.fraction(d.value()) == Fraction(2, 3)


def test_reference_list_digits():
    anti = cantor.anti_diagonal(REFERENCE_LIST, base=3, depth=6)
    assert anti.digits == [2, 2, 1, 2, 2, 1]
    word, trace = cantor.inductive_real(REFERENCE_LIST, base=3, depth=6)
    assert word.digits == [2, 1, 1, 1, 2, 1]
    assert len(trace) == 6
    assert trace[0].matched and not trace[1].matched


def test_binary_sequences():
    streams = [cantor.BitStream(":1"), cantor.BitStream(":0"), cantor.BitStream(":01")]
    assert cantor.classical_diagonal(streams, 3) == "011"
    word, trace = cantor.inductive_sigma(streams, 3)
    assert word == "011"
    assert [t.emitted for t in trace] == ["0", "1", "1"]


def test_powerset_constructions():
    inst = cantor.PowersetInstance(2, [0, 1], [[0], []])
    _, fixpoint_index, fixpoint = cantor.stages(inst)
    assert fixpoint == [1]
    assert fixpoint_index == 1
    dinf, _ = cantor.d_infinity(inst)
    assert dinf == [1]
    assert cantor.in_range(inst, [1]) is None
    assert cantor.in_range(inst, [0]) == 0

    parsed = cantor.PowersetInstance.parse(inst.serialize())
    assert parsed.serialize() == inst.serialize()


def test_preconditions_raise():
    with pytest.raises(ValueError):
        cantor.inductive_real(REFERENCE_LIST, base=2, depth=3)
    with pytest.raises(ValueError):
        cantor.BitStream("not-a-stream")


def test_small_verification_runs_clean():
    report = cantor.verify_powerset(max_n_all=2, identity_n=0, max_chain=2)
    assert report.ok()
    assert report.instances_checked == 35

    report = cantor.verify_sequences(depth=3, max_list=2, rational_lists=3, seed=5)
    assert report.ok()

    assert all(m.detected_exactly() for m in cantor.mutation_self_test())
