from fractions import Fraction

import pytest

import addcomp


def test_construction():
    seq = addcomp.build_sequence(2)
    assert seq.terms == [1, 4, 130, 31591]
    assert addcomp.build_terms(5).terms[-1] == 32349186
    assert addcomp.count(seq, 130) == 3
    assert addcomp.largest_le(seq, 129) == 4
    assert [l["n"] for l in addcomp.level_ladder(seq)] == [2, 4]
    assert addcomp.q_of(addcomp.build_terms(4), 3) == 3


def test_big_terms_round_trip():
    seq = addcomp.build_terms(9)
    assert seq.terms[-1] > 2**64
    assert addcomp.Sequence.from_json(seq.to_json()) == seq
    assert addcomp.Sequence(seq.terms) == seq


def test_cover():
    sol = addcomp.cover(4, [1, 4])
    assert sol["L"] == 2
    assert sol["translates"] == [1, 3]
    assert addcomp.cover_validate(4, [1, 4], [1]) == (False, [0, 3])
    assert addcomp.cover(4, [1, 4], mode="structured", n=2)["translates"] == [0, 2]


def test_complement_and_criterion():
    seq = addcomp.build_terms(6)
    blocks, diags = addcomp.build_blocks(seq, 2)
    assert blocks.count(10) == 6
    assert blocks.count(130) == 66
    assert blocks.members(388, 392) == [389, 391]
    assert blocks.blocks[1]["U_k"] == [1, 3]
    assert diags[0]["kind"] == "exact-minimum"
    rep = addcomp.criterion(seq, blocks, 130)
    assert rep["T"] == Fraction(74, 3)
    assert rep["scale"] == Fraction(130, 9)
    assert rep["R"] == Fraction(111, 65)
    cov = addcomp.sumset_coverage(seq, blocks, 260)
    assert cov["N0"] == 5


def test_lemma():
    assert addcomp.lemma_exhaustive(6) == (3969, 3969)
    assert addcomp.lemma_check([1, 2], [1, 2]) == (1, Fraction(1, 2), True)


def test_errors_carry_a_category():
    seq = addcomp.build_terms(6)
    blocks, _ = addcomp.build_blocks(seq, 2)
    with pytest.raises(addcomp.AddcompError) as info:
        addcomp.criterion(seq, blocks, 10**6)
    assert info.value.kind == "span"
    with pytest.raises(addcomp.AddcompError) as info:
        addcomp.build_sequence(3)
    assert info.value.kind == "cap"
