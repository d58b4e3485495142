from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from aerolam.angles import angle, conjugate
from aerolam.coding import (
    Letter,
    W,
    Word,
    admissible,
    full_itinerary,
    itinerary,
    periodic_leaf,
    point_from_word,
    point_in_region,
    region_of,
    region_table_assignments,
    suffix_arcs,
    upper_arc,
    verify_region_table,
    word_less,
)
from aerolam.errors import (
    BoundaryAngle,
    InadmissibleCycle,
    InadmissibleWord,
    MissingFinalC,
    PrefixRelated,
    UnsupportedAlphabet,
)

A = W("32r2r")
B = W("33333")
V0 = W("32r32r2r")
W0 = W("32r33333")


def test_region_of_examples():
    assert region_of(angle(5, 16)) is Letter.L3
    assert region_of(angle(1, 4)) is Letter.UC
    with pytest.raises(BoundaryAngle):
        region_of(angle(3, 7))
    # interior conventions at the real axis
    assert region_of(angle(0)) is Letter.R1
    assert region_of(angle(1, 2)) is Letter.L1


def test_itinerary_examples():
    assert itinerary(angle(5, 16), 6).chars == "32c1pp"
    assert str(itinerary(angle(5, 16), 6)) == "L3 L2 C L1 R1 R1"
    assert itinerary(angle(0), 3).chars == "ppp"
    with pytest.raises(BoundaryAngle) as err:
        itinerary(angle(3, 7), 1)
    assert err.value.index == 0
    assert itinerary(angle(1, 4), 1, refine_c=True).chars == "u"


def test_admissible_examples():
    assert admissible(Word.parse("L2 R3"))
    assert not admissible(Word.parse("C R3", raw=True))
    assert admissible(Word.parse("L3 L2 C"))


def test_parse_rejects_inadmissible():
    with pytest.raises(InadmissibleWord):
        Word.parse("C R3")
    assert Word.parse("C R3", raw=True).chars == "cr"
    assert Word.parse("L3.L2.R3.L3^5").chars == "32r33333"


def test_upper_arc_examples():
    assert upper_arc(Word.parse("L3 L2 R3 L3")) == upper_arc(W("32r3"))
    arc = upper_arc(W("32r3"))
    assert (arc.lo, arc.hi) == (F(2, 7), F(33, 112))
    arc = upper_arc(W("3"))
    assert (arc.lo, arc.hi) == (F(2, 7), F(5, 14))
    arc = upper_arc(W("33"))
    assert (arc.lo, arc.hi) == (F(9, 28), F(5, 14))
    assert (upper_arc(A).lo, upper_arc(A).hi) == (F(67, 224), F(17, 56))
    assert (upper_arc(B).lo, upper_arc(B).hi) == (F(37, 112), F(75, 224))


def test_upper_arc_errors():
    with pytest.raises(UnsupportedAlphabet):
        upper_arc(Word.parse("L1 R1", raw=True))
    with pytest.raises(InadmissibleWord):
        upper_arc(Word.parse("L3 R3", raw=True))


def test_word_less_examples():
    assert word_less(A, B)
    assert word_less(V0, W0)
    with pytest.raises(PrefixRelated):
        word_less(W("3"), W("32"))


def test_point_from_word():
    assert point_from_word(W("c")).preperiod == 0
    w0u0 = W0 + W("32r32c")
    assert len(w0u0) == 14 and point_from_word(w0u0).preperiod == 13
    assert point_from_word(W("32r32c")).preperiod == 5
    with pytest.raises(MissingFinalC):
        point_from_word(W("32r"))
    with pytest.raises(InadmissibleWord):
        point_from_word(W("3c2c"))


def test_full_itinerary_examples():
    assert full_itinerary(point_from_word(W("2c")), 8).chars == "2c1qc1qc"
    assert full_itinerary(point_from_word(W("c")), 3).chars == "c1q"
    assert full_itinerary(point_from_word(W("c")), 1).chars == "c"


def test_point_in_region_examples():
    p = point_from_word(V0 + W("32r32c"))
    assert point_in_region(p, W("32r3"))
    assert not point_in_region(p, W0)
    assert not point_in_region(point_from_word(W("c")), W("3"))


def test_periodic_leaf_examples():
    leaf = periodic_leaf(W("32r"))
    assert (leaf.upper, leaf.lower) == (F(2, 7), F(5, 7))
    leaf = periodic_leaf(W("2"))
    assert (leaf.upper, leaf.lower) == (F(1, 3), F(2, 3))
    leaf = periodic_leaf(W("p"))
    assert leaf.degenerate and leaf.upper == 0
    with pytest.raises(InadmissibleCycle):
        periodic_leaf(W("32c"))
    with pytest.raises(InadmissibleCycle):
        periodic_leaf(W("3r"))


def test_periodic_leaf_properties():
    from aerolam.angles import orbit_type

    for chars in ("32r", "32r32r2r32r3332r2r"):
        leaf = periodic_leaf(W(chars))
        pre, period = orbit_type(leaf.upper)
        assert pre == 0 and len(chars) % period == 0
        # the upper endpoint stays inside every power's closed trace
        for m in (1, 2, 3):
            arc = upper_arc(W(chars * m))
            assert arc.lo <= leaf.upper <= arc.hi


def test_region_table_claims():
    claims = verify_region_table()
    assert all(c["status"] == "pass" for c in claims)
    assert len(region_table_assignments()) == 1


def _random_restricted_words(draw, max_len=9):
    allowed = {"3": "32", "2": "r", "r": "32"}
    length = draw(st.integers(1, max_len))
    chars = draw(st.sampled_from("32r"))
    while len(chars) < length:
        chars += draw(st.sampled_from(allowed[chars[-1]]))
    return W(chars)


restricted = st.composite(_random_restricted_words)()


@given(restricted)
@settings(max_examples=60)
def test_sampling_soundness(word):
    arc = upper_arc(word)
    theta = arc.mid
    assert itinerary(theta, len(word)).chars == word.chars


@given(restricted)
@settings(max_examples=60)
def test_lower_trace_is_conjugate(word):
    arc = upper_arc(word)
    theta = conjugate(arc.mid)
    assert itinerary(theta, len(word)).chars == word.chars


@given(restricted, st.sampled_from("32"))
@settings(max_examples=60)
def test_extension_nests(word, ch):
    if word.chars[-1] == "2":
        ch = "r"
    longer = W(word.chars + ch)
    assert upper_arc(word).contains_arc(upper_arc(longer))


def test_suffix_arcs_match_direct():
    word = V0 + W("32r32c")
    arcs = suffix_arcs(word)
    for j in (0, 3, 8, 13):
        assert arcs[j] == upper_arc(word[j:])


def test_order_is_strict_partial_order():
    words = [A, B, W("32r"), W("3"), V0, W0]
    for v in words:
        for w in words:
            if v.chars == w.chars:
                continue
            try:
                vw = word_less(v, w)
                wv = word_less(w, v)
            except PrefixRelated:
                continue
            assert vw != wv
