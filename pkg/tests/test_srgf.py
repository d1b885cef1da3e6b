import pytest
from hypothesis import given, settings, strategies as st

from sbpart import srgf, typeb
from sbpart.errors import InvalidWord
from sbpart.qseries import stirling_B

from conftest import PI7, PI8, PI9

P = typeb.parse_partition
W = srgf.parse_word

W7 = "0,-1,1,0,0,-2,2,-3,3,3,-3,-2,2,1,-1"
W8 = "0,0,0,-1,1,0,0,1,-1,-2,2,-3,3,-4,4,-3,3"
DECODED = ("0,0,0,-1,1,0,0,-2,2,1,-1,2,-2,-3,3,-4,4,4,-4",
           "0 1 -1 3 -3/-2 5/2 -5/-4 6/4 -6/-7/7/-8 9/8 -9")


def digits(s):
    return [int(c) for c in s]


def test_encode_examples():
    assert str(srgf.encode(P(PI7))) == W7
    assert str(srgf.encode(P(PI8))) == W8
    assert srgf.encode(P("0 1 -1 2 -2")).word == (0,) * 5


def test_decode_examples():
    word, part = DECODED
    assert str(srgf.decode(W(word))) == part
    assert str(srgf.decode(W("0,0,0,0,0"))) == "0 1 -1 2 -2"


def test_encode_rejects_nonstandard():
    with pytest.raises(ValueError):
        srgf.encode(P("0/1/-1"))


@pytest.mark.parametrize("word, clause", [
    ([0, -1, 1], None),
    ([0, 1, -1], 4),
    ([0, -2, 2], 3),
    ([1, -1, 1], 1),
    ([0, -1, 2], 2),
    ([0, -1], 2),
    ([0, -1, 1, 1, -1, -3, 3], 3),
])
def test_validate(word, clause):
    assert srgf.validate(word) == clause


def test_invalid_word_names_clause():
    with pytest.raises(InvalidWord) as info:
        W("0,1,-1")
    assert info.value.clause == 4


@pytest.mark.parametrize("n", range(7))
def test_bijection(n):
    for k in range(n + 1):
        encoded = set()
        for p in typeb.enumerate_b(n, k):
            w = srgf.encode(p)
            assert w.k == k
            assert srgf.decode(w) == p
            encoded.add(w.word)
        if n <= 5:
            words = {w.word for w in srgf.enumerate_words(n, k)}
            assert words == encoded
        assert len(encoded) == stirling_B(n, k)


# reference digit strings
@pytest.mark.parametrize("part, which, expected", [
    (PI8, "lb", "00000111000000002"),
    (PI8, "ls", "00001000003050705"),
    (PI8, "lcb", "00001000001010301"),
    (PI8, "lob", "00001000001010100"),
    (PI9, "rcb", "0080608700402000210"),
    (PI9, "rob", "0080606600402000000"),
    (PI9, "lcs", "0000000000304040560"),
])
def test_vector_digits(part, which, expected):
    assert srgf.stat_vector(srgf.encode(P(part)), which) == digits(expected)


def test_rcs_example_digits():
    part = PI7
    vec = srgf.stat_vector(srgf.encode(P(part)), "rcs")
    assert vec == digits("000000000100250")
    assert sum(vec) == typeb.stat_b(P(part), "rcs") == 8


@pytest.mark.parametrize("part, which, total", [
    (PI8, "lb", 5), (PI8, "ls", 21), (PI9, "rcb", 38), (PI8, "lcb", 7),
    (PI8, "rob", 32), (PI8, "lob", 4), (PI9, "lcs", 22),
])
def test_vector_sums_examples(part, which, total):
    assert sum(srgf.stat_vector(srgf.encode(P(part)), which)) == total


@pytest.mark.parametrize("which", srgf.VECTORS)
def test_vector_sums_exhaustive(which):
    for n in range(5):
        for k in range(n + 1):
            for p in typeb.enumerate_b(n, k):
                vec = srgf.stat_vector(srgf.encode(p), which)
                assert len(vec) == 2 * n + 1 and vec[0] == 0
                assert sum(vec) == typeb.stat_b(p, srgf.VECTOR_STAT[which])


def test_negative_letters_carry_no_digit():
    for p in typeb.enumerate_b(4, 2):
        w = srgf.encode(p)
        for which in srgf.VECTORS:
            vec = srgf.stat_vector(w, which)
            assert all(d == 0 for a, d in zip(w.word, vec) if a < 0)


def test_maj_examples():
    assert srgf.maj_srgf(srgf.encode(P(PI8))) == 10
    assert srgf.maj_srgf([0] * 9) == 0
    assert srgf.maj_srgf([0, -1, 1, 1, -1]) == 2


@given(st.integers(1, 5), st.data())
@settings(max_examples=50)
def test_random_words_roundtrip(n, data):
    words = list(srgf.enumerate_words(n))
    w = data.draw(st.sampled_from(words))
    assert srgf.encode(srgf.decode(w)) == w
