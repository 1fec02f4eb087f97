from itertools import combinations, permutations

import pytest

from shuflat.words import (
    DuplicateLetter,
    IndexOutOfRange,
    Letter,
    OrderViolation,
    SizeLimitExceeded,
    bottom_word,
    enumerate_shuffle_words,
    format_word,
    interval_shape,
    parse_word,
    rank,
    shuffle_word_count,
    subword_in,
    top_word,
    validate,
    x_letters,
    y_letters,
)


def w(text):
    return parse_word(text)


def test_parse_and_format_roundtrip():
    for text in ("e", "x1", "y1", "x1y1", "y1y2x2y3x5x6", "x12y3"):
        assert format_word(parse_word(text)) == text
    assert parse_word("") == ()
    assert parse_word("y1, y2 x2") == w("y1y2x2")
    with pytest.raises(ValueError):
        parse_word("x1z2")


def test_validate_accepts_valid_word():
    word = validate(w("y1y2x2y3x5x6"), 6, 3)
    assert word == w("y1y2x2y3x5x6")


def test_validate_rejects_duplicate():
    with pytest.raises(DuplicateLetter) as err:
        validate(w("y1y1x2y3x5x6"), 6, 3)
    assert "position 2" in str(err.value)


def test_validate_rejects_order_violation():
    with pytest.raises(OrderViolation) as err:
        validate(w("y1y2x2y3x6x5"), 6, 3)
    assert "position 6" in str(err.value)


def test_validate_rejects_out_of_range():
    with pytest.raises(IndexOutOfRange):
        validate(w("x7"), 6, 3)
    with pytest.raises(IndexOutOfRange):
        validate(w("y4"), 6, 3)
    with pytest.raises(IndexOutOfRange):
        validate([("z", 1)], 6, 3)


def brute_words(m, n):
    # independent oracle: every injective letter sequence, filtered
    alphabet = [Letter("x", i) for i in range(1, m + 1)]
    alphabet += [Letter("y", j) for j in range(1, n + 1)]
    found = set()
    for size in range(len(alphabet) + 1):
        for perm in permutations(alphabet, size):
            try:
                validate(perm, m, n)
            except ValueError:
                continue
            found.add(perm)
    return found


def interleaving_words(m, n):
    # second oracle: subset pairs interleaved by choosing x positions
    out = set()
    xs = list(range(1, m + 1))
    ys = list(range(1, n + 1))
    for sx in range(m + 1):
        for sub_x in combinations(xs, sx):
            for sy in range(n + 1):
                for sub_y in combinations(ys, sy):
                    total = sx + sy
                    for x_slots in combinations(range(total), sx):
                        word = []
                        xi = iter(sub_x)
                        yi = iter(sub_y)
                        slots = set(x_slots)
                        for pos in range(total):
                            if pos in slots:
                                word.append(Letter("x", next(xi)))
                            else:
                                word.append(Letter("y", next(yi)))
                        out.add(tuple(word))
    return out


def test_enumerate_matches_brute_oracle():
    for m in range(3):
        for n in range(3):
            assert set(enumerate_shuffle_words(m, n)) == brute_words(m, n)


def test_enumerate_matches_interleaving_oracle():
    for m in range(4):
        for n in range(4):
            listing = enumerate_shuffle_words(m, n)
            assert len(set(listing)) == len(listing)
            assert set(listing) == interleaving_words(m, n)


def test_enumerate_counts_match_formula():
    for m in range(7):
        for n in range(7):
            assert len(enumerate_shuffle_words(m, n)) == shuffle_word_count(m, n)


def test_enumerate_canonical_order():
    assert [format_word(u) for u in enumerate_shuffle_words(1, 1)] == [
        "e",
        "x1",
        "y1",
        "x1y1",
        "y1x1",
    ]
    assert enumerate_shuffle_words(0, 0) == [()]
    assert len(enumerate_shuffle_words(1, 2)) == 12


def test_enumerate_size_cap():
    with pytest.raises(SizeLimitExceeded) as err:
        enumerate_shuffle_words(3, 3, size_cap=100)
    assert err.value.predicted == shuffle_word_count(3, 3)
    assert "245" in str(err.value)


def test_everything_enumerated_validates():
    for m, n in ((2, 3), (3, 2)):
        for u in enumerate_shuffle_words(m, n):
            assert validate(u, m, n) == u


def test_subword_in():
    assert subword_in(w("y1x1"), w("y1y2")) == w("y1")
    assert subword_in(w("y1y2x2y3x5x6"), bottom_word(6)) == w("x2x5x6")
    assert subword_in((), w("x1y1")) == ()


def test_x_and_y_letters():
    u = w("y1y2x2y3x5x6")
    assert x_letters(u) == w("x2x5x6")
    assert y_letters(u) == w("y1y2y3")


def test_rank():
    assert rank(bottom_word(6), 6) == 0
    assert rank(top_word(3), 6) == 9
    assert rank(w("y1y2x2y3x5x6"), 6) == 6
    for m, n in ((2, 2), (3, 1)):
        for u in enumerate_shuffle_words(m, n):
            assert 0 <= rank(u, m) <= m + n


def test_interval_shape_examples():
    shape = interval_shape(w("x7y2"), 7, 3)
    assert shape.y_count == 1
    assert shape.y_gaps == (1, 1)
    assert shape.x_blocks == (1, 0)

    shape = interval_shape(bottom_word(4), 4, 2)
    assert shape == (0, (4,), (2,))

    shape = interval_shape(top_word(3), 5, 3)
    assert shape.y_count == 3
    assert shape.x_blocks == (0, 0, 0, 0)
    assert shape.y_gaps == (0, 0, 0, 0)


def test_interval_shape_sums():
    for m, n in ((2, 2), (3, 2), (1, 3)):
        for u in enumerate_shuffle_words(m, n):
            shape = interval_shape(u, m, n)
            assert sum(shape.y_gaps) == n - shape.y_count
            assert sum(shape.x_blocks) == len(x_letters(u))
            assert shape.y_count == len(y_letters(u))
