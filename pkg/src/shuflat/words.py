"""Shuffle words over two indexed alphabets.

A shuffle word over the alphabets x1..xm and y1..yn is a word that uses
each letter at most once (simple) and whose x-indices, read left to
right, are strictly increasing, likewise its y-indices (order
preserving).  Shuf(m, n) is the set of all such words; it carries the
lattice structures built in :mod:`shuflat.lattices`.

Words are plain tuples of :class:`Letter`, hashable and immutable, and
every function here is pure.  The text syntax is ``x3``/``y2``
concatenated, e.g. ``y1y2x2y3x5x6``; the empty word renders as ``e``.
"""

from __future__ import annotations

import re
from math import comb
from typing import Iterable, NamedTuple

FAMILY_X = "x"
FAMILY_Y = "y"

#: Refuse enumeration above this predicted cardinality unless overridden.
DEFAULT_SIZE_CAP = 10**6


class DuplicateLetter(ValueError):
    """A letter occurs twice; the message names the offending position."""


class OrderViolation(ValueError):
    """Indices of one family do not increase left to right."""


class IndexOutOfRange(ValueError):
    """A letter index is outside 1..m (for x) or 1..n (for y)."""


class SizeLimitExceeded(ValueError):
    """Predicted enumeration size exceeds the configured cap."""

    def __init__(self, predicted, cap):
        self.predicted = predicted
        self.cap = cap
        super().__init__(
            f"enumeration would produce {predicted} words, above the cap of {cap}"
        )


class Letter(NamedTuple):
    """One tagged letter: family 'x' or 'y' plus a 1-based index.

    Tuple comparison gives the canonical letter order
    x1 < x2 < ... < y1 < y2 < ...
    """

    family: str
    index: int

    def __str__(self):
        return f"{self.family}{self.index}"


Word = tuple  # a shuffle word is a tuple of Letter


class IntervalShape(NamedTuple):
    """How a word splits the alphabets for the interval up to the top word.

    ``y_count`` is the number of y-letters in the word.  Those letters cut
    the full y-word into ``y_count + 1`` gaps; ``y_gaps[i]`` counts the
    absent y-letters in gap ``i``.  They likewise cut the word's own
    x-letters into blocks; ``x_blocks[i]`` is the size of block ``i``.
    """

    y_count: int
    x_blocks: tuple
    y_gaps: tuple


def validate(letters: Iterable, m: int, n: int) -> Word:
    """Check a raw letter sequence and return it as a shuffle word.

    Raises DuplicateLetter, OrderViolation, or IndexOutOfRange, each
    naming the first offending 1-based position.
    """
    word = tuple(Letter(fam, idx) for fam, idx in letters)
    seen = set()
    last_index = {FAMILY_X: 0, FAMILY_Y: 0}
    for pos, letter in enumerate(word, start=1):
        if letter.family not in (FAMILY_X, FAMILY_Y):
            raise IndexOutOfRange(f"position {pos}: unknown family {letter.family!r}")
        bound = m if letter.family == FAMILY_X else n
        if not 1 <= letter.index <= bound:
            raise IndexOutOfRange(
                f"position {pos}: {letter} outside 1..{bound} for ({m},{n})"
            )
        if letter in seen:
            raise DuplicateLetter(f"position {pos}: {letter} occurs twice")
        seen.add(letter)
        if letter.index <= last_index[letter.family]:
            raise OrderViolation(
                f"position {pos}: {letter} does not increase within its family"
            )
        last_index[letter.family] = letter.index
    return word


def shuffle_word_count(m: int, n: int) -> int:
    """Number of shuffle words: sum over a of C(m,a) C(n,a) 2^(m+n-2a)."""
    return sum(
        comb(m, a) * comb(n, a) * 2 ** (m + n - 2 * a) for a in range(min(m, n) + 1)
    )


def enumerate_shuffle_words(m, n, size_cap=DEFAULT_SIZE_CAP):
    """All shuffle words for (m, n), in length-then-lexicographic order.

    The letter order is x1 < ... < xm < y1 < ... < yn.  Raises
    SizeLimitExceeded when the predicted count is above ``size_cap``.
    """
    predicted = shuffle_word_count(m, n)
    if predicted > size_cap:
        raise SizeLimitExceeded(predicted, size_cap)
    out = []
    stack = []

    def extend(min_x, min_y):
        out.append(tuple(stack))
        for i in range(min_x, m + 1):
            stack.append(Letter(FAMILY_X, i))
            extend(i + 1, min_y)
            stack.pop()
        for j in range(min_y, n + 1):
            stack.append(Letter(FAMILY_Y, j))
            extend(min_x, j + 1)
            stack.pop()

    extend(1, 1)
    out.sort(key=lambda w: (len(w), w))
    return out


def subword_in(u: Word, v: Word) -> Word:
    """The subword of u consisting of the letters that also appear in v."""
    keep = set(v)
    return tuple(letter for letter in u if letter in keep)


def x_letters(word: Word) -> Word:
    return tuple(letter for letter in word if letter.family == FAMILY_X)


def y_letters(word: Word) -> Word:
    return tuple(letter for letter in word if letter.family == FAMILY_Y)


def rank(word: Word, m: int) -> int:
    """Lattice rank: (number of y-letters) + m - (number of x-letters)."""
    n_x = sum(1 for letter in word if letter.family == FAMILY_X)
    return (len(word) - n_x) + m - n_x


def bottom_word(m: int) -> Word:
    """The minimum element x1 x2 ... xm."""
    return tuple(Letter(FAMILY_X, i) for i in range(1, m + 1))


def top_word(n: int) -> Word:
    """The maximum element y1 y2 ... yn."""
    return tuple(Letter(FAMILY_Y, j) for j in range(1, n + 1))


def interval_shape(u: Word, m: int, n: int) -> IntervalShape:
    """Shape data (y_count, x_blocks, y_gaps) of the interval [u, top].

    The y-letters of u, say y_{i_1} < ... < y_{i_k}, split the absent
    y-indices into gaps counted by ``y_gaps`` (a gap is the run of
    indices strictly between consecutive chosen ones, with 0 and n+1 as
    virtual endpoints) and split the x-letters of u, in the order they
    sit inside u, into blocks counted by ``x_blocks``.
    """
    chosen = [letter.index for letter in u if letter.family == FAMILY_Y]
    k = len(chosen)
    boundaries = [0] + chosen + [n + 1]
    y_gaps = tuple(boundaries[j + 1] - boundaries[j] - 1 for j in range(k + 1))
    x_blocks = [0] * (k + 1)
    block = 0
    for letter in u:
        if letter.family == FAMILY_Y:
            block += 1
        else:
            x_blocks[block] += 1
    return IntervalShape(k, tuple(x_blocks), y_gaps)


_TOKEN = re.compile(r"([xy])(\d+)")
_SEPARATORS = re.compile(r"[\s,;]+")


def parse_word(text: str) -> Word:
    """Parse the text syntax, e.g. 'y1y2x2y3x5x6'; 'e' or '' is the empty word."""
    compact = _SEPARATORS.sub("", text)
    if compact in ("", "e"):
        return ()
    letters = []
    pos = 0
    while pos < len(compact):
        match = _TOKEN.match(compact, pos)
        if match is None:
            raise ValueError(f"cannot parse word text {text!r} at {compact[pos:]!r}")
        letters.append(Letter(match.group(1), int(match.group(2))))
        pos = match.end()
    return tuple(letters)


def format_word(word: Word) -> str:
    """Render a word in the text syntax; the empty word is 'e'."""
    if not word:
        return "e"
    return "".join(str(letter) for letter in word)
