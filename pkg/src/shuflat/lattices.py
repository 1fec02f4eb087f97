"""The shuffle lattice and the bubble cover relation on shuffle words.

Going up in the shuffle lattice means deleting an x-letter or inserting
a y-letter (an indel); each indel raises rank by one, so indel edges
are exactly the covers.

The bubble order on the same words is finer.  Its covers split into
two kinds:

* a forward transposition swaps an adjacent pair x_i y_j into y_j x_i;
* a right indel is an indel whose affected letter, in the longer word,
  is not immediately followed by a letter of the other family: delete
  an x-letter that is last or followed by another x-letter, or insert a
  y-letter so that it is last or immediately precedes another y-letter.

Only the cover set is materialized here; the H-triangle needs nothing
else of the bubble order.
"""

from __future__ import annotations

from typing import NamedTuple

from .poset import Poset, build_poset
from .words import (
    FAMILY_X,
    FAMILY_Y,
    DEFAULT_SIZE_CAP,
    Letter,
    enumerate_shuffle_words,
    format_word,
    interval_shape,
    rank,
    x_letters,
)

KIND_INDEL = "indel"
KIND_TRANSPOSE = "transpose"


class BubbleCover(NamedTuple):
    lower: tuple
    upper: tuple
    kind: str


class DegreeTriple(NamedTuple):
    """Lower-cover counts in the bubble order, split by cover kind."""

    in_total: int
    in_indel: int
    in_transpose: int


def indel_successors(u, m, n):
    """All words one indel above u: delete any x-letter, or insert an
    absent y-letter at any position that keeps the word valid."""
    out = []
    for pos, letter in enumerate(u):
        if letter.family == FAMILY_X:
            out.append(u[:pos] + u[pos + 1 :])
    present = {letter.index for letter in u if letter.family == FAMILY_Y}
    for j in range(1, n + 1):
        if j in present:
            continue
        for pos in _insertion_slots(u, j):
            out.append(u[:pos] + (Letter(FAMILY_Y, j),) + u[pos:])
    out.sort(key=lambda w: (len(w), w))
    return out


def _insertion_slots(u, j):
    """Positions where y_j can be inserted into u without breaking the
    increasing order of y-indices."""
    lo = 0
    hi = len(u)
    for pos, letter in enumerate(u):
        if letter.family != FAMILY_Y:
            continue
        if letter.index < j:
            lo = pos + 1
        elif letter.index > j:
            hi = pos
            break
    return range(lo, hi + 1)


def build_shuffle_lattice(m, n, size_cap=DEFAULT_SIZE_CAP) -> Poset:
    """The shuffle lattice as a graded Poset labelled by the words.

    Bottom is x1..xm, top is y1..yn; covers are the single indels.
    """
    labels = enumerate_shuffle_words(m, n, size_cap)
    index = {w: i for i, w in enumerate(labels)}
    covers = []
    for w in labels:
        i = index[w]
        for v in indel_successors(w, m, n):
            covers.append((i, index[v]))
    return build_poset(labels, covers)


def _bubble_upper_covers(u, m, n):
    """(upper, kind) pairs for the bubble covers directly above u."""
    out = []
    last = len(u) - 1
    for pos, letter in enumerate(u):
        if letter.family == FAMILY_X:
            if pos == last or u[pos + 1].family == FAMILY_X:
                out.append((u[:pos] + u[pos + 1 :], KIND_INDEL))
            else:
                swapped = u[:pos] + (u[pos + 1], letter) + u[pos + 2 :]
                out.append((swapped, KIND_TRANSPOSE))
    present = {letter.index for letter in u if letter.family == FAMILY_Y}
    for j in range(1, n + 1):
        if j in present:
            continue
        for pos in _insertion_slots(u, j):
            # right insertion: the new letter is last or precedes a y
            if pos < len(u) and u[pos].family != FAMILY_Y:
                continue
            out.append((u[:pos] + (Letter(FAMILY_Y, j),) + u[pos:], KIND_INDEL))
    return out


def bubble_covers(m, n, size_cap=DEFAULT_SIZE_CAP):
    """Every bubble cover pair for (m, n), deterministically sorted."""
    covers = set()
    for u in enumerate_shuffle_words(m, n, size_cap):
        for upper, kind in _bubble_upper_covers(u, m, n):
            covers.add(BubbleCover(u, upper, kind))
    return sorted(covers, key=lambda c: ((len(c.lower), c.lower), (len(c.upper), c.upper), c.kind))


def degree_statistics(m, n, size_cap=DEFAULT_SIZE_CAP):
    """Per-word lower-cover counts in the bubble order, split by kind."""
    counts = {w: [0, 0] for w in enumerate_shuffle_words(m, n, size_cap)}
    for cover in bubble_covers(m, n, size_cap):
        pair = counts[cover.upper]
        if cover.kind == KIND_INDEL:
            pair[0] += 1
        else:
            pair[1] += 1
    return {
        w: DegreeTriple(indel + transpose, indel, transpose)
        for w, (indel, transpose) in counts.items()
    }


def bubble_covers_dot(m, n, size_cap=DEFAULT_SIZE_CAP) -> str:
    """The bubble cover digraph as DOT, edges annotated with their kind."""
    words = enumerate_shuffle_words(m, n, size_cap)
    lines = ["digraph hasse {"]
    for w in words:
        lines.append(f'  "{format_word(w)}" [rank={rank(w, m)}];')
    for cover in bubble_covers(m, n, size_cap):
        lines.append(
            f'  "{format_word(cover.lower)}" -> "{format_word(cover.upper)}"'
            f" [kind={cover.kind}];"
        )
    lines.append("}")
    return "\n".join(lines)


def interval_factors(u, m, n):
    """Parameter pairs (x_block, y_gap) of the factor lattices into which
    the interval [u, top] decomposes."""
    shape = interval_shape(u, m, n)
    return list(zip(shape.x_blocks, shape.y_gaps))


def interval_decomposition_map(u, m, n):
    """The block-splitting bijection behind the interval factorization.

    Returns (factors, split) where ``factors`` are the (x_block, y_gap)
    parameter pairs and ``split(w)`` maps a word in [u, top] to the
    tuple of factor words: the y-letters of u act as separators, each
    surviving x-letter is renumbered by its position among u's
    x-letters minus the block offset, and each inserted y-letter is
    shifted down by the separator index on its left.
    """
    factors = interval_factors(u, m, n)
    chosen = [letter.index for letter in u if letter.family == FAMILY_Y]
    chosen_set = set(chosen)
    x_position = {letter.index: s for s, letter in enumerate(x_letters(u), start=1)}
    x_offsets = [0]
    for size, _ in factors[:-1]:
        x_offsets.append(x_offsets[-1] + size)
    y_offsets = [0] + chosen

    def split(w):
        blocks = [[] for _ in range(len(factors))]
        block = 0
        for letter in w:
            if letter.family == FAMILY_Y and letter.index in chosen_set:
                block += 1
            elif letter.family == FAMILY_X:
                blocks[block].append(
                    Letter(FAMILY_X, x_position[letter.index] - x_offsets[block])
                )
            else:
                blocks[block].append(
                    Letter(FAMILY_Y, letter.index - y_offsets[block])
                )
        return tuple(tuple(b) for b in blocks)

    return factors, split
