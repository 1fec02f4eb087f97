"""Finite graded posets: covers, order closure, rank, Mobius function.

A Poset is built once from labels and cover pairs, then frozen.  The
order closure is kept as one Python int per element used as a bitset
(bit v of ``up[a]`` says a <= v), which makes comparability O(1) and
up-set iteration cheap even for a few thousand elements.

The Mobius function is computed per source over its up-set with the
standard recursion mu(a, a) = 1, mu(a, v) = -sum of mu(a, r) over
a <= r < v, and memoized.  Rows are immutable once computed, so a
duplicated computation under concurrent access is harmless.
"""

from __future__ import annotations

from typing import NamedTuple


class CycleDetected(ValueError):
    """The cover relation has a directed cycle."""


class NotGraded(ValueError):
    """Some cover jumps more than one rank level."""


class NotComparable(ValueError):
    """interval(a, b) requires a <= b."""


class NoBottom(ValueError):
    """The poset has no unique minimum element."""


class MobiusTable(NamedTuple):
    """Mobius values from one source: ``values[v]`` is mu(source, v).

    Only elements above the source appear; values[source] == 1 and for
    every v > source the values over [source, v] sum to zero.
    """

    source: int
    values: dict


class Poset:
    """Immutable finite graded poset on elements 0..n-1 with opaque labels."""

    def __init__(self, labels, covers, ranks, up, down, bottom, top):
        self.labels = list(labels)
        self.n = len(self.labels)
        self.covers = covers  # sorted tuple of (lower, upper) index pairs
        self.ranks = ranks
        self._up = up
        self._down = down
        self.bottom = bottom
        self.top = top
        self._index = {label: i for i, label in enumerate(self.labels)}
        self._mobius_cache = {}

    def __repr__(self):
        return f"Poset(n={self.n}, covers={len(self.covers)})"

    def index_of(self, label):
        return self._index[label]

    def rank_of(self, a: int) -> int:
        return self.ranks[a]

    def leq(self, a: int, b: int) -> bool:
        """True iff b is reachable from a along covers (or a == b)."""
        return bool(self._up[a] >> b & 1)

    def up_set(self, a: int):
        """Indices of elements >= a, in rank order."""
        members = _bits(self._up[a])
        members.sort(key=self.ranks.__getitem__)
        return members

    def down_set(self, b: int):
        members = _bits(self._down[b])
        members.sort(key=self.ranks.__getitem__)
        return members

    def mobius(self, a: int) -> MobiusTable:
        """Mobius values from a over its up-set (zero entries included)."""
        cached = self._mobius_cache.get(a)
        if cached is None:
            values = dict(self._mobius_row(a))
            for v in _bits(self._up[a]):
                values.setdefault(v, 0)
            cached = MobiusTable(a, values)
            self._mobius_cache[a] = cached
        return cached

    def _mobius_row(self, a: int):
        """Nonzero (v, mu(a, v)) pairs over the up-set of a, uncached.

        Processes the up-set in rank order and keeps a bitset of the
        elements with nonzero value so far, so the inner sum touches
        only triples a <= r <= v with mu(a, r) != 0.
        """
        down = self._down
        vals = [0] * self.n
        vals[a] = 1
        nonzero = 1 << a
        out = [(a, 1)]
        for v in self.up_set(a):
            if v == a:
                continue
            mask = nonzero & down[v]
            total = 0
            while mask:
                low = mask & -mask
                total += vals[low.bit_length() - 1]
                mask ^= low
            if total:
                vals[v] = -total
                nonzero |= 1 << v
                out.append((v, -total))
        return out

    def interval(self, a: int, b: int) -> "Poset":
        """The induced sub-poset on {r : a <= r <= b}, ranks re-based at a.

        Materialized as an independent Poset; raises NotComparable when
        a is not below b.
        """
        if not self.leq(a, b):
            raise NotComparable(f"elements {a} and {b} are not comparable")
        mask = self._up[a] & self._down[b]
        members = _bits(mask)
        position = {v: i for i, v in enumerate(members)}
        labels = [self.labels[v] for v in members]
        covers = [
            (position[lo], position[hi])
            for lo, hi in self.covers
            if mask >> lo & 1 and mask >> hi & 1
        ]
        return build_poset(labels, covers)

    def to_dot(self, label=None) -> str:
        """Hasse diagram as a DOT digraph, ranks as node attributes."""
        if label is None:
            label = str
        lines = ["digraph hasse {"]
        for i in range(self.n):
            lines.append(f'  "{label(self.labels[i])}" [rank={self.ranks[i]}];')
        for lo, hi in self.covers:
            lines.append(
                f'  "{label(self.labels[lo])}" -> "{label(self.labels[hi])}";'
            )
        lines.append("}")
        return "\n".join(lines)


def _bits(mask: int):
    """Indices of the set bits of mask, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def build_poset(labels, covers) -> Poset:
    """Build a graded poset from labels and cover pairs.

    Rank is the longest-path distance from the minimal elements; every
    cover must then raise rank by exactly one (NotGraded otherwise).
    Raises CycleDetected if the cover digraph is not a DAG.
    """
    n = len(labels)
    covers = sorted(set((int(a), int(b)) for a, b in covers))
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"cover ({a},{b}) references a missing element")
        if a == b:
            raise CycleDetected(f"self-cover at element {a}")

    upper = [[] for _ in range(n)]
    indegree = [0] * n
    for a, b in covers:
        upper[a].append(b)
        indegree[b] += 1

    # Kahn topological sort; shortfall means a cycle.
    order = [v for v in range(n) if indegree[v] == 0]
    remaining = indegree[:]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for w in upper[v]:
            remaining[w] -= 1
            if remaining[w] == 0:
                order.append(w)
    if len(order) != n:
        raise CycleDetected("cover relation contains a directed cycle")

    ranks = [0] * n
    for v in order:
        for w in upper[v]:
            if ranks[v] + 1 > ranks[w]:
                ranks[w] = ranks[v] + 1
    for a, b in covers:
        if ranks[b] != ranks[a] + 1:
            raise NotGraded(
                f"cover ({a},{b}) spans ranks {ranks[a]}..{ranks[b]}"
            )

    up = [1 << v for v in range(n)]
    for v in reversed(order):
        acc = up[v]
        for w in upper[v]:
            acc |= up[w]
        up[v] = acc
    lower = [[] for _ in range(n)]
    for a, b in covers:
        lower[b].append(a)
    down = [0] * n
    for v in order:
        acc = 1 << v
        for u in lower[v]:
            acc |= down[u]
        down[v] = acc

    minimal = [v for v in range(n) if not lower[v]]
    maximal = [v for v in range(n) if not upper[v]]
    bottom = minimal[0] if len(minimal) == 1 else None
    top = maximal[0] if len(maximal) == 1 else None
    return Poset(labels, tuple(covers), tuple(ranks), up, down, bottom, top)


def direct_product(p: Poset, q: Poset) -> Poset:
    """Direct product: pairs ordered componentwise, ranks add.

    Labels are (label_p, label_q) pairs; covers change one coordinate
    by a cover and fix the other.
    """
    labels = [(lp, lq) for lp in p.labels for lq in q.labels]

    def idx(i, j):
        return i * q.n + j

    covers = []
    for a, b in p.covers:
        for j in range(q.n):
            covers.append((idx(a, j), idx(b, j)))
    for i in range(p.n):
        for a, b in q.covers:
            covers.append((idx(i, a), idx(i, b)))
    return build_poset(labels, covers)


def check_order_isomorphism(p: Poset, q: Poset, mapping) -> bool:
    """True iff mapping is a bijection with a <= b exactly when f(a) <= f(b).

    ``mapping`` maps p-indices to q-indices (list or dict, total on p).
    """
    if p.n != q.n:
        return False
    image = [None] * p.n
    seen = set()
    for a in range(p.n):
        fa = mapping[a]
        if fa is None or not 0 <= fa < q.n or fa in seen:
            return False
        seen.add(fa)
        image[a] = fa
    for a in range(p.n):
        mapped = 0
        for b in _bits(p._up[a]):
            mapped |= 1 << image[b]
        if mapped != q._up[image[a]]:
            return False
    return True
