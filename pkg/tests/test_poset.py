import random

import pytest

from shuflat.lattices import build_shuffle_lattice
from shuflat.poset import (
    CycleDetected,
    NotComparable,
    NotGraded,
    build_poset,
    check_order_isomorphism,
    direct_product,
)


def chain(length):
    return build_poset(list(range(length + 1)), [(i, i + 1) for i in range(length)])


def boolean_2():
    # product of two 2-chains
    return direct_product(chain(1), chain(1))


def test_build_chain_and_singleton():
    p = chain(1)
    assert p.ranks == (0, 1)
    assert p.bottom == 0 and p.top == 1
    single = build_poset(["only"], [])
    assert single.n == 1 and single.ranks == (0,)
    assert single.bottom == single.top == 0


def test_build_cycle_detected():
    with pytest.raises(CycleDetected):
        build_poset([0, 1], [(0, 1), (1, 0)])
    with pytest.raises(CycleDetected):
        build_poset([0], [(0, 0)])


def test_build_not_graded():
    # 0 < 1 < 2 plus a cover jumping from 0 straight to 2
    with pytest.raises(NotGraded):
        build_poset([0, 1, 2], [(0, 1), (1, 2), (0, 2)])


def test_leq():
    p = chain(1)
    assert p.leq(0, 1)
    assert not p.leq(1, 0)
    assert p.leq(0, 0)
    anti = build_poset([0, 1], [])
    assert not anti.leq(0, 1)


def test_mobius_small():
    p = chain(1)
    assert p.mobius(0).values == {0: 1, 1: -1}
    b2 = boolean_2()
    table = b2.mobius(b2.bottom)
    assert table.values[b2.bottom] == 1
    assert table.values[b2.top] == 1
    assert sorted(table.values.values()) == [-1, -1, 1, 1]
    for a in range(b2.n):
        assert b2.mobius(a).values[a] == 1


def test_mobius_row_sums_vanish():
    p = build_shuffle_lattice(2, 2)
    for a in range(p.n):
        table = p.mobius(a).values
        for b in p.up_set(a):
            total = sum(
                table[r] for r in p.up_set(a) if p.leq(r, b)
            )
            assert total == (1 if b == a else 0), (a, b)


def test_mobius_dual_recursion():
    # mu(a, v) = -sum of mu(r, v) over a < r <= v, checked independently
    p = build_shuffle_lattice(1, 2)
    rows = {a: p.mobius(a).values for a in range(p.n)}
    for a in range(p.n):
        for v in p.up_set(a):
            if v == a:
                continue
            total = sum(rows[r][v] for r in p.up_set(a) if p.leq(r, v) and r != a)
            assert rows[a][v] == -total


def test_interval():
    p = chain(2)
    assert p.interval(0, 0).n == 1
    full = p.interval(0, 2)
    assert full.n == 3 and full.ranks == (0, 1, 2)
    with pytest.raises(NotComparable):
        build_poset([0, 1], []).interval(0, 1)


def test_interval_rebased_ranks():
    p = build_shuffle_lattice(1, 2)
    bottom_label = p.labels[p.bottom]
    top_label = p.labels[p.top]
    sub = p.interval(p.bottom, p.top)
    assert sub.n == p.n
    assert sorted(sub.ranks) == sorted(p.ranks)
    mid = p.interval(p.index_of(()), p.top)  # the empty word has rank 1
    assert min(mid.ranks) == 0
    assert max(mid.ranks) == max(p.ranks) - 1
    assert bottom_label not in mid.labels
    assert top_label in mid.labels


def test_direct_product_counts_and_ranks():
    p = build_shuffle_lattice(1, 1)
    q = build_shuffle_lattice(0, 1)
    prod = direct_product(p, q)
    assert prod.n == 5 * 2
    for i, (lp, lq) in enumerate(prod.labels):
        assert prod.ranks[i] == p.ranks[p.index_of(lp)] + q.ranks[q.index_of(lq)]

    b2 = boolean_2()
    assert sorted(b2.ranks) == [0, 1, 1, 2]

    single = build_poset(["*"], [])
    same = direct_product(single, p)
    mapping = [same.index_of(("*", lbl)) for lbl in p.labels]
    assert check_order_isomorphism(p, same, mapping)


def test_direct_product_mobius_multiplicative():
    # random small lattice pairs, all comparable pairs of the product
    rng = random.Random(7)
    small = [(m, n) for m in range(3) for n in range(3)]
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(4)]
    pairs.append(((1, 2), (1, 1)))
    for (m1, n1), (m2, n2) in pairs:
        p = build_shuffle_lattice(m1, n1)
        q = build_shuffle_lattice(m2, n2)
        prod = direct_product(p, q)
        for s in range(prod.n):
            sp, sq = divmod(s, q.n)
            table = prod.mobius(s).values
            p_table = p.mobius(sp).values
            q_table = q.mobius(sq).values
            for v, mu in table.items():
                vp, vq = divmod(v, q.n)
                assert mu == p_table.get(vp, 0) * q_table.get(vq, 0)


def test_check_order_isomorphism():
    p = chain(2)
    assert check_order_isomorphism(p, p, [0, 1, 2])
    anti = build_poset(["a", "b", "c"], [])
    assert not check_order_isomorphism(p, anti, [0, 1, 2])
    assert not check_order_isomorphism(p, p, [0, 0, 2])  # not a bijection
    b2 = boolean_2()
    assert not check_order_isomorphism(p, b2, [0, 1, 2])  # size mismatch


def test_to_dot():
    p = chain(1)
    dot = p.to_dot()
    assert dot.startswith("digraph hasse {")
    assert '"0" [rank=0];' in dot
    assert '"0" -> "1";' in dot
    assert dot.endswith("}")
