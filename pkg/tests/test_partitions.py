import itertools

import pytest
from hypothesis import given, strategies as st

from kgroth.partitions import (
    AT_LEAST,
    AT_MOST,
    EXACT,
    INF,
    Partition,
    StripCoordinates,
    addable_rows,
    contains,
    coords,
    is_horizontal_strip,
    join,
    meet,
    parse_partition,
    partitions,
    partitions_up_to,
    rotated_complement,
    shape,
    skew_stats,
    strips,
    subpartitions,
    superpartitions,
)

from oracles import all_partitions, cells, is_hstrip, strips_brute

P = Partition
SMALL = partitions_up_to(6)


@st.composite
def partitions_st(draw, max_size=8):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(all_partitions(n)))


def test_canonical_form():
    assert P([3, 1, 0, 0]) == P([3, 1])
    assert P([]) == P()
    assert len(P([2, 0])) == 1
    with pytest.raises(ValueError):
        P([1, 2])
    with pytest.raises(ValueError):
        P([2, -1])


def test_partition_counts():
    assert [len(partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for n in range(8):
        assert set(partitions(n)) == set(all_partitions(n))


def test_conjugate():
    assert P([3, 1]).conjugate() == P([2, 1, 1])
    assert P().conjugate() == P()
    for lam in SMALL:
        assert lam.conjugate().conjugate() == lam


@pytest.mark.parametrize(
    "mu, lam, expected",
    [((2, 1), (1, 1), True), ((3,), (1, 1), False), ((2, 2), (2, 2), True), ((), (), True), ((1,), (), True)],
)
def test_contains(mu, lam, expected):
    assert contains(P(mu), P(lam)) is expected


def test_meet_join_examples():
    assert meet(P([3, 1]), P([2, 2])) == P([2, 1])
    assert join(P([3, 1]), P([2, 2])) == P([3, 2])
    lam = P([4, 2, 1])
    assert meet(lam, P()) == P()
    assert join(lam, P()) == lam


def test_lattice_laws_exhaustive():
    parts = partitions_up_to(8)
    for x, y in itertools.product(parts, repeat=2):
        assert meet(x, x) == x and join(x, x) == x
        assert meet(x, y) == meet(y, x)
        assert join(x, y) == join(y, x)
        assert meet(x, join(x, y)) == x
        assert join(x, meet(x, y)) == x
        assert contains(x, meet(x, y)) and contains(join(x, y), x)


def test_lattice_associativity_exhaustive():
    parts = partitions_up_to(8)
    for x, y, z in itertools.product(parts, repeat=3):
        assert meet(meet(x, y), z) == meet(x, meet(y, z))
        assert join(join(x, y), z) == join(x, join(y, z))


def test_horizontal_strip_examples():
    assert is_horizontal_strip(P([1]), P([2, 1]))
    assert not is_horizontal_strip(P([1]), P([2, 2]))
    assert is_horizontal_strip(P([3, 1]), P([3, 1]))
    assert not is_horizontal_strip(P([2]), P([1, 1]))


@given(partitions_st(), partitions_st())
def test_horizontal_strip_matches_column_count(lam, mu):
    assert is_horizontal_strip(lam, mu) == is_hstrip(lam, mu)


def test_addable_rows():
    assert addable_rows(P([3, 1])) == [(1, INF), (2, 2), (3, 1)]
    assert addable_rows(P()) == [(1, INF)]
    assert addable_rows(P([2, 2])) == [(1, INF), (3, 2)]


def test_strip_examples():
    assert strips(P([1]), EXACT, 1) == {P([2]), P([1, 1])}
    assert strips(P([1]), AT_MOST, 1) == {P([1]), P([2]), P([1, 1])}
    for a in range(5):
        assert strips(P(), EXACT, a) == {P([a] if a else [])}


@pytest.mark.parametrize("lam", SMALL)
def test_strips_match_brute_force(lam):
    for a in range(5):
        assert strips(lam, EXACT, a) == strips_brute(lam, [a])
        assert strips(lam, AT_MOST, a) == strips_brute(lam, range(a + 1))
        t = len(addable_rows(lam)) - 1
        capped = {mu for mu in strips_brute(lam, range(a, a + t + sum(lam) + 2))
                  if mu.part(0) - lam.part(0) <= a + t}
        assert strips(lam, AT_LEAST, a) == capped


def test_coords_examples():
    c = coords(P([3, 1]), P([4, 3]))
    assert c.values == (1, 2, 0)
    assert [r for r, _ in c.rows] == [1, 2, 3]
    zero = StripCoordinates(P([3, 1]), tuple(addable_rows(P([3, 1]))), (0, 0, 0))
    assert shape(zero) == P([3, 1])
    c = coords(P([1]), P([2, 1]))
    assert c.values == (1, 1) and [r for r, _ in c.rows] == [1, 2]
    with pytest.raises(ValueError):
        coords(P([1]), P([2, 2]))


@pytest.mark.parametrize("lam", SMALL)
def test_coords_bijection(lam):
    rows = tuple(addable_rows(lam))
    for a in range(5):
        box = set()
        for b in itertools.product(*[range(min(n, a) + 1) for _, n in rows]):
            if sum(b) <= a:
                box.add(b)
        seen = set()
        for mu in strips(lam, AT_MOST, a):
            c = coords(lam, mu)
            assert shape(c) == mu
            seen.add(c.values)
        assert seen == box


def test_skew_stats_examples():
    st_ = skew_stats(P([3, 1]), P([4, 3]))
    assert (st_.size, st_.rows, st_.co_rows) == (3, 2, 1)
    st_ = skew_stats(P([1]), P([2, 1]))
    assert (st_.size, st_.rows, st_.co_rows) == (2, 2, 0)
    lam = P([4, 2, 2, 1])
    st_ = skew_stats(lam, lam)
    assert (st_.size, st_.rows, st_.co_rows) == (0, 0, len(addable_rows(lam)) - 1)
    with pytest.raises(ValueError):
        skew_stats(P([1]), P([1, 1, 1]))


def _boxwise_stats(lam, mu):
    new = set(cells(mu)) - set(cells(lam))
    bar = [(r - 1, c) for r, c in cells(mu) if r >= 1]
    left = set(cells(lam)) - set(bar)
    return len(new), len({r for r, _ in new}), len({r for r, _ in left})


@pytest.mark.parametrize("lam", SMALL)
def test_skew_stats_boxwise_and_coordinates(lam):
    for mu in strips(lam, AT_MOST, 4):
        s = skew_stats(lam, mu)
        assert (s.size, s.rows, s.co_rows) == _boxwise_stats(lam, mu)
        c = coords(lam, mu)
        caps = [n for _, n in c.rows]
        assert s.size == sum(c.values)
        assert s.rows == sum(1 for b in c.values if b > 0)
        assert s.co_rows == sum(1 for b, n in zip(c.values[1:], caps[1:]) if b < n)


@pytest.mark.parametrize("lam", SMALL)
def test_at_most_strips_closed_under_meet(lam):
    for a in range(1, 5):
        fam = strips(lam, AT_MOST, a)
        for x, y in itertools.product(fam, repeat=2):
            assert meet(x, y) in fam


def test_rotated_complement():
    assert rotated_complement(P([2, 1]), 2, 3) == P([2, 1])
    assert rotated_complement(P(), 2, 3) == P([3, 3])
    assert rotated_complement(P([3, 3]), 2, 3) == P()
    with pytest.raises(ValueError):
        rotated_complement(P([4]), 2, 3)
    with pytest.raises(ValueError):
        rotated_complement(P([1, 1, 1]), 2, 3)


@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_rotated_complement_involution(k, m, data):
    fitting = [mu for mu in partitions_up_to(k * m) if len(mu) <= k and (not mu or mu[0] <= m)]
    mu = data.draw(st.sampled_from(fitting))
    mt = rotated_complement(mu, k, m)
    assert rotated_complement(mt, k, m) == mu
    assert mu.size + mt.size == k * m


def test_subpartitions_and_superpartitions():
    assert subpartitions(P([2, 1])) == [P(), P([1]), P([1, 1]), P([2]), P([2, 1])]
    assert superpartitions(P(), 2) == [P(), P([1]), P([1, 1]), P([2])]
    for lam in partitions_up_to(4):
        assert set(subpartitions(lam)) == {mu for mu in partitions_up_to(4) if contains(lam, mu)}


def test_parse_partition():
    assert parse_partition("3,1") == P([3, 1])
    assert parse_partition("") == P()
    assert parse_partition("0") == P()
    assert parse_partition("[2,2]") == P([2, 2])
    assert P([3, 1]).to_json() == [3, 1]
