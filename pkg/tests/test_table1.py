from richtoric.perms import bruhat_leq
from richtoric.table1 import compare_with_table1, table1_pairs, table1_rows


def test_fixture_shape():
    rows = table1_rows()
    assert len(rows) == 58
    assert len(table1_pairs()) == 58  # no duplicate pairs
    assert sum(1 for r in rows if r.starred) == 12


def test_fixture_pairs_are_strictly_comparable():
    for r in table1_rows():
        assert r.v != r.w
        assert bruhat_leq(r.v, r.w)


def test_known_rows():
    rows = {(r.v, r.w): r.starred for r in table1_rows()}
    assert rows[((2, 3, 1, 4), (4, 3, 1, 2))] is False
    assert rows[((2, 3, 4, 1), (4, 2, 3, 1))] is True  # the worked polytope pair
    assert ((1, 2, 3, 4), (1, 2, 3, 4)) not in rows


def test_comparison_buckets():
    reference = sorted(table1_pairs())
    # drop two, add one fake
    verdicts = set(reference[2:]) | {((1, 2, 3, 4), (1, 2, 3, 4))}
    cmp = compare_with_table1(verdicts)
    assert len(cmp.covered) == 56
    assert cmp.missing == tuple(reference[:2])
    assert cmp.surplus == (((1, 2, 3, 4), (1, 2, 3, 4)),)
