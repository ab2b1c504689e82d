"""
Bundled reference list of the 58 pairs (v, w) in S_4 whose antidiagonal
degeneration is toric.

The list is vendored so that classification runs can be diffed against it
offline.  The ``starred`` column preserves an auxiliary marker carried by
the reference tabulation (pairs whose verdict is not determined by a unique
pipe-dream labelling); it plays no role in the comparison itself.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .perms import Perm, parse_perm

_TABLE1_CSV = """\
v,w,starred
1234,1423,0
2314,4312,0
1234,1243,0
1234,1432,0
2314,4321,0
1234,1324,1
1234,3124,0
2341,4231,1
1234,2134,0
1234,3214,0
2341,4321,0
1234,2143,0
1234,4123,0
3124,4123,0
1243,2143,1
1234,4132,0
3124,4132,0
1342,1432,1
1234,4213,0
3124,4213,0
1423,1432,1
1234,4312,0
3124,4312,0
2134,2143,0
1234,4321,0
3124,4321,0
2314,3214,0
1324,1423,1
3142,4132,0
2341,2431,1
1324,1432,1
3214,4213,0
2341,3241,1
2134,3124,0
3214,4312,0
3124,3214,0
2134,3214,0
3214,4321,0
3412,3421,1
2134,4123,0
3241,4231,1
3412,4312,0
2134,4132,0
3241,4321,0
3421,4321,0
2134,4213,0
4123,4312,0
4123,4132,0
2134,4312,0
4123,4321,0
4123,4213,0
2134,4321,0
4213,4312,0
4231,4321,1
2314,2413,0
4213,4321,0
4312,4321,0
2314,4213,0
"""


class Table1Row(NamedTuple):
    v: Perm
    w: Perm
    starred: bool


@lru_cache(maxsize=None)
def table1_rows() -> tuple[Table1Row, ...]:
    rows = []
    for line in _TABLE1_CSV.strip().splitlines()[1:]:
        v, w, starred = line.split(",")
        rows.append(Table1Row(parse_perm(v), parse_perm(w), starred == "1"))
    return tuple(rows)


def table1_pairs() -> frozenset[tuple[Perm, Perm]]:
    return frozenset((r.v, r.w) for r in table1_rows())


class Table1Comparison(NamedTuple):
    covered: tuple[tuple[Perm, Perm], ...]
    missing: tuple[tuple[Perm, Perm], ...]
    surplus: tuple[tuple[Perm, Perm], ...]


def compare_with_table1(verdict_true_pairs) -> Table1Comparison:
    """Diff a set of verdict-true pairs against the bundled list.

    Surplus pairs (true verdicts absent from the list) are informational;
    missing pairs mean the reference list was not reproduced.
    """
    verdicts = set(verdict_true_pairs)
    reference = table1_pairs()
    covered = tuple(sorted(reference & verdicts))
    missing = tuple(sorted(reference - verdicts))
    surplus = tuple(sorted(verdicts - reference))
    return Table1Comparison(covered, missing, surplus)
