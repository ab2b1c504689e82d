"""
The diagonal and antidiagonal monomial maps on flag coordinates, the
degree-two kernel they induce, restriction of that kernel to a Richardson
variety, and the resulting monomial-freeness classification.

Every coordinate P_J maps to a single monomial in a grid of variables
x_{i,j} (rows 1..n-1, columns 1..n):

    diagonal:       P_J -> x_{1,j_1} x_{2,j_2} ... x_{t,j_t},
    antidiagonal:   P_J -> x_{1,j_t} x_{2,j_{t-1}} ... x_{t,j_1},

for J = {j_1 < ... < j_t}.  The diagonal map is the initial-term map of the
weight matrix M[i][j] = (i-1)(n-j+1); the antidiagonal map is used directly,
without constructing its weight matrix.

The degree-two kernel is computed by grouping all degree-two monomials in
the P variables by image and pairing every member of a class with the
class's canonical representative (diagonal: the row-sorted tableau;
antidiagonal: the lexicographically least member).  Restricting a kernel
binomial to the surviving coordinates T of a Richardson variety either
keeps it (both monomials survive), turns it into a monomial witness
(exactly one survives), or kills it.  The restricted ideal is generated by
the surviving binomials and witnesses, so it is monomial-free exactly when
no witness occurs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .perms import (
    BudgetError,
    Perm,
    SWEEP_MAX_N,
    Subset,
    all_perms,
    all_subsets,
    bruhat_leq,
    check_same_n,
    enumerate_T,
    perm_str,
    subset_str,
)
from .tableaux import Tableau, row_sort, sort_columns, tableau_str

#: Cap on |T|^d before enumerating degree-d monomials.
MONOMIAL_BUDGET = 2_000_000


class TermOrder(Enum):
    DIAGONAL = "diagonal"
    ANTIDIAGONAL = "antidiagonal"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


Cell = tuple[int, int]  # (grid row, grid column), both 1-based


def weight_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """The (n-1) x n weight matrix with entries (i-1)(n-j+1), 1-indexed.

    >>> weight_matrix(5)[1]
    (5, 4, 3, 2, 1)
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    return tuple(
        tuple((i - 1) * (n - j + 1) for j in range(1, n + 1)) for i in range(1, n)
    )


def initial_term(J: Subset, order: TermOrder) -> tuple[Cell, ...]:
    """Grid cells of the image of P_J, one per row 1..|J|."""
    t = len(J)
    if order is TermOrder.DIAGONAL:
        return tuple((r + 1, J[r]) for r in range(t))
    return tuple((r + 1, J[t - 1 - r]) for r in range(t))


def plucker_weight(J: Subset, n: int) -> int:
    """Weight of the coordinate P_J under the diagonal weight matrix.

    >>> plucker_weight((1, 3, 5), 5)
    5
    """
    if J and J[-1] > n:
        raise ValueError(f"subset {J!r} does not fit inside [{n}]")
    return sum(r * (n - j + 1) for r, j in enumerate(J))


def weight_vector_lines(n: int) -> list[str]:
    """Weight export, one line 'J,weight' per coordinate, canonical order."""
    return [f"{subset_str(J)},{plucker_weight(J, n)}" for J in all_subsets(n)]


def phi_image(cols, order: TermOrder) -> tuple[Cell, ...]:
    """Image of a product of coordinates as a sorted multiset of grid cells."""
    cells: list[Cell] = []
    for J in cols:
        cells.extend(initial_term(tuple(J), order))
    cells.sort()
    return tuple(cells)


def exponent_dict(cols, order: TermOrder) -> dict[Cell, int]:
    """Image of a product of coordinates as a cell -> exponent map."""
    out: dict[Cell, int] = {}
    for cell in phi_image(cols, order):
        out[cell] = out.get(cell, 0) + 1
    return out


# ---------------------------------------------------------------------------
# the degree-two kernel


class KernelBinomial(NamedTuple):
    """An image-equal pair of degree-two monomials; rhs is the canonical one."""

    lhs: Tableau
    rhs: Tableau

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"{monomial_str(self.lhs)} ~ {monomial_str(self.rhs)}"


def monomial_str(cols) -> str:
    return "*".join("P" + subset_str(tuple(c)) for c in cols)


def _monomial_key(cols) -> tuple[str, ...]:
    return tuple(subset_str(c) for c in cols)


@lru_cache(maxsize=None)
def degree2_kernel_generators(n: int, order: TermOrder) -> tuple[KernelBinomial, ...]:
    """Generators of the full degree-two kernel of the monomial map.

    Every class member is paired with the canonical representative, so the
    result is a superset of any minimal generating set; completeness of the
    restriction test depends on that.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    subs = all_subsets(n)
    classes: dict[tuple[Cell, ...], list[Tableau]] = {}
    for a in range(len(subs)):
        for b in range(a, len(subs)):
            m = sort_columns((subs[a], subs[b]))
            classes.setdefault(phi_image(m, order), []).append(m)
    gens: list[KernelBinomial] = []
    for image in sorted(classes):
        members = sorted(classes[image], key=_monomial_key)
        if len(members) < 2:
            continue
        if order is TermOrder.DIAGONAL:
            canon = row_sort(members[0])
            if canon not in members:
                raise RuntimeError(
                    f"row-sorted form {tableau_str(canon)} escaped its image class"
                )
        else:
            canon = members[0]
        gens.extend(KernelBinomial(m, canon) for m in members if m != canon)
    return tuple(gens)


# ---------------------------------------------------------------------------
# restriction to a Richardson variety


class MonomialWitness(NamedTuple):
    generator: KernelBinomial
    surviving: Tableau
    vanished: Tableau
    missing: tuple[Subset, ...]  # columns of the vanished term outside T


@dataclass(frozen=True)
class RestrictionReport:
    v: Perm
    w: Perm
    order: TermOrder
    survivors: tuple[KernelBinomial, ...]
    witnesses: tuple[MonomialWitness, ...]
    vanished_count: int

    @property
    def monomial_free(self) -> bool:
        return not self.witnesses


def restrict(gens, v: Perm, w: Perm, order: TermOrder) -> RestrictionReport:
    """Classify every generator after dropping coordinates outside T."""
    surviving = frozenset(enumerate_T(v, w))
    keep: list[KernelBinomial] = []
    witnesses: list[MonomialWitness] = []
    vanished = 0
    for g in gens:
        lhs_in = all(c in surviving for c in g.lhs)
        rhs_in = all(c in surviving for c in g.rhs)
        if lhs_in and rhs_in:
            keep.append(g)
        elif lhs_in or rhs_in:
            alive, dead = (g.lhs, g.rhs) if lhs_in else (g.rhs, g.lhs)
            missing = tuple(c for c in dead if c not in surviving)
            witnesses.append(MonomialWitness(g, alive, dead, missing))
        else:
            vanished += 1
    return RestrictionReport(v, w, order, tuple(keep), tuple(witnesses), vanished)


def restriction_report(v: Perm, w: Perm, order: TermOrder) -> RestrictionReport:
    """Restriction of the cached degree-two kernel to the pair (v, w)."""
    check_same_n(v, w)
    return restrict(degree2_kernel_generators(len(v), order), v, w, order)


def is_monomial_free(v: Perm, w: Perm, order: TermOrder) -> bool:
    """True iff no kernel generator restricts to a monomial on (v, w)."""
    check_same_n(v, w)
    surviving = frozenset(enumerate_T(v, w))
    for g in degree2_kernel_generators(len(v), order):
        lhs_in = all(c in surviving for c in g.lhs)
        rhs_in = all(c in surviving for c in g.rhs)
        if lhs_in != rhs_in:
            return False
    return True


# ---------------------------------------------------------------------------
# classification sweeps


class ClassifyRecord(NamedTuple):
    v: Perm
    w: Perm
    monomial_free: bool
    num_witnesses: int


def _classify_pair(args) -> ClassifyRecord:
    v, w, order = args
    report = restriction_report(v, w, order)
    return ClassifyRecord(v, w, report.monomial_free, len(report.witnesses))


def classify_all(
    n: int, order: TermOrder, force: bool = False, workers: int = 1
) -> list[ClassifyRecord]:
    """Monomial-freeness verdicts for all Bruhat-comparable pairs in S_n.

    Canonically ordered by (v, w); deterministic for any worker count.
    """
    if n > SWEEP_MAX_N and not force:
        raise BudgetError(
            f"classification sweep at n={n} exceeds the default bound "
            f"{SWEEP_MAX_N}; pass force=True to override"
        )
    perms = all_perms(n)
    pairs = [(v, w, order) for v in perms for w in perms if bruhat_leq(v, w)]
    if workers <= 1:
        return [_classify_pair(p) for p in pairs]
    import multiprocessing

    degree2_kernel_generators(n, order)  # warm the parent cache before forking
    with multiprocessing.Pool(workers) as pool:
        return list(pool.map(_classify_pair, pairs, chunksize=64))


def classification_csv(records, order: TermOrder) -> str:
    lines = ["v,w,order,monomial_free,num_witnesses"]
    for r in records:
        lines.append(
            f"{perm_str(r.v)},{perm_str(r.w)},{order.value},"
            f"{int(r.monomial_free)},{r.num_witnesses}"
        )
    return "\n".join(lines) + "\n"


def witness_detail(report: RestrictionReport) -> dict:
    """JSON-ready detail of a restriction report."""
    return {
        "v": perm_str(report.v),
        "w": perm_str(report.w),
        "order": report.order.value,
        "monomial_free": report.monomial_free,
        "survivors": [
            {"lhs": monomial_str(g.lhs), "rhs": monomial_str(g.rhs)}
            for g in report.survivors
        ],
        "witnesses": [
            {
                "generator": {
                    "lhs": monomial_str(wit.generator.lhs),
                    "rhs": monomial_str(wit.generator.rhs),
                },
                "surviving_term": monomial_str(wit.surviving),
                "vanished_term": monomial_str(wit.vanished),
                "vanishing_subsets": [subset_str(c) for c in wit.missing],
            }
            for wit in report.witnesses
        ],
        "vanished_count": report.vanished_count,
    }


# ---------------------------------------------------------------------------
# Hilbert-style counts of the restricted kernel


def kernel_hilbert_dim(
    v: Perm,
    w: Perm,
    d: int,
    order: TermOrder,
    budget: int | None = MONOMIAL_BUDGET,
) -> int:
    """Number of distinct images of degree-d monomials in surviving
    coordinates.

    For d = 1 this is |T|; for the diagonal order on family pairs it matches
    the semi-standard tableau count, which the test suite checks rather than
    assumes.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    cols = enumerate_T(v, w)
    if budget is not None and len(cols) ** d > budget:
        raise BudgetError(f"|T|^d = {len(cols)}^{d} exceeds budget {budget}")
    images = {
        phi_image(m, order)
        for m in itertools.combinations_with_replacement(cols, d)
    }
    return len(images)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
