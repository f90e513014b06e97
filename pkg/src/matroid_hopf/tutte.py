"""Tutte polynomial routes and the loop/coloop/nonseparating recursion Q."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .matroid import (
    MAX_CANONICAL,
    Matroid,
    MatroidError,
    canonical,
    coloops,
    contract,
    delete,
    dual,
    elements,
    loops,
    popcount,
    subsets,
)
from .memo import Memo
from .poly import A, B, ONE, X, Y, Poly

MAX_SUBSET_SCAN = 20

# Element chooser for the recursions: receives the sorted candidate labels.
Chooser = Callable[[list], int]

_memo = Memo("tutte")


def clear_memo() -> None:
    _memo.clear()


def _cached(kind, m: Matroid, compute, chooser):
    if chooser is not None or m.size > MAX_CANONICAL:
        return compute()
    return _memo.get_or_compute((kind, canonical(m)), compute)


def corank_nullity_counts(m: Matroid) -> Counter:
    """Counter of (r(E) - r(A), |A| - r(A)) over all subsets A of E."""
    if m.size > MAX_SUBSET_SCAN:
        raise MatroidError(f"subset expansion limited to {MAX_SUBSET_SCAN} elements, got {m.size}")
    r_e = m.rank
    counts: Counter = Counter()
    for a in subsets(m.ground):
        r_a = max(popcount(b & a) for b in m.bases)
        counts[(r_e - r_a, popcount(a) - r_a)] += 1
    return counts


def tutte_subset(m: Matroid) -> Poly:
    total = Poly()
    xm, ym = X - 1, Y - 1
    for (i, j), c in corank_nullity_counts(m).items():
        total = total + c * xm**i * ym**j
    return total


def tutte_uniform(k: int, n: int) -> Poly:
    if not 0 <= k <= n:
        raise MatroidError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    total = Poly()
    for i in range(k + 1):
        total = total + comb(n, i) * (X - 1) ** (k - i)
    for i in range(k + 1, n + 1):
        total = total + comb(n, i) * (Y - 1) ** (i - k)
    return total


def tutte_delcon(m: Matroid, choose: Optional[Chooser] = None) -> Poly:
    """Deletion-contraction on a nonseparating element.

    Without ``choose`` the smallest such label is used and results are
    cached per isomorphism class; a custom chooser disables the cache.
    """

    def compute():
        lp, cl = loops(m), coloops(m)
        free = elements(m.ground & ~(lp | cl))
        if not free:
            return X ** popcount(cl) * Y ** popcount(lp)
        e = free[0] if choose is None else choose(free)
        bit = 1 << e
        return tutte_delcon(delete(m, bit), choose) + tutte_delcon(contract(m, bit), choose)

    return _cached("delcon", m, compute, choose)


def tutte_dual_check(m: Matroid) -> bool:
    return tutte_subset(m).swap_xy() == tutte_subset(dual(m))


def scaled_tutte(m: Matroid) -> Poly:
    """a^n(M) b^r(M) T_M(x/b, y/a), expanded without denominators."""
    r_e, n_e = m.rank, m.nullity
    xb, ya = X - B, Y - A
    total = Poly()
    for (i, j), c in corank_nullity_counts(m).items():
        r_a = r_e - i
        total = total + c * xb**i * B**r_a * ya**j * A ** (n_e - j)
    return total


@dataclass(frozen=True)
class QSpec:
    """Weights of the recursion: coloop factor, loop factor, deletion and contraction weights."""

    x: Poly = X
    y: Poly = Y
    a: Poly = A
    b: Poly = B


DEFAULT_Q = QSpec()


def recipe_Q(m: Matroid, choose: Optional[Chooser] = None, spec: QSpec = DEFAULT_Q) -> Poly:
    """Evaluate Q by the coloop/loop/nonseparating rules, with Q(empty) = 1."""

    def compute():
        if m.is_empty:
            return ONE
        labels = m.labels()
        e = labels[0] if choose is None else choose(labels)
        bit = 1 << e
        if all(b & bit for b in m.bases):
            return spec.x * recipe_Q(delete(m, bit), choose, spec)
        if not any(b & bit for b in m.bases):
            return spec.y * recipe_Q(contract(m, bit), choose, spec)
        return spec.a * recipe_Q(delete(m, bit), choose, spec) + spec.b * recipe_Q(
            contract(m, bit), choose, spec
        )

    return _cached(("recipe", spec), m, compute, choose)
