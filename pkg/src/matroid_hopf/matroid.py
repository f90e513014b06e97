"""Matroids as sorted bitmask basis families.

Element sets are ``int`` bitmasks over labels 0..31.  Minors keep the
original labels of surviving elements, so the ground set of a minor is
in general a sub-mask; labels are compacted only by :func:`canonical`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Iterable, Union

MAX_GROUND = 32
MAX_CANONICAL = 10
MAX_ENUMERATE = 6

ElementSet = Union[int, Iterable[int]]


class MatroidError(ValueError):
    """Raised for malformed matroid input or out-of-range arguments."""


def as_mask(s: ElementSet) -> int:
    if isinstance(s, int):
        if s < 0:
            raise MatroidError("element mask must be non-negative")
        return s
    m = 0
    for e in s:
        if not 0 <= e < MAX_GROUND:
            raise MatroidError(f"element label {e} outside 0..{MAX_GROUND - 1}")
        m |= 1 << e
    return m


def elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def subsets(mask: int):
    """All sub-masks of ``mask``, starting from 0 and increasing."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Matroid:
    ground: int
    bases: tuple

    @property
    def size(self) -> int:
        return popcount(self.ground)

    @property
    def rank(self) -> int:
        return popcount(self.bases[0])

    @property
    def nullity(self) -> int:
        return self.size - self.rank

    @property
    def is_empty(self) -> bool:
        return self.ground == 0

    def labels(self) -> list[int]:
        return elements(self.ground)

    def __str__(self) -> str:
        bs = ", ".join("{" + ",".join(map(str, elements(b))) + "}" for b in self.bases)
        return f"Matroid(E={{{','.join(map(str, self.labels()))}}}, r={self.rank}, bases=[{bs}])"


def _make(ground: int, bases: Iterable[int]) -> Matroid:
    # Internal constructor for families that are matroids by construction.
    return Matroid(ground, tuple(sorted(set(bases))))


def _exchange_violation(bases: list[int], bset: set[int]):
    for b1 in bases:
        for b2 in bases:
            if b1 == b2:
                continue
            only2 = b2 & ~b1
            for e in elements(b1 & ~b2):
                without = b1 & ~(1 << e)
                if not any((without | (1 << f)) in bset for f in elements(only2)):
                    return b1, b2, e
    return None


def _check_bases(ground: int, bases: list[int]) -> None:
    if not bases:
        raise MatroidError("basis family is empty")
    for b in bases:
        if b & ~ground:
            raise MatroidError(f"basis {elements(b)} is not contained in the ground set")
    sizes = {popcount(b) for b in bases}
    if len(sizes) != 1:
        raise MatroidError(f"bases have unequal cardinalities {sorted(sizes)}")
    bad = _exchange_violation(bases, set(bases))
    if bad is not None:
        b1, b2, e = bad
        raise MatroidError(
            f"basis exchange fails: removing {e} from {elements(b1)} admits no "
            f"replacement from {elements(b2)}"
        )


def _ground_mask(n: int) -> int:
    if not 0 <= n <= MAX_GROUND:
        raise MatroidError(f"ground set size must be in 0..{MAX_GROUND}, got {n}")
    return (1 << n) - 1


def from_bases(n: int, bases: Iterable[ElementSet]) -> Matroid:
    ground = _ground_mask(n)
    masks = sorted({as_mask(b) for b in bases})
    _check_bases(ground, masks)
    return Matroid(ground, tuple(masks))


def validate(m: Matroid) -> None:
    """Re-run the basis axioms on an existing matroid (raises MatroidError)."""
    if list(m.bases) != sorted(set(m.bases)):
        raise MatroidError("bases are not deduplicated and sorted")
    _check_bases(m.ground, list(m.bases))


def from_independent_sets(n: int, indeps: Iterable[ElementSet]) -> Matroid:
    ground = _ground_mask(n)
    family = {as_mask(i) for i in indeps}
    if not family:
        raise MatroidError("axiom I1 violated: the family of independent sets is empty")
    for i in family:
        if i & ~ground:
            raise MatroidError(f"independent set {elements(i)} is not contained in the ground set")
    for i in family:
        for e in elements(i):
            if i & ~(1 << e) not in family:
                raise MatroidError(
                    f"axiom I2 violated: {elements(i & ~(1 << e))} is a subset of "
                    f"{elements(i)} but is not independent"
                )
    by_size: dict[int, list[int]] = {}
    for i in family:
        by_size.setdefault(popcount(i), []).append(i)
    for k, bigger in by_size.items():
        for x in bigger:
            for y in by_size.get(k - 1, ()):
                if not any((y | (1 << e)) in family for e in elements(x & ~y)):
                    raise MatroidError(
                        f"axiom I3 violated: no element of {elements(x)} - {elements(y)} "
                        f"augments {elements(y)}"
                    )
    top = max(by_size)
    return Matroid(ground, tuple(sorted(by_size[top])))


def uniform(k: int, n: int) -> Matroid:
    if not 0 <= k <= n:
        raise MatroidError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    ground = _ground_mask(n)
    bases = [as_mask(c) for c in combinations(range(n), k)]
    return Matroid(ground, tuple(sorted(bases)))


def graphic(num_vertices: int, edges: list[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``i`` becomes element ``i``."""
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise MatroidError(f"edge ({u}, {v}) has a vertex outside 0..{num_vertices - 1}")
    m = len(edges)
    ground = _ground_mask(m)

    def is_forest(idx) -> bool:
        parent = list(range(num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in idx:
            ru, rv = find(edges[i][0]), find(edges[i][1])
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    # rank = number of vertices touched minus components, found greedily
    greedy = []
    for i in range(m):
        if is_forest(greedy + [i]):
            greedy.append(i)
    r = len(greedy)
    bases = [as_mask(c) for c in combinations(range(m), r) if is_forest(c)]
    return Matroid(ground, tuple(sorted(bases)))


# -- rank oracles -----------------------------------------------------------


def _check_subset(m: Matroid, a: int, what: str = "set") -> int:
    a = as_mask(a)
    if a & ~m.ground:
        raise MatroidError(f"{what} {elements(a)} is not contained in the ground set {m.labels()}")
    return a


def rank(m: Matroid, a: ElementSet) -> int:
    a = _check_subset(m, a)
    return max(popcount(b & a) for b in m.bases)


def nullity(m: Matroid, a: ElementSet) -> int:
    a = _check_subset(m, a)
    return popcount(a) - rank(m, a)


def _check_element(m: Matroid, e: int) -> int:
    if not (0 <= e < MAX_GROUND) or not (m.ground >> e) & 1:
        raise MatroidError(f"element {e} is not in the ground set {m.labels()}")
    return 1 << e


def is_loop(m: Matroid, e: int) -> bool:
    bit = _check_element(m, e)
    return all(not b & bit for b in m.bases)


def is_coloop(m: Matroid, e: int) -> bool:
    bit = _check_element(m, e)
    return all(b & bit for b in m.bases)


def loops(m: Matroid) -> int:
    union = 0
    for b in m.bases:
        union |= b
    return m.ground & ~union


def coloops(m: Matroid) -> int:
    inter = m.ground
    for b in m.bases:
        inter &= b
    return inter


# -- minors, duality, sums ----------------------------------------------------


def dual(m: Matroid) -> Matroid:
    return _make(m.ground, (m.ground & ~b for b in m.bases))


def delete(m: Matroid, t: ElementSet) -> Matroid:
    t = _check_subset(m, t)
    if not t:
        return m
    keep = m.ground & ~t
    trimmed = [b & keep for b in m.bases]
    top = max(popcount(b) for b in trimmed)
    return _make(keep, (b for b in trimmed if popcount(b) == top))


def contract(m: Matroid, t: ElementSet) -> Matroid:
    t = _check_subset(m, t)
    if not t:
        return m
    return dual(delete(dual(m), t))


def restrict(m: Matroid, t: ElementSet) -> Matroid:
    t = _check_subset(m, t)
    return delete(m, m.ground & ~t)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    shift = m1.ground.bit_length()
    if m2.ground.bit_length() + shift > MAX_GROUND:
        raise MatroidError(f"direct sum would need labels beyond {MAX_GROUND - 1}")
    ground = m1.ground | (m2.ground << shift)
    return _make(ground, (b1 | (b2 << shift) for b1 in m1.bases for b2 in m2.bases))


def relabel(m: Matroid, mapping: dict[int, int]) -> Matroid:
    """Apply an injective label map defined on the ground set."""

    def image(mask):
        out = 0
        for e in elements(mask):
            out |= 1 << mapping[e]
        return out

    return _make(image(m.ground), (image(b) for b in m.bases))


def compact(m: Matroid) -> Matroid:
    """Relabel the ground set to 0..k-1 preserving label order."""
    return relabel(m, {e: i for i, e in enumerate(m.labels())})


EMPTY = Matroid(0, (0,))


# -- isomorphism classes ------------------------------------------------------


@dataclass(frozen=True, order=True)
class IsoKey:
    """Canonical form of an isomorphism class: sizes plus minimal relabeled bases."""

    n: int
    rank: int
    bases: tuple

    @property
    def nullity(self) -> int:
        return self.n - self.rank

    def encode(self) -> bytes:
        width = max(1, (self.n + 7) // 8)
        payload = b"".join(b.to_bytes(width, "big") for b in self.bases)
        return bytes([self.n, self.rank]) + payload

    def matroid(self) -> Matroid:
        """The canonical representative on labels 0..n-1."""
        return Matroid((1 << self.n) - 1, self.bases)

    def is_uniform(self) -> bool:
        from math import comb

        return len(self.bases) == comb(self.n, self.rank)

    def __str__(self) -> str:
        if self.is_uniform():
            return f"U_{{{self.rank},{self.n}}}"
        bs = ",".join("{" + "".join(map(str, elements(b))) + "}" for b in self.bases)
        return f"M_{{{self.rank},{self.n}}}({bs})"


def _refine_colors(n: int, bases: tuple) -> list[int]:
    """Label-independent colour classes of elements 0..n-1 (colour refinement)."""
    count = [sum(1 for b in bases if b >> e & 1) for e in range(n)]
    pair = [[sum(1 for b in bases if b >> e & 1 and b >> f & 1) for f in range(n)] for e in range(n)]
    colors = count[:]
    while True:
        sigs = [
            (colors[e], tuple(sorted((colors[f], pair[e][f]) for f in range(n) if f != e)))
            for e in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _swap(mask: int, e: int, f: int) -> int:
    be, bf = mask >> e & 1, mask >> f & 1
    if be != bf:
        mask ^= (1 << e) | (1 << f)
    return mask


def _multiset_permutations(items: list):
    items = sorted(items)
    n = len(items)
    if n == 0:
        yield ()
        return
    seen = set()
    for i in range(n):
        if items[i] in seen:
            continue
        seen.add(items[i])
        for rest in _multiset_permutations(items[:i] + items[i + 1 :]):
            yield (items[i],) + rest


def canonical(m: Matroid) -> IsoKey:
    n = m.size
    if n > MAX_CANONICAL:
        raise MatroidError(f"canonical form limited to {MAX_CANONICAL} elements, got {n}")
    c = compact(m)
    bases = c.bases
    bset = set(bases)
    colors = _refine_colors(n, bases)

    # twins: transposing them is an automorphism, so their relative order is free
    twin_of = list(range(n))
    for e in range(n):
        if twin_of[e] != e:
            continue
        for f in range(e + 1, n):
            if twin_of[f] == f and colors[e] == colors[f]:
                if all(_swap(b, e, f) in bset for b in bases):
                    twin_of[f] = e

    classes: dict[int, list[int]] = {}
    for e in range(n):
        classes.setdefault(colors[e], []).append(e)
    ordered = [classes[k] for k in sorted(classes)]

    per_class = []
    for members in ordered:
        groups: dict[int, list[int]] = {}
        for e in members:
            groups.setdefault(twin_of[e], []).append(e)
        arrangements = []
        for pattern in _multiset_permutations([twin_of[e] for e in members]):
            queues = {g: iter(v) for g, v in groups.items()}
            arrangements.append([next(queues[g]) for g in pattern])
        per_class.append(arrangements)

    best = None
    for choice in product(*per_class):
        order = [e for part in choice for e in part]
        pos = [0] * n
        for label, e in enumerate(order):
            pos[e] = label
        relabeled = []
        for b in bases:
            out = 0
            for e in elements(b):
                out |= 1 << pos[e]
            relabeled.append(out)
        cand = tuple(sorted(relabeled))
        if best is None or cand < best:
            best = cand
    return IsoKey(n, c.rank, best)


def is_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    return canonical(m1) == canonical(m2)


def brute_canonical(m: Matroid) -> IsoKey:
    """Minimum over all n! labelings.

    Test oracle for :func:`canonical`: the two keys differ in general but
    induce the same partition into isomorphism classes.
    """
    c = compact(m)
    n = c.size
    best = None
    for perm in permutations(range(n)):
        relabeled = []
        for b in c.bases:
            out = 0
            for e in elements(b):
                out |= 1 << perm[e]
            relabeled.append(out)
        cand = tuple(sorted(relabeled))
        if best is None or cand < best:
            best = cand
    return IsoKey(n, c.rank, best)


# -- enumeration ----------------------------------------------------------------


def _exchange_filter(n: int, r: int):
    """All nonempty families of r-subsets of {0..n-1} satisfying basis exchange.

    Scans every family as a bit-vector over the r-subsets, vectorised with numpy.
    Returns families as lists of basis masks, in increasing family-index order.
    """
    import numpy as np

    cands = [as_mask(c) for c in combinations(range(n), r)]
    index = {b: i for i, b in enumerate(cands)}
    k = len(cands)
    fams = np.arange(1, 1 << k, dtype=np.int64)
    ok = np.ones(fams.shape, dtype=bool)
    for i, b1 in enumerate(cands):
        for j, b2 in enumerate(cands):
            if i == j:
                continue
            both = (1 << i) | (1 << j)
            present = (fams & both) == both
            for e in elements(b1 & ~b2):
                without = b1 & ~(1 << e)
                clause = 0
                for f in elements(b2 & ~b1):
                    clause |= 1 << index[without | (1 << f)]
                ok &= ~(present & ((fams & clause) == 0))
    good = fams[ok]
    return [[cands[i] for i in range(k) if int(f) >> i & 1] for f in good]


def enumerate_matroids(n: int) -> list[Matroid]:
    """Every labeled matroid on {0..n-1}, ordered by rank then family index."""
    if not 0 <= n <= MAX_ENUMERATE:
        raise MatroidError(f"enumeration supports 0 <= n <= {MAX_ENUMERATE}, got {n}")
    ground = (1 << n) - 1
    out = []
    for r in range(n + 1):
        for family in _exchange_filter(n, r):
            out.append(Matroid(ground, tuple(sorted(family))))
    return out


def catalog(nmax: int) -> list[Matroid]:
    """Labeled matroids on {0..n-1} for every n <= nmax."""
    out = []
    for n in range(nmax + 1):
        out.extend(enumerate_matroids(n))
    return out


def iso_classes(matroids: Iterable[Matroid]) -> list[Matroid]:
    """One representative per isomorphism class, first occurrence kept."""
    seen = set()
    reps = []
    for m in matroids:
        key = canonical(m)
        if key not in seen:
            seen.add(key)
            reps.append(m)
    return reps
