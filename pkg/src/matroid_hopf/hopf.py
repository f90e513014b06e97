"""The matroid Hopf algebra: coproduct, characters, convolution and exp_*.

Characters are lazy: a :class:`Character` wraps an evaluation function
``Matroid -> Poly`` and caches values per isomorphism class.  Convolution
sums over the labeled coproduct, so it only ever touches actual minors.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb, factorial
from typing import Callable, Iterable

from .matroid import (
    EMPTY,
    MAX_CANONICAL,
    IsoKey,
    Matroid,
    canonical,
    contract,
    dual,
    restrict,
    subsets,
    uniform,
)
from .memo import Memo
from .poly import A, B, ONE, S, X, Y, ZERO, Poly, PolyLike
from .tutte import recipe_Q, tutte_subset

# -- coproduct ---------------------------------------------------------------


@dataclass
class TensorSum:
    """Delta(M) = sum over A of M|A (x) M/A, kept both labeled and collected."""

    raw: list = field(default_factory=list)  # (A, M|A, M/A) per subset A

    @cached_property
    def collected(self) -> Counter:
        out: Counter = Counter()
        for _, left, right in self.raw:
            out[(canonical(left), canonical(right))] += 1
        return out

    def total(self) -> int:
        return sum(self.collected.values())

    def lines(self) -> list[str]:
        return [f"{c} · [{k1}] ⊗ [{k2}]" for (k1, k2), c in sorted(self.collected.items())]


def coproduct(m: Matroid) -> TensorSum:
    return TensorSum([(a, restrict(m, a), contract(m, a)) for a in subsets(m.ground)])


def uniform_coproduct_formula(k: int, n: int) -> Counter:
    """Closed form of Delta(U_{k,n}) as a collected tensor sum."""
    out: Counter = Counter()
    for i in range(k + 1):
        out[(canonical(uniform(i, i)), canonical(uniform(k - i, n - i)))] += comb(n, i)
    for i in range(k + 1, n + 1):
        out[(canonical(uniform(k, i)), canonical(uniform(0, n - i)))] += comb(n, i)
    return out


def coassociativity_sides(m: Matroid) -> tuple[Counter, Counter]:
    """Collected (Delta (x) id) Delta(M) and (id (x) Delta) Delta(M) as triple counters."""
    left: Counter = Counter()
    right: Counter = Counter()
    for a in subsets(m.ground):
        res, con = restrict(m, a), contract(m, a)
        kr, kc = canonical(res), canonical(con)
        for b in subsets(a):
            left[(canonical(restrict(res, b)), canonical(contract(res, b)), kc)] += 1
        for c in subsets(con.ground):
            right[(kr, canonical(restrict(con, c)), canonical(contract(con, c)))] += 1
    return left, right


def coassociativity_check(m: Matroid) -> bool:
    left, right = coassociativity_sides(m)
    return left == right


def counit_check(m: Matroid) -> bool:
    """(eps (x) id) Delta(M) = M = (id (x) eps) Delta(M) on collected forms."""
    key = canonical(m)
    left: Counter = Counter()
    right: Counter = Counter()
    for (k1, k2), c in coproduct(m).collected.items():
        if k1.n == 0:
            left[k2] += c
        if k2.n == 0:
            right[k1] += c
    return left == Counter({key: 1}) == right


# -- characters ----------------------------------------------------------------


def counit(m: Matroid) -> Poly:
    return ONE if m.is_empty else ZERO


def delta_loop(m: Matroid) -> Poly:
    return ONE if m.size == 1 and m.rank == 0 else ZERO


def delta_coloop(m: Matroid) -> Poly:
    return ONE if m.size == 1 and m.rank == 1 else ZERO


class Character:
    """Iso-invariant functional ``Matroid -> Poly`` with a per-class cache.

    ``infinitesimal`` records which law the functional is meant to obey;
    it is metadata only and is checked by the ``*_law_check`` helpers.
    """

    def __init__(self, fn: Callable[[Matroid], Poly], name: str = "", infinitesimal: bool = False):
        self.fn = fn
        self.name = name or getattr(fn, "__name__", "character")
        self.infinitesimal = infinitesimal
        self._memo = Memo(self.name)

    def __call__(self, m: Matroid) -> Poly:
        if m.size > MAX_CANONICAL:
            return self.fn(m)
        return self._memo.get_or_compute(canonical(m), lambda: self.fn(m))

    def __repr__(self) -> str:
        return f"Character({self.name})"

    def __add__(self, other: Character) -> Character:
        return Character(
            lambda m: self(m) + other(m),
            f"({self.name} + {other.name})",
            self.infinitesimal and other.infinitesimal,
        )

    def __sub__(self, other: Character) -> Character:
        return Character(
            lambda m: self(m) - other(m),
            f"({self.name} - {other.name})",
            self.infinitesimal and other.infinitesimal,
        )

    def __rmul__(self, scalar: PolyLike) -> Character:
        scalar = Poly.coerce(scalar)
        return Character(lambda m: scalar * self(m), f"({scalar})*{self.name}", self.infinitesimal)


COUNIT = Character(counit, "eps")
LOOP = Character(delta_loop, "delta_loop", infinitesimal=True)
COLOOP = Character(delta_coloop, "delta_coloop", infinitesimal=True)


def as_character(f) -> Character:
    return f if isinstance(f, Character) else Character(f)


def convolve(f, g) -> Character:
    """(f * g)(M) = sum over A of f(M|A) g(M/A)."""
    f, g = as_character(f), as_character(g)

    def value(m: Matroid) -> Poly:
        total = ZERO
        for _, left, right in coproduct(m).raw:
            fl = f(left)
            if fl.is_zero():
                continue
            total = total + fl * g(right)
        return total

    return Character(value, f"({f.name} * {g.name})")


def commutator(f, g) -> Character:
    f, g = as_character(f), as_character(g)
    fg, gf = convolve(f, g), convolve(g, f)
    return Character(lambda m: fg(m) - gf(m), f"[{f.name}, {g.name}]")


class ExpStar(Character):
    """exp_*(d) = sum over k of d^{*k} / k!, truncated at k = |E|.

    The sum is accumulated as sum_k (|E|!/k!) d^{*k}(M) and divided by
    |E|! at the end; a nonzero remainder raises ArithmeticError.
    """

    def __init__(self, d, name: str | None = None):
        self.d = as_character(d)
        if not self.d(EMPTY).is_zero():
            raise ValueError(f"exp_* needs d(empty) = 0, got {self.d(EMPTY)}")
        self._powers = [COUNIT]
        super().__init__(self._value, name or f"exp*({self.d.name})")

    def power(self, k: int) -> Character:
        while len(self._powers) <= k:
            self._powers.append(convolve(self._powers[-1], self.d))
        return self._powers[k]

    def _value(self, m: Matroid) -> Poly:
        n = m.size
        nfact = factorial(n)
        acc = ZERO
        for k in range(n + 1):
            acc = acc + (nfact // factorial(k)) * self.power(k)(m)
        return acc.exact_div(nfact)


def exp_star(d) -> ExpStar:
    return ExpStar(d)


def infinitesimal_combination(coloop_weight: PolyLike, loop_weight: PolyLike) -> Character:
    cw, lw = Poly.coerce(coloop_weight), Poly.coerce(loop_weight)
    return Character(
        lambda m: cw * delta_coloop(m) + lw * delta_loop(m),
        f"({cw})dc + ({lw})dl",
        infinitesimal=True,
    )


# the four infinitesimal characters that appear in alpha and its factorisation
D_LEFT = infinitesimal_combination(S, S * (Y - 1))
D_RIGHT = infinitesimal_combination(S * (X - 1), S)
D_MINUS = infinitesimal_combination(-S, S)
D_PLUS = infinitesimal_combination(S, -S)

EXP_LEFT = ExpStar(D_LEFT)
EXP_RIGHT = ExpStar(D_RIGHT)
EXP_MINUS = ExpStar(D_MINUS)
EXP_PLUS = ExpStar(D_PLUS)

ALPHA = convolve(EXP_LEFT, EXP_RIGHT)
FOUR_FACTOR = convolve(convolve(convolve(EXP_LEFT, EXP_MINUS), EXP_PLUS), EXP_RIGHT)


def alpha(m: Matroid) -> Poly:
    return ALPHA(m)


def four_factor_alpha(m: Matroid) -> Poly:
    return FOUR_FACTOR(m)


def _beta(m: Matroid) -> Poly:
    return S**m.size * recipe_Q(m)


BETA = Character(_beta, "beta")


def beta(m: Matroid) -> Poly:
    return BETA(m)


def lemma41_character() -> ExpStar:
    """exp_*(a delta_coloop + b delta_loop)."""
    return ExpStar(infinitesimal_combination(A, B))


# -- identity checks ----------------------------------------------------------


def kook_rhs(m: Matroid) -> Poly:
    """sum over A of T_{M|A}(0, y) T_{M/A}(x, 0)."""
    rhs = ZERO
    for a in subsets(m.ground):
        left = tutte_subset(restrict(m, a)).subst({"x": 0})
        right = tutte_subset(contract(m, a)).subst({"y": 0})
        rhs = rhs + left * right
    return rhs


def kook_convolution_check(m: Matroid) -> bool:
    return kook_rhs(m) == tutte_subset(m)


def alpha_duality_check(m: Matroid) -> bool:
    return alpha(m) == alpha(dual(m)).swap_xy()


_ALPHA_RHS = [
    (X, convolve(ALPHA, COLOOP)),
    (Y, convolve(LOOP, ALPHA)),
    (ONE, commutator(COLOOP, ALPHA)),
    (-ONE, commutator(LOOP, ALPHA)),
]

_BETA_RHS = [
    (X, convolve(BETA, COLOOP)),
    (Y, convolve(LOOP, BETA)),
    (B, commutator(COLOOP, BETA)),
    (-A, commutator(LOOP, BETA)),
]


def _rhs(terms, m: Matroid) -> Poly:
    total = ZERO
    for weight, char in terms:
        total = total + weight * char(m)
    return total


def flow_alpha_sides(m: Matroid) -> tuple[Poly, Poly]:
    return alpha(m).d_ds(), _rhs(_ALPHA_RHS, m)


def flow_beta_sides(m: Matroid) -> tuple[Poly, Poly]:
    return beta(m).d_ds(), _rhs(_BETA_RHS, m)


def flow_check_alpha(m: Matroid) -> bool:
    lhs, rhs = flow_alpha_sides(m)
    return lhs == rhs


def flow_check_beta(m: Matroid) -> bool:
    lhs, rhs = flow_beta_sides(m)
    return lhs == rhs


def character_law_check(c, pairs: Iterable[tuple[Matroid, Matroid]]) -> bool:
    from .matroid import direct_sum

    c = as_character(c)
    if c(EMPTY) != ONE:
        return False
    return all(c(direct_sum(m1, m2)) == c(m1) * c(m2) for m1, m2 in pairs)


def infinitesimal_law_check(c, pairs: Iterable[tuple[Matroid, Matroid]]) -> bool:
    from .matroid import direct_sum

    c = as_character(c)
    return all(
        c(direct_sum(m1, m2)) == c(m1) * counit(m2) + counit(m1) * c(m2) for m1, m2 in pairs
    )


# -- formal sums and phi_{a,b} -------------------------------------------------


class FormalSum(dict):
    """Finite Poly-weighted combination of isomorphism classes (IsoKey -> Poly)."""

    @classmethod
    def of(cls, m: Matroid, coeff: PolyLike = 1) -> FormalSum:
        return cls({canonical(m): Poly.coerce(coeff)})

    def __add__(self, other: FormalSum) -> FormalSum:
        out = FormalSum(self)
        for k, v in other.items():
            out[k] = out.get(k, ZERO) + v
        return FormalSum({k: v for k, v in out.items() if not v.is_zero()})


def _phi_weight(key: IsoKey) -> Poly:
    return A**key.rank * B**key.nullity


def phi(fs: FormalSum) -> FormalSum:
    return FormalSum({k: _phi_weight(k) * v for k, v in fs.items() if not v.is_zero()})


def coproduct_formal(fs: FormalSum) -> dict:
    """Delta extended linearly to a formal sum; returns (IsoKey, IsoKey) -> Poly."""
    out: dict = {}
    for key, coeff in fs.items():
        for pair, c in coproduct(key.matroid()).collected.items():
            out[pair] = out.get(pair, ZERO) + c * coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def phi_tensor(ts: dict) -> dict:
    out = {}
    for (k1, k2), coeff in ts.items():
        v = _phi_weight(k1) * _phi_weight(k2) * coeff
        if not v.is_zero():
            out[(k1, k2)] = v
    return out


def phi_bialgebra_check(m: Matroid) -> bool:
    fs = FormalSum.of(m)
    return coproduct_formal(phi(fs)) == phi_tensor(coproduct_formal(fs))
