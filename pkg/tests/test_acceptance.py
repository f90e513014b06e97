"""Exit criteria: every identity checked exhaustively at its stated catalog bound."""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from matroid_hopf import hopf
from matroid_hopf.matroid import dual, enumerate_matroids, uniform
from matroid_hopf.poly import A, B, S
from matroid_hopf.tutte import recipe_Q, scaled_tutte, tutte_delcon, tutte_subset, tutte_uniform


def record(number, title, failures, checked, started):
    ok = not failures
    elapsed = time.perf_counter() - started
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({checked} checks, {elapsed:.2f}s)"
    if failures:
        line += f" first failure: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def sum_pairs():
    """All ordered pairs of labeled catalog matroids with total size <= 5."""
    by_size = {n: enumerate_matroids(n) for n in range(6)}
    return [(m1, m2) for a in range(6) for b in range(6 - a) for m1 in by_size[a] for m2 in by_size[b]]


def test_criterion_01_uniform_closed_form():
    t0 = time.perf_counter()
    cases = [(k, n) for n in range(8) for k in range(n + 1)]
    assert len(cases) == 36
    failures = [(k, n) for k, n in cases if tutte_uniform(k, n) != tutte_subset(uniform(k, n))]
    assert time.perf_counter() - t0 < 1.0
    record(1, "closed form for T(U_{k,n}), 0 <= k <= n <= 7", failures, len(cases), t0)


def test_criterion_02_delcon_equals_subset(catalog5):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog5 if tutte_delcon(m) != tutte_subset(m)]
    record(2, "deletion-contraction = subset expansion, n <= 5", failures, len(catalog5), t0)


def test_criterion_03_duality(catalog5):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog5 if tutte_subset(m).swap_xy() != tutte_subset(dual(m))]
    record(3, "T_M(x,y) = T_M*(y,x), n <= 5", failures, len(catalog5), t0)


def test_criterion_04_exp_of_loop_coloop_combination(catalog5):
    t0 = time.perf_counter()
    e = hopf.lemma41_character()
    # ExpStar.exact_div raises on any nonzero remainder
    failures = [str(m) for m in catalog5 if e(m) != A**m.rank * B**m.nullity]
    record(4, "exp_*(a dc + b dl)(M) = a^r b^n with exact k! division, n <= 5", failures, len(catalog5), t0)


def test_criterion_05_alpha_is_scaled_tutte(catalog4):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog4 if hopf.alpha(m) != S**m.size * tutte_subset(m)]
    record(5, "alpha(M) = s^|E| T_M, n <= 4", failures, len(catalog4), t0)


def test_criterion_06_kook_convolution(catalog5):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog5 if not hopf.kook_convolution_check(m)]
    record(6, "T_M = sum_A T_{M|A}(0,y) T_{M/A}(x,0), n <= 5", failures, len(catalog5), t0)


def test_criterion_07_flow_equations(catalog4):
    t0 = time.perf_counter()
    failures = []
    for m in catalog4:
        if not hopf.flow_check_alpha(m):
            failures.append(f"alpha {m}")
        if not hopf.flow_check_beta(m):
            failures.append(f"beta {m}")
    record(7, "flow equations for alpha and beta, n <= 4", failures, 2 * len(catalog4), t0)


def test_criterion_08_recipe_theorem(catalog4, catalog5):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog5 if recipe_Q(m) != scaled_tutte(m)]
    rng = random.Random(20240601)
    orders = 0
    for m in catalog4:
        want = recipe_Q(m)
        want_t = tutte_subset(m)
        for _ in range(100):
            orders += 1
            if recipe_Q(m, choose=rng.choice) != want:
                failures.append(f"order-dependent Q on {m}")
                break
            if tutte_delcon(m, choose=rng.choice) != want_t:
                failures.append(f"order-dependent T on {m}")
                break
    record(8, "Q = a^n b^r T(x/b, y/a) for n <= 5; 100 random orders each for n <= 4", failures, len(catalog5) + orders, t0)


def test_criterion_09_bialgebra(catalog4):
    t0 = time.perf_counter()
    failures = []
    for m in catalog4:
        if not hopf.coassociativity_check(m):
            failures.append(f"coassoc {m}")
        if not hopf.counit_check(m):
            failures.append(f"counit {m}")
        if not hopf.phi_bialgebra_check(m):
            failures.append(f"phi {m}")
    uniform_cases = [(k, n) for n in range(6) for k in range(n + 1)]
    for k, n in uniform_cases:
        if hopf.coproduct(uniform(k, n)).collected != hopf.uniform_coproduct_formula(k, n):
            failures.append(f"Delta(U_{{{k},{n}}})")
    record(9, "coassociativity, counit, phi_{a,b} (n <= 4); Delta(U_{k,n}) closed form (n <= 5)",
           failures, 3 * len(catalog4) + len(uniform_cases), t0)


def test_criterion_10_four_factor(catalog4):
    t0 = time.perf_counter()
    failures = [str(m) for m in catalog4 if hopf.four_factor_alpha(m) != hopf.alpha(m)]
    record(10, "four-factor product equals alpha, n <= 4", failures, len(catalog4), t0)


def test_criterion_11_character_laws(sum_pairs):
    t0 = time.perf_counter()
    failures = []
    multiplicative = {
        "alpha": hopf.ALPHA,
        "exp_left": hopf.EXP_LEFT,
        "exp_right": hopf.EXP_RIGHT,
        "exp_minus": hopf.EXP_MINUS,
        "exp_plus": hopf.EXP_PLUS,
        "exp_ab": hopf.lemma41_character(),
    }
    for name, c in multiplicative.items():
        if not hopf.character_law_check(c, sum_pairs):
            failures.append(name)
    infinitesimal = {
        "delta_loop": hopf.LOOP,
        "delta_coloop": hopf.COLOOP,
        "d_left": hopf.D_LEFT,
        "d_right": hopf.D_RIGHT,
        "d_minus": hopf.D_MINUS,
        "d_plus": hopf.D_PLUS,
    }
    for name, c in infinitesimal.items():
        if not hopf.infinitesimal_law_check(c, sum_pairs):
            failures.append(name)
    record(11, "character laws on all direct-sum pairs with |E1| + |E2| <= 5",
           failures, (len(multiplicative) + len(infinitesimal)) * len(sum_pairs), t0)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["duality", "kook", "recipe", "lemma41", "alpha-tutte"])
def test_optional_n6_sweep(name):
    from matroid_hopf.cli import verify

    assert verify(name, 6, extended=True).passed
