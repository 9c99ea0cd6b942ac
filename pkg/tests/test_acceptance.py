"""Acceptance criteria 1-10.

Each test records one PASS/FAIL line; the lines are printed as they happen
(visible with ``-s``) and repeated in the terminal summary.
"""
import math
import random
import time



from antisat import (
    ChainCover,
    Family,
    LayeredCoverInstance,
    construct_saturated,
    dilworth,
    greedy_saturate,
    is_k_antichain_saturated,
    min_path_cover,
    nu,
    nu_colex,
    oracle_min_sat,
    sat_value,
    shadow,
    shadow_size_colex,
    skipless_cover,
    symmetric_chain_decomposition,
)
from antisat.chains import is_antichain
from antisat.colex import c_sequence, colex_segment, ell_of
from antisat.errors import InfeasibleCoverError
from antisat.io import format_cover, format_family, parse_cover, parse_family
from antisat.lattice import full_layer_words, popcount

from conftest import random_chain_cover, record_acceptance


def finish(number, text, violations, elapsed, limit):
    ok = not violations and elapsed < limit
    record_acceptance(number, f"{text} ({elapsed:.2f}s, limit {limit}s, {len(violations)} violations)", ok)
    assert not violations, violations[:5]
    assert elapsed < limit


def test_criterion_01_known_exact_values():
    start = time.perf_counter()
    formulas = {2: lambda n: n + 1, 3: lambda n: 2 * n, 4: lambda n: 3 * n - 1,
                5: lambda n: 4 * n - 2, 6: lambda n: 5 * n - 5}
    violations = []
    checked = 0
    for k, f in formulas.items():
        ell = ell_of(k)
        for n in range(2 * ell + 1, 41):
            p = sat_value(n, k)
            checked += 1
            if p.value != f(n) or p.status != "exact":
                violations.append((n, k, p.value, f(n), p.status))
    finish(1, f"sat_value matches n+1, 2n, 3n-1, 4n-2, 5n-5 on {checked} points",
           violations, time.perf_counter() - start, 1)


def test_criterion_02_equality_regime_constructions():
    start = time.perf_counter()
    violations = []
    checked = 0
    for k in range(2, 22):
        ell = ell_of(k)
        for n in (2 * ell + 1, 2 * ell + 3):
            family, cover = construct_saturated(n, k)
            p = sat_value(n, k)
            report = is_k_antichain_saturated(family, k)
            # file round trip, as the command line tool would do it
            again = parse_family(format_family(family))
            same_cover = parse_cover(format_cover(cover)) == cover
            checked += 1
            if not (report.is_saturated and p.status == "exact" and len(family) == p.value
                    and again == family and same_cover and len(cover) == k - 1 and cover.is_skipless):
                violations.append((n, k, len(family), p.value))
    grid_elapsed = time.perf_counter() - start
    finish(2, f"construct_saturated exact and verified on {checked} grid points",
           violations, grid_elapsed, 300)

    start = time.perf_counter()
    family, cover = construct_saturated(15, 36)
    p = sat_value(15, 36)
    spot = [] if (len(family) == p.value and p.status == "exact" and p.ell == 7
                  and is_k_antichain_saturated(family, 36).is_saturated) else [(15, 36, len(family))]
    finish(2, f"spot check k=36, n=15 gives {len(family)} sets", spot, time.perf_counter() - start, 1200)


def test_criterion_03_central_binomial_closed_form():
    start = time.perf_counter()
    violations = []
    for kk in (2, 6, 20):
        k = kk + 1
        ell = ell_of(k)
        h = ell // 2
        assert math.comb(ell, h) == kk
        for n in range(ell + 1, 31):
            closed = 2 * sum(math.comb(ell, j) for j in range(h + 1)) + kk * (n - 1 - 2 * h)
            p = sat_value(n, k)
            recursion = 2 * sum(c_sequence(k).c) + kk * (n - 1 - 2 * h)
            if not (p.value == closed == recursion and p.status in ("exact", "exact_nicecase")):
                violations.append((n, k, p.value, closed))
        family, _ = construct_saturated(ell + 1, k)
        closed = 2 * sum(math.comb(ell, j) for j in range(h + 1)) + kk * (ell - 2 * h)
        if len(family) != closed or not is_k_antichain_saturated(family, k).is_saturated:
            violations.append(("construct", ell + 1, k, len(family), closed))
    finish(3, "closed form for k-1 in {2, 6, 20} and constructions at n = ell+1",
           violations, time.perf_counter() - start, 60)


def test_criterion_04_oracle():
    start = time.perf_counter()
    violations = []
    for n, k in ((3, 2), (4, 2)):
        value, _ = oracle_min_sat(n, k)
        p = sat_value(n, k)
        if value != p.value or p.status != "exact":
            violations.append((n, k, value, p.value))
    fixtures = {(4, 3): 8, (4, 4): 11}
    for (n, k), expected in fixtures.items():
        value, witness = oracle_min_sat(n, k)
        lower = sat_value(n, k).value
        if value != expected or value < lower or not is_k_antichain_saturated(witness, k).is_saturated:
            violations.append((n, k, value, lower))
    finish(4, "oracle (3,2)=4, (4,2)=5, (4,3)=8, (4,4)=11 against sat_value",
           violations, time.perf_counter() - start, 120)


def test_criterion_05_nu_colex_matches_matching():
    start = time.perf_counter()
    violations = []
    checked = 0
    for r in range(1, 10):
        for m in range(1, min(math.comb(9, r), 300) + 1):
            segment = colex_segment(m, r)
            got = nu_colex(m, r)
            checked += 1
            if got != nu(segment):
                violations.append((m, r, got))
    finish(5, f"nu_colex equals matching number on {checked} colex segments",
           violations, time.perf_counter() - start, 60)


def test_criterion_06_colex_minimises_nu_and_shadow():
    start = time.perf_counter()
    violations = []
    checked = 0
    n = 5
    for t in (2, 3):
        layer = full_layer_words(n, t)
        for mask in range(1, 1 << len(layer)):
            words = [w for i, w in enumerate(layer) if mask >> i & 1]
            family = Family(n, words)
            m = len(words)
            checked += 1
            if nu(family) < nu_colex(m, t):
                violations.append(("nu", t, words))
            if len(shadow(family)) < shadow_size_colex(m, t):
                violations.append(("shadow", t, words))
    finish(6, f"colex minimises nu and shadow over {checked} subfamilies of layers 2 and 3 of [5]",
           violations, time.perf_counter() - start, 60)


def test_criterion_07_skipless_cover_law():
    start = time.perf_counter()
    rng = random.Random(7)
    violations = []
    for trial in range(1000):
        chains = random_chain_cover(rng, 8, 8)
        cover = ChainCover.of(8, chains)
        out = skipless_cover(cover)
        if not (len(out) == len(cover) and out.is_skipless
                and set(cover.family().words) <= set(out.family().words)):
            violations.append(("cover", trial))
    for trial in range(200):
        family = Family(7, rng.sample(range(128), rng.randint(1, 40)))
        width = dilworth(family)[0]
        try:
            min_path_cover(LayeredCoverInstance(family, width))
        except InfeasibleCoverError:
            violations.append(("width infeasible", trial))
        if width > 1:
            try:
                min_path_cover(LayeredCoverInstance(family, width - 1))
                violations.append(("below width feasible", trial))
            except InfeasibleCoverError as exc:
                cert = exc.certificate
                if len(cert) < width or not is_antichain(cert.words):
                    violations.append(("certificate", trial))
    finish(7, "1000 skipless covers in 2^[8]; minimum target equals width on 200 families in 2^[7]",
           violations, time.perf_counter() - start, 180)


def test_criterion_08_antichain_of_size_262():
    start = time.perf_counter()
    top = colex_segment(261, 5, 12)
    bottom = colex_segment(219, 4, 12)
    family = Family(12, list(top.words) + list(bottom.words))
    width, anti, cover = dilworth(family)
    violations = []
    if width < 262 or len(anti) != width or not is_antichain(anti.words):
        violations.append(width)
    if not set(anti.words) <= set(family.words) or len(cover) != width:
        violations.append("certificate")
    finish(8, f"width of C(261,5) u C(219,4) is {width} with a verified antichain",
           violations, time.perf_counter() - start, 1)


def test_criterion_09_symmetric_chain_decompositions():
    start = time.perf_counter()
    violations = []
    for n in range(1, 17):
        cover = symmetric_chain_decomposition(n)
        seen = sorted(w for c in cover.chains for w in c.words)
        if len(cover) != math.comb(n, n // 2) or seen != list(range(1 << n)):
            violations.append((n, "partition"))
        for chain in cover.chains:
            if not chain.is_skipless or popcount(chain.bottom) + popcount(chain.top) != n:
                violations.append((n, chain.words))
                break
    finish(9, "symmetric chain decompositions for n <= 16", violations, time.perf_counter() - start, 30)


def test_criterion_10_greedy_families():
    start = time.perf_counter()
    rng = random.Random(10)
    violations = []
    for seed in range(50):
        n = rng.randint(4, 8)
        k = rng.randint(2, 6)
        family = greedy_saturate(Family(n), k, order="random", seed=seed)
        report = is_k_antichain_saturated(family, k)
        if not report.is_saturated:
            violations.append(("not saturated", n, k, seed))
            continue
        # a saturated family other than 2^[n] has width exactly k - 1
        width, _, chains = dilworth(family)
        if width != k - 1:
            violations.append(("width", n, k, seed, width))
            continue
        skipless = skipless_cover(chains)
        union = set(skipless.family().words)
        if len(skipless) != k - 1 or not skipless.is_skipless or not set(family.words) <= union:
            violations.append(("cover", n, k, seed))
        counts = family.layer_counts()
        if n >= ell_of(k):
            c = c_sequence(k).c
            for t in range(n // 2 + 1):
                quota = c[t] if t < len(c) else k - 1
                if counts[t] < quota or counts[n - t] < quota:
                    violations.append(("layer", n, k, seed, t))
    finish(10, "50 seeded greedy families admit k-1 skipless chains and meet the layer quotas",
           violations, time.perf_counter() - start, 600)
