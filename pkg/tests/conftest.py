"""Independent brute-force oracles shared by the test modules.

Nothing here calls into the matching or flow engines of the package, so the
helpers can be used to check those engines.
"""
from __future__ import annotations

import itertools
import random

import pytest

ACCEPTANCE_LINES: list[str] = []


def subset(a: int, b: int) -> bool:
    return a & b == a


def comparable(a: int, b: int) -> bool:
    return subset(a, b) or subset(b, a)


def brute_width(words) -> int:
    """Largest antichain by a bitmask recursion (fine up to ~24 sets)."""
    words = list(words)
    n = len(words)
    comp = [0] * n
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if i != j and comparable(a, b):
                comp[i] |= 1 << j
    memo = {0: 0}

    def best(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        i = low.bit_length() - 1
        rest = mask ^ low
        value = max(best(rest), 1 + best(rest & ~comp[i]))
        memo[mask] = value
        return value

    return best((1 << n) - 1)


def brute_hall_deficiency(left_count: int, adjacency) -> int:
    """max over X of |X| - |N(X)| by enumerating every subset of the left side."""
    best = 0
    for mask in range(1 << left_count):
        nbrs = set()
        size = 0
        for u in range(left_count):
            if mask >> u & 1:
                size += 1
                nbrs.update(adjacency[u])
        best = max(best, size - len(nbrs))
    return best


def brute_shadow(words) -> set[int]:
    out = set()
    for w in words:
        x = w
        while x:
            low = x & -x
            out.add(w ^ low)
            x ^= low
    return out


def brute_nu(words) -> int:
    """Matching number between a layer family and its shadow via Hall's formula."""
    words = list(words)
    right = sorted(brute_shadow(words))
    index = {w: i for i, w in enumerate(right)}
    adjacency = [[index[v] for v in brute_shadow([w])] for w in words]
    return len(words) - brute_hall_deficiency(len(words), adjacency)


def brute_min_skipless_paths(vertices) -> int:
    """Fewest vertex-disjoint skipless paths partitioning ``vertices``.

    For a DAG this is |V| minus a maximum matching of Hasse arcs between
    out-copies and in-copies; the matching is found by exhaustive search.
    """
    vertices = list(vertices)
    arcs = [
        (i, j)
        for i, a in enumerate(vertices)
        for j, b in enumerate(vertices)
        if subset(a, b) and bin(b).count("1") == bin(a).count("1") + 1
    ]
    best = 0
    for size in range(len(arcs), 0, -1):
        if size <= best:
            break
        for combo in itertools.combinations(arcs, size):
            tails = {i for i, _ in combo}
            heads = {j for _, j in combo}
            if len(tails) == size and len(heads) == size:
                best = size
                break
    return len(vertices) - best


def brute_is_saturated(words, n: int, k: int) -> bool:
    words = list(words)
    if brute_width(words) >= k:
        return False
    present = set(words)
    return all(brute_width(words + [x]) >= k for x in range(1 << n) if x not in present)


def random_chain_cover(rng: random.Random, n: int, max_chains: int):
    """Disjoint random chains (not necessarily skipless) inside 2^[n]."""
    used: set[int] = set()
    chains = []
    for _ in range(rng.randint(1, max_chains)):
        word = rng.randrange(1 << n)
        chain = []
        while True:
            if word not in used:
                chain.append(word)
                used.add(word)
            free = [i for i in range(n) if not word >> i & 1]
            if not free or rng.random() < 0.3:
                break
            for _ in range(rng.randint(1, 2)):
                if free:
                    word |= 1 << free.pop(rng.randrange(len(free)))
        if chain:
            chains.append(chain)
    return chains


def record_acceptance(number: int, text: str, ok: bool) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240611)
