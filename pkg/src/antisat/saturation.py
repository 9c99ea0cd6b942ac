"""Antichain saturation: exact values, minimum constructions, verification, greedy and brute force.

A family F of subsets of [n] is k-antichain saturated when its largest
antichain has at most k - 1 members but adding any absent set creates a
k-antichain.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .chains import ChainCover, dilworth, layer_matching, skipless_cover, symmetric_chain_decomposition
from .colex import SatProfile, binom, c_sequence, ell_of, r_expansion
from .errors import CapacityError, ConstructionError, PreconditionError
from .lattice import ElementSet, Family, canonical_key, full_layer_words, mirror_word, popcount
from .matching import UNMATCHED, alternating_reach, comparability_adjacency, hopcroft_karp

ORACLE_MAX_N = 4


def sat_value(n: int, k: int) -> SatProfile:
    """sat(n, k) with the strength of the claim attached as ``status``."""
    if n < 1 or k < 1:
        raise PreconditionError("sat_value needs n >= 1 and k >= 1")
    if k == 1:
        return SatProfile(k=1, ell=ell_of(1), c=(), n=n, value=0, status="exact")
    prof = c_sequence(k)
    ell, c = prof.ell, prof.c
    nice = binom(ell, ell // 2) == k - 1
    if n < ell or (nice and n == ell):
        return SatProfile(k=k, ell=ell, c=c, n=n, value=1 << n, status="full_powerset")
    value = 2 * sum(c) + (k - 1) * (n - 1 - 2 * (ell // 2))
    if n >= 2 * ell + 1:
        status = "exact"
    elif nice and n >= ell + 1:
        status = "exact_nicecase"
    else:
        status = "lower_bound"
    return SatProfile(k=k, ell=ell, c=c, n=n, value=value, status=status)


def layer_quotas(n: int, k: int) -> list[int]:
    """c_t for t <= n // 2: the recursion up to ell // 2, then k - 1."""
    prof = c_sequence(k)
    h = prof.ell // 2
    return [prof.c[t] if t <= h else k - 1 for t in range(n // 2 + 1)]


@dataclass(frozen=True)
class LayerCheck:
    layer: int
    count: int
    mirror_count: int
    quota: int

    @property
    def ok(self) -> bool:
        return self.count >= self.quota and self.mirror_count >= self.quota


@dataclass(frozen=True)
class SaturationReport:
    is_saturated: bool
    width: int
    culprit: Optional[ElementSet]
    antichain: Optional[Family]
    layer_profile: tuple[int, ...]
    c_check: tuple[LayerCheck, ...] = field(default=())

    @property
    def c_check_ok(self) -> bool:
        return all(chk.ok for chk in self.c_check)


class _WidthProbe:
    """Decides whether one absent set can join F without raising its width.

    Holds one maximum matching M of F's comparability split graph. Adding X
    adds a left copy xL and a right copy xR; the width is unchanged iff M
    grows, i.e. iff some augmenting path starts at xL or ends at xR.
    """

    def __init__(self, words):
        self.words = list(words)
        self.adj = comparability_adjacency(self.words)
        self.match_l, self.match_r = hopcroft_karp(self.adj, len(self.words))
        self.matched = sum(1 for v in self.match_l if v != UNMATCHED)
        zl, zr = alternating_reach(self.adj, self.match_l, self.match_r)
        self.free_reach = [self.words[u] for u in sorted(zl)]
        self.antichain = [self.words[u] for u in sorted(zl) if u not in zr]

    @property
    def width(self) -> int:
        return len(self.words) - self.matched

    def addable(self, x: int) -> bool:
        words = self.words
        # ends at xR: a left copy reachable from a free left vertex lies below X
        for w in self.free_reach:
            if w != x and w & x == w:
                return True
        # starts at xL
        seen = set()
        queue = deque()
        for j, w in enumerate(words):
            if w != x and x & w == x:
                seen.add(j)
                queue.append(j)
        while queue:
            j = queue.popleft()
            u = self.match_r[j]
            if u == UNMATCHED:
                return True
            wu = words[u]
            if wu != x and wu & x == wu:
                return True
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return False

    def blocked_by_antichain(self, x: int) -> bool:
        """True when a maximum antichain of F is entirely incomparable to X."""
        return all(w & x != w and w & x != x for w in self.antichain)


def _canonical_universe(n: int) -> list[int]:
    return sorted(range(1 << n), key=canonical_key)


def _c_check(n: int, k: int, counts) -> tuple[LayerCheck, ...]:
    if k < 2 or n < ell_of(k):
        return ()
    return tuple(
        LayerCheck(t, counts[t], counts[n - t], q) for t, q in enumerate(layer_quotas(n, k))
    )


def is_k_antichain_saturated(family: Family, k: int) -> SaturationReport:
    """Check k-antichain saturation; report the first addable set in canonical order."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = family.universe_size
    counts = family.layer_counts()
    checks = _c_check(n, k, counts)
    words = family.words
    if words:
        width, anti, _ = dilworth(family)
    else:
        width, anti = 0, Family(n)
    if width >= k:
        witness = Family(n, anti.words[:k])
        return SaturationReport(False, width, None, witness, counts, checks)

    present = set(words)
    absent = [x for x in _canonical_universe(n) if x not in present]
    if width < k - 1:
        culprit = ElementSet(absent[0], n) if absent else None
        return SaturationReport(culprit is None, width, culprit, None, counts, checks)

    probe = _WidthProbe(words)
    for x in absent:
        if counts[popcount(x)] >= k - 1:
            continue  # that layer is already a (k-1)-antichain
        if probe.blocked_by_antichain(x):
            continue
        if probe.addable(x):
            return SaturationReport(False, width, ElementSet(x, n), None, counts, checks)
    return SaturationReport(True, width, None, None, counts, checks)


def greedy_saturate(family: Family, k: int, order: str = "canonical", seed: int = 0) -> Family:
    """Add absent sets one at a time, keeping each that leaves the width below k.

    One pass suffices: a set rejected once stays rejected as the family grows.
    ``order`` is ``canonical`` or ``random`` (shuffled with ``seed``).
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = family.universe_size
    words = list(family.words)
    width = dilworth(family)[0] if words else 0
    if width >= k:
        raise PreconditionError(f"family already contains an antichain of size {width} >= {k}")
    present = set(words)
    candidates = [x for x in _canonical_universe(n) if x not in present]
    if order == "random":
        random.Random(seed).shuffle(candidates)
    elif order != "canonical":
        raise PreconditionError(f"unknown order {order!r}")

    probe = _WidthProbe(words) if words else None
    for x in candidates:
        if probe is None:
            keep = k >= 2
        else:
            keep = probe.width < k - 1 or probe.addable(x)
        if keep:
            words.append(x)
            probe = _WidthProbe(words)
    return Family(n, words)


# -- constructions ---------------------------------------------------------------

def _truncated_scd(a: int, max_size: int, markers: int) -> list[list[int]]:
    """Chains of a symmetric chain decomposition of 2^[a], cut at ``max_size``, plus marker bits."""
    if a == 0:
        return [[markers]]
    out = []
    for chain in symmetric_chain_decomposition(a).chains:
        kept = [w | markers for w in chain.words if popcount(w) <= max_size]
        if kept:
            out.append(kept)
    return out


def _general_scaffold(n: int, k: int, ell: int) -> list[list[int]]:
    """Bottom chains from the expansion of k - 1, each joined to its mirror image."""
    h = ell // 2
    if h == 0:
        bottoms = [[0]]
    else:
        exp = r_expansion(k - 1, h)
        bottoms = []
        markers = 0
        for a, r in exp.terms:
            bottoms.extend(_truncated_scd(a, r, markers))
            markers |= 1 << a  # element a + 1
    chains = []
    for chain in bottoms:
        top = [mirror_word(w, n) for w in reversed(chain)]
        chains.append(chain + top)
    return chains


def _nicecase_scaffold(n: int, k: int, ell: int) -> list[list[int]]:
    """Subsets of [ell] below the middle, complements above, joined through a middle matching."""
    h = ell // 2
    full = (1 << n) - 1
    ell_mask = (1 << ell) - 1
    bottoms = _truncated_scd(ell, h, 0)
    by_top = {c[-1]: c for c in bottoms}
    if ell % 2:
        low = full_layer_words(ell, h)
        high = full_layer_words(ell, h + 1)
        match = {low[i]: high[j] for i, j in layer_matching(ell, h, h + 1).pairs}
    else:
        match = {w: w for w in by_top}
    chains = []
    for x, chain in sorted(by_top.items()):
        z = ell_mask & ~match[x]
        top = [full & ~w for w in reversed(by_top[z])]
        chains.append(chain + top)
    return chains


def construct_saturated(n: int, k: int) -> tuple[Family, ChainCover]:
    """A minimum k-antichain saturated family of 2^[n] and its k - 1 skipless chains.

    Needs n >= 2 ell + 1, or n >= ell + 1 when k - 1 is a central binomial
    coefficient. The result is verified before it is returned.
    """
    if k < 1 or n < 1:
        raise PreconditionError("construct_saturated needs n >= 1 and k >= 1")
    if k == 1:
        return Family(n), ChainCover(n, ())
    prof = sat_value(n, k)
    ell = prof.ell
    nice = binom(ell, ell // 2) == k - 1
    if n >= 2 * ell + 1:
        scaffold = _general_scaffold(n, k, ell)
    elif nice and n >= ell + 1:
        scaffold = _nicecase_scaffold(n, k, ell)
    else:
        raise PreconditionError(
            f"no construction for n={n}, k={k}: needs n >= {2 * ell + 1}"
            + (f" (or n >= {ell + 1} here)" if nice else "")
        )
    cover = skipless_cover(ChainCover.of(n, scaffold))
    family = cover.family()
    report = is_k_antichain_saturated(family, k)
    if not report.is_saturated or len(family) != prof.value:
        raise ConstructionError(
            f"construction for n={n}, k={k} gave {len(family)} sets "
            f"(expected {prof.value}), saturated={report.is_saturated}",
            report=report,
        )
    return family, cover


# -- brute force -----------------------------------------------------------------

def oracle_min_sat(n: int, k: int) -> tuple[int, Family]:
    """Smallest k-antichain saturated family of 2^[n] by exhaustive search over all families."""
    if n < 1 or k < 1:
        raise PreconditionError("oracle needs n >= 1 and k >= 1")
    if n > ORACLE_MAX_N:
        raise CapacityError(f"brute force is limited to n <= {ORACLE_MAX_N}")
    sets = list(range(1 << n))
    N = len(sets)
    comp = [0] * N
    for i, a in enumerate(sets):
        for j, b in enumerate(sets):
            if i != j and (a & b == a or a & b == b):
                comp[i] |= 1 << j
    # width[S] = largest antichain inside the family S (bit i = sets[i])
    total = 1 << N
    width = [0] * total
    for fam in range(1, total):
        low = fam & -fam
        i = low.bit_length() - 1
        rest = fam ^ low
        with_i = 1 + width[rest & ~comp[i]]
        without = width[rest]
        width[fam] = with_i if with_i > without else without

    by_size: list[list[int]] = [[] for _ in range(N + 1)]
    for fam in range(total):
        if width[fam] < k:
            by_size[bin(fam).count("1")].append(fam)
    for size in range(N + 1):
        for fam in by_size[size]:
            if all(width[fam | (1 << i)] >= k for i in range(N) if not fam >> i & 1):
                return size, Family(n, (sets[i] for i in range(N) if fam >> i & 1))
    raise AssertionError("unreachable: greedy saturation always succeeds")
