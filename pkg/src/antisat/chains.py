"""Chains, Dilworth duality, symmetric chain decompositions and skipless covers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionError
from .lattice import Family, canonical_key, full_layer_words, popcount, _check_universe
from .matching import (
    LayeredCoverInstance,
    Matching,
    chains_from_matching,
    comparability_adjacency,
    hopcroft_karp,
    max_antichain_indices,
    min_path_cover,
)


@dataclass(frozen=True)
class Chain:
    """Sets of a common universe, each strictly containing its predecessor."""

    words: tuple[int, ...]

    def __post_init__(self):
        if not self.words:
            raise PreconditionError("a chain needs at least one set")
        for a, b in zip(self.words, self.words[1:]):
            if a == b or a & b != a:
                raise PreconditionError(f"{a:#x} is not a proper subset of {b:#x}")

    @property
    def is_skipless(self) -> bool:
        return all(popcount(b) == popcount(a) + 1 for a, b in zip(self.words, self.words[1:]))

    @property
    def bottom(self) -> int:
        return self.words[0]

    @property
    def top(self) -> int:
        return self.words[-1]

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)


@dataclass(frozen=True)
class ChainCover:
    universe_size: int
    chains: tuple[Chain, ...]

    def __post_init__(self):
        _check_universe(self.universe_size)
        seen = set()
        limit = 1 << self.universe_size
        for c in self.chains:
            for w in c.words:
                if w >= limit:
                    raise PreconditionError(f"word {w:#x} outside universe {self.universe_size}")
                if w in seen:
                    raise PreconditionError(f"set {w:#x} appears in two chains")
                seen.add(w)

    @classmethod
    def of(cls, n: int, chains: Iterable[Sequence[int]]) -> "ChainCover":
        return cls(n, tuple(Chain(tuple(c)) for c in chains))

    def __len__(self) -> int:
        return len(self.chains)

    def family(self) -> Family:
        return Family(self.universe_size, (w for c in self.chains for w in c.words))

    @property
    def is_skipless(self) -> bool:
        return all(c.is_skipless for c in self.chains)


def dilworth(family: Family) -> tuple[int, Family, ChainCover]:
    """Width of ``family`` with a maximum antichain and a minimum chain partition.

    Both certificates come from one maximum matching of the comparability
    split graph, so their sizes agree by construction.
    """
    words = family.words
    if not words:
        raise PreconditionError("dilworth needs a nonempty family")
    adj = comparability_adjacency(words)
    match_l, match_r = hopcroft_karp(adj, len(words))
    chains = chains_from_matching(words, match_l, match_r)
    anti = max_antichain_indices(words, adj, match_l, match_r)
    assert len(anti) == len(chains)
    n = family.universe_size
    cover = ChainCover.of(n, ([words[i] for i in c] for c in chains))
    return len(chains), Family(n, (words[i] for i in anti)), cover


def is_antichain(words: Sequence[int]) -> bool:
    return not any(a != b and a & b == a for a in words for b in words)


def _unmatched_positions(word: int, n: int) -> list[int]:
    """Bracket rule: i not in X opens, i in X closes; return unmatched positions."""
    opens = []
    unmatched = []
    for i in range(n):
        if word >> i & 1:
            if opens:
                opens.pop()
            else:
                unmatched.append(i)
        else:
            opens.append(i)
    return sorted(unmatched + opens)


def symmetric_chain_decomposition(n: int) -> ChainCover:
    """Greene-Kleitman partition of 2^[n] into C(n, n//2) skipless symmetric chains.

    n = 0 is the degenerate single chain of the empty set; it is returned over
    universe 1 with the chain (empty set,), since a universe must be nonempty.
    """
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    if n == 0:
        return ChainCover.of(1, [(0,)])
    _check_universe(n)
    chains = []
    for x in range(1 << n):
        free = _unmatched_positions(x, n)
        if any(x >> i & 1 for i in free):
            continue  # not a chain bottom
        chain = [x]
        w = x
        for i in free:
            w |= 1 << i
            chain.append(w)
        chains.append(chain)
    chains.sort(key=lambda c: canonical_key(c[0]))
    return ChainCover.of(n, chains)


def layer_matching(n: int, s: int, r: int) -> Matching:
    """Inclusion matching between full layers s and r saturating the smaller one.

    Pairs are (index into layer s, index into layer r), both in colex order.
    """
    half_floor, half_ceil = n // 2, (n + 1) // 2
    if not (0 <= s < r <= half_ceil or half_floor <= r < s <= n):
        raise PreconditionError(f"layers ({s}, {r}) outside the matchable range for n={n}")
    left = {w: i for i, w in enumerate(full_layer_words(n, s))}
    right = {w: i for i, w in enumerate(full_layer_words(n, r))}
    pairs = []
    for chain in symmetric_chain_decomposition(n).chains:
        a = b = None
        for w in chain.words:
            if w in left:
                a = left[w]
            elif w in right:
                b = right[w]
        if a is not None and b is not None:
            pairs.append((a, b))
    pairs.sort()
    return Matching(tuple(pairs))


def skipless_cover(cover: ChainCover) -> ChainCover:
    """Replace m disjoint chains by m disjoint skipless chains covering the same sets.

    Extra sets may be inserted; as few as the flow finds optimal. Disjointness
    of the input is checked by ChainCover itself.
    """
    if not isinstance(cover, ChainCover):
        raise PreconditionError("skipless_cover takes a ChainCover")
    if not cover.chains:
        return cover
    inst = LayeredCoverInstance(cover.family(), len(cover.chains))
    paths = min_path_cover(inst)
    return ChainCover.of(cover.universe_size, paths)
