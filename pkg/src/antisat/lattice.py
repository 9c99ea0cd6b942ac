"""Subsets of [n] as bit words, families in canonical order, shadows and colex.

A set X of [n] is stored as an int whose bit ``i - 1`` is set iff ``i`` is in X.
Within one layer the colex order coincides with the integer order of these
words, which is what makes the canonical (cardinality, colex) order cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .errors import PreconditionError, UniverseError

MAX_UNIVERSE = 63


def popcount(word: int) -> int:
    return bin(word).count("1")


def canonical_key(word: int) -> tuple[int, int]:
    """Sort key for the (cardinality, colex) order."""
    return (popcount(word), word)


def word_of(elements: Iterable[int]) -> int:
    word = 0
    for i in elements:
        word |= 1 << (i - 1)
    return word


def elements_of(word: int) -> tuple[int, ...]:
    out = []
    i = 1
    while word:
        if word & 1:
            out.append(i)
        word >>= 1
        i += 1
    return tuple(out)


def _check_universe(n: int) -> None:
    if not isinstance(n, int) or n < 1 or n > MAX_UNIVERSE:
        raise PreconditionError(f"universe size must be in [1, {MAX_UNIVERSE}], got {n!r}")


@dataclass(frozen=True)
class ElementSet:
    """A subset of [n] packed into a bit word."""

    word: int
    universe_size: int

    def __post_init__(self):
        _check_universe(self.universe_size)
        if self.word < 0 or self.word >> self.universe_size:
            raise PreconditionError(
                f"word {self.word:#x} has bits outside [1, {self.universe_size}]"
            )

    @classmethod
    def from_elements(cls, elements: Iterable[int], n: int) -> "ElementSet":
        elements = list(elements)
        for i in elements:
            if not 1 <= i <= n:
                raise PreconditionError(f"element {i} outside [1, {n}]")
        return cls(word_of(elements), n)

    def elements(self) -> tuple[int, ...]:
        return elements_of(self.word)

    def __len__(self) -> int:
        return popcount(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements())

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.universe_size and bool(self.word >> (i - 1) & 1)

    def issubset(self, other: "ElementSet") -> bool:
        _same_universe(self, other)
        return self.word & ~other.word == 0

    def __str__(self) -> str:
        return format_word(self.word)


def format_word(word: int) -> str:
    """Render as ``1,2,5``; the empty set is ``-``."""
    if word == 0:
        return "-"
    return ",".join(map(str, elements_of(word)))


def _same_universe(a: ElementSet, b: ElementSet) -> None:
    if a.universe_size != b.universe_size:
        raise UniverseError(f"universe mismatch: {a.universe_size} vs {b.universe_size}")


SetLike = Union[ElementSet, int]


class Family:
    """Deduplicated collection of subsets of [n] in (cardinality, colex) order.

    Construction accepts ints or ElementSets; duplicates are merged. Instances
    are immutable and hashable.
    """

    __slots__ = ("_n", "_words", "_index")

    def __init__(self, n: int, members: Iterable[SetLike] = ()):
        _check_universe(n)
        seen = set()
        for m in members:
            if isinstance(m, ElementSet):
                if m.universe_size != n:
                    raise UniverseError(f"member over universe {m.universe_size} added to family over {n}")
                w = m.word
            else:
                w = int(m)
                if w < 0 or w >> n:
                    raise PreconditionError(f"word {w:#x} has bits outside [1, {n}]")
            seen.add(w)
        self._n = n
        self._words = tuple(sorted(seen, key=canonical_key))
        self._index = None

    @property
    def universe_size(self) -> int:
        return self._n

    @property
    def words(self) -> tuple[int, ...]:
        return self._words

    @property
    def members(self) -> tuple[ElementSet, ...]:
        return tuple(ElementSet(w, self._n) for w in self._words)

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[ElementSet]:
        n = self._n
        return (ElementSet(w, n) for w in self._words)

    def __contains__(self, item: SetLike) -> bool:
        if self._index is None:
            self._index = frozenset(self._words)
        if isinstance(item, ElementSet):
            return item.universe_size == self._n and item.word in self._index
        return item in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self._n == other._n and self._words == other._words

    def __hash__(self) -> int:
        return hash((self._n, self._words))

    def __repr__(self) -> str:
        body = " ".join("{" + format_word(w) + "}" for w in self._words[:8])
        more = " ..." if len(self._words) > 8 else ""
        return f"Family(n={self._n}, size={len(self)}: {body}{more})"

    def union(self, other: Iterable[SetLike]) -> "Family":
        return Family(self._n, [*self._words, *other])

    def without(self, item: SetLike) -> "Family":
        w = item.word if isinstance(item, ElementSet) else item
        return Family(self._n, (x for x in self._words if x != w))

    def layer_counts(self) -> tuple[int, ...]:
        counts = [0] * (self._n + 1)
        for w in self._words:
            counts[popcount(w)] += 1
        return tuple(counts)


def full_layer_words(n: int, t: int) -> list[int]:
    """All t-subsets of [n] as words, in colex order."""
    if t < 0 or t > n:
        return []
    return sorted(word_of(c) for c in combinations(range(1, n + 1), t))


def power_set(n: int) -> Family:
    _check_universe(n)
    return Family(n, range(1 << n))


def layer(family: Family, t: int) -> Family:
    """Members of ``family`` with exactly ``t`` elements."""
    n = family.universe_size
    if not 0 <= t <= n:
        raise PreconditionError(f"layer {t} outside [0, {n}]")
    return Family(n, (w for w in family.words if popcount(w) == t))


def _single_layer(family: Family) -> int:
    sizes = {popcount(w) for w in family.words}
    if len(sizes) > 1:
        raise PreconditionError(f"family mixes layers {sorted(sizes)}")
    return sizes.pop() if sizes else -1


def shadow_words(words: Sequence[int]) -> set[int]:
    out = set()
    for w in words:
        rest = w
        while rest:
            low = rest & -rest
            out.add(w ^ low)
            rest ^= low
    return out


def shadow(family: Family) -> Family:
    """All sets obtained by deleting one element from a member."""
    t = _single_layer(family)
    if t == 0:
        raise PreconditionError("the shadow of layer 0 is undefined")
    return Family(family.universe_size, shadow_words(family.words))


def colex_compare(a: ElementSet, b: ElementSet) -> int:
    """-1, 0 or 1 as ``a`` precedes, equals or follows ``b`` in colex.

    ``a < b`` iff the largest element of the symmetric difference lies in ``b``;
    on words that is plain integer comparison.
    """
    _same_universe(a, b)
    return (a.word > b.word) - (a.word < b.word)


def mirror_word(word: int, n: int) -> int:
    # reverse the n-bit word, then complement within [n]
    rev = int(format(word, f"0{n}b")[::-1], 2)
    return rev ^ ((1 << n) - 1)


def mirror(a: ElementSet) -> ElementSet:
    """The order-reversing involution ``A -> {i in [n] : n + 1 - i not in A}``."""
    return ElementSet(mirror_word(a.word, a.universe_size), a.universe_size)
