import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from antisat import ChainCover, Family, dilworth, layer_matching, skipless_cover, symmetric_chain_decomposition
from antisat.chains import Chain, is_antichain
from antisat.colex import colex_segment
from antisat.errors import PreconditionError
from antisat.lattice import full_layer_words, popcount, word_of

from conftest import brute_width, random_chain_cover


def check_scd(cover: ChainCover, n: int) -> None:
    assert len(cover) == math.comb(n, n // 2)
    assert sorted(cover.family().words) == list(range(1 << n))
    for chain in cover.chains:
        assert chain.is_skipless
        assert popcount(chain.bottom) + popcount(chain.top) == n


class TestChainTypes:
    def test_chain_must_increase(self):
        with pytest.raises(PreconditionError):
            Chain((0b11, 0b1))
        with pytest.raises(PreconditionError):
            Chain((0b1, 0b1))
        with pytest.raises(PreconditionError):
            Chain(())

    def test_cover_rejects_overlap(self):
        with pytest.raises(PreconditionError):
            ChainCover.of(3, [[0, 0b1], [0b1, 0b11]])

    def test_cover_rejects_out_of_range(self):
        with pytest.raises(PreconditionError):
            ChainCover.of(2, [[0b100]])


class TestDilworth:
    def test_single_chain(self):
        width, anti, cover = dilworth(Family(4, [0, 0b1, 0b101, 0b1111]))
        assert width == 1 and len(anti) == 1 and len(cover) == 1

    def test_full_layer(self):
        width, anti, cover = dilworth(Family(4, full_layer_words(4, 2)))
        assert width == 6 and len(cover) == 6

    def test_empty_family(self):
        with pytest.raises(PreconditionError):
            dilworth(Family(3))

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=16))))
    def test_certificates_against_brute_width(self, case):
        n, words = case
        family = Family(n, words)
        width, anti, cover = dilworth(family)
        assert width == brute_width(words)
        assert len(anti) == width == len(cover)
        assert is_antichain(anti.words) and set(anti.words) <= set(words)
        assert cover.family() == family


class TestSymmetricChainDecomposition:
    def test_small_cases(self):
        assert [c.words for c in symmetric_chain_decomposition(1).chains] == [(0, 0b1)]
        assert sorted(c.words for c in symmetric_chain_decomposition(2).chains) == [(0, 0b1, 0b11), (0b10,)]
        assert len(symmetric_chain_decomposition(4)) == 6

    def test_zero(self):
        cover = symmetric_chain_decomposition(0)
        assert [c.words for c in cover.chains] == [(0,)]

    def test_negative(self):
        with pytest.raises(PreconditionError):
            symmetric_chain_decomposition(-1)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_invariants(self, n):
        check_scd(symmetric_chain_decomposition(n), n)


class TestLayerMatching:
    def test_sizes(self):
        assert len(layer_matching(4, 1, 2)) == 4
        assert len(layer_matching(5, 3, 2)) == 10
        assert len(layer_matching(3, 0, 1)) == 1

    def test_range(self):
        with pytest.raises(PreconditionError):
            layer_matching(4, 2, 4)
        with pytest.raises(PreconditionError):
            layer_matching(4, 2, 2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_edges_are_inclusions_and_saturate_smaller_side(self, n):
        for s in range(n + 1):
            for r in range(n + 1):
                try:
                    m = layer_matching(n, s, r)
                except PreconditionError:
                    continue
                low, high = full_layer_words(n, s), full_layer_words(n, r)
                assert len(m) == min(len(low), len(high))
                assert len({a for a, _ in m.pairs}) == len(m) == len({b for _, b in m.pairs})
                for a, b in m.pairs:
                    x, y = low[a], high[b]
                    assert x & y == x or x & y == y


class TestSkiplessCover:
    def test_forced_middle(self):
        out = skipless_cover(ChainCover.of(2, [[0, 0b11]]))
        assert len(out) == 1
        words = out.chains[0].words
        assert words[0] == 0 and words[2] == 0b11 and words[1] in (0b1, 0b10)

    def test_already_skipless(self):
        cover = symmetric_chain_decomposition(4)
        out = skipless_cover(cover)
        assert len(out) == len(cover) and out.family() == cover.family() and out.is_skipless

    def test_two_chains(self):
        cover = ChainCover.of(3, [[0, 0b111], [0b1, 0b101]])
        out = skipless_cover(cover)
        assert len(out) == 2 and out.is_skipless
        assert set(cover.family().words) <= set(out.family().words)

    def test_not_a_cover(self):
        with pytest.raises(PreconditionError):
            skipless_cover([[0, 1]])

    def test_random_covers(self):
        rng = random.Random(2)
        for _ in range(60):
            n = rng.randint(2, 7)
            chains = random_chain_cover(rng, n, 5)
            cover = ChainCover.of(n, chains)
            out = skipless_cover(cover)
            assert len(out) == len(cover) and out.is_skipless
            assert set(cover.family().words) <= set(out.family().words)

    def test_colex_segment_chains(self):
        family = colex_segment(8, 3)
        cover = ChainCover.of(family.universe_size, [[w] for w in family.words])
        assert skipless_cover(cover).family() == family
