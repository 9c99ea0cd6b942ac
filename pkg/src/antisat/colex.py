"""Colex initial segments, cascade and r-expansions, and the c_t layer quotas."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import ArithmeticOverflowError, CapacityError, PreconditionError
from .lattice import MAX_UNIVERSE, Family

INT64_MAX = (1 << 63) - 1


def binom(a: int, b: int) -> int:
    """C(a, b) with a hard error outside the signed 64-bit range."""
    if b < 0 or a < 0 or b > a:
        return 0
    value = math.comb(a, b)
    if value > INT64_MAX:
        raise ArithmeticOverflowError(f"C({a}, {b}) exceeds 2^63 - 1")
    return value


def _max_top(m: int, r: int) -> int:
    """Largest j with C(j, r) <= m (needs m >= 1, r >= 1)."""
    lo, step = r, 1
    while math.comb(lo + step, r) <= m:
        lo += step
        step *= 2
    hi = lo + step  # C(hi, r) > m
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, r) <= m:
            lo = mid
        else:
            hi = mid
    binom(lo, r)
    return lo


@dataclass(frozen=True)
class CascadeExpansion:
    """``m = sum C(a_i, i)`` over terms (a_i, i), i descending."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        idx = [i for _, i in self.terms]
        tops = [a for a, _ in self.terms]
        if not self.terms or idx != list(range(idx[0], idx[0] - len(idx), -1)) or idx[-1] < 1:
            raise PreconditionError(f"cascade indices must run r, r-1, ..., s >= 1: {idx}")
        if any(x <= y for x, y in zip(tops, tops[1:])):
            raise PreconditionError(f"cascade tops must strictly decrease: {tops}")
        if any(a < i for a, i in self.terms):
            raise PreconditionError("cascade needs a_i >= i")

    @property
    def value(self) -> int:
        return sum(binom(a, i) for a, i in self.terms)


@dataclass(frozen=True)
class RExpansion:
    """``m = sum C(a_j, r_j)`` with r_j and a_j strictly decreasing and r_j <= ceil(a_j / 2)."""

    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        rs = [r for _, r in self.terms]
        tops = [a for a, _ in self.terms]
        if not self.terms or rs[-1] < 1 or any(x <= y for x, y in zip(rs, rs[1:])):
            raise PreconditionError(f"r-expansion indices must strictly decrease to >= 1: {rs}")
        if tops[-1] < 1 or any(x <= y for x, y in zip(tops, tops[1:])):
            raise PreconditionError(f"r-expansion tops must strictly decrease to >= 1: {tops}")
        if any(r > (a + 1) // 2 for a, r in self.terms):
            raise PreconditionError("r-expansion needs r_j <= ceil(a_j / 2)")

    @property
    def value(self) -> int:
        return sum(binom(a, r) for a, r in self.terms)


@dataclass(frozen=True)
class SatProfile:
    k: int
    ell: int
    c: tuple[int, ...]
    n: Optional[int] = None
    value: Optional[int] = None
    status: Optional[str] = None


STATUSES = ("full_powerset", "lower_bound", "exact_nicecase", "exact")


def _colex_universe(m: int, t: int) -> int:
    n = max(t, 1)
    while binom(n, t) < m:
        n += 1
        if n > MAX_UNIVERSE:
            raise CapacityError(f"colex segment of size {m} on layer {t} needs more than {MAX_UNIVERSE} elements")
    return n


def colex_segment(m: int, t: int, n: Optional[int] = None) -> Family:
    """The first ``m`` sets of layer ``t`` in colex order.

    The universe defaults to the smallest [N] whose layer t holds m sets.
    """
    if m < 0 or t < 0:
        raise PreconditionError("m and t must be nonnegative")
    if t > MAX_UNIVERSE or (t > 0 and binom(MAX_UNIVERSE, t) < m) or (t == 0 and m > 1):
        raise CapacityError(f"no universe of size <= {MAX_UNIVERSE} has {m} sets in layer {t}")
    needed = _colex_universe(m, t)
    if n is None:
        n = needed
    elif n < needed:
        raise PreconditionError(f"universe {n} too small for C({m}, {t})")
    words = []
    if m:
        w = (1 << t) - 1
        words.append(w)
        while len(words) < m:
            # Gosper: next word with the same popcount
            low = w & -w
            ripple = w + low
            w = ripple | (((w ^ ripple) >> 2) // low)
            words.append(w)
    return Family(n, words)


def cascade(m: int, r: int) -> CascadeExpansion:
    """Greedy r-cascade: repeatedly take the largest C(a, i) <= remainder."""
    if m < 1 or r < 1:
        raise PreconditionError("cascade needs m >= 1 and r >= 1")
    terms = []
    rest, i = m, r
    while rest:
        a = _max_top(rest, i)
        terms.append((a, i))
        rest -= binom(a, i)
        i -= 1
    return CascadeExpansion(tuple(terms))


def shadow_size_colex(m: int, r: int) -> int:
    """Size of the shadow of the first m sets of layer r."""
    return sum(binom(a, i - 1) for a, i in cascade(m, r).terms)


def nu_colex(m: int, r: int) -> int:
    """Matching number between a colex initial segment and its shadow, in closed form.

    Terms above the largest index with i > ceil(a_i / 2) are matched down in
    full; from that index on the segment itself is the bottleneck.
    """
    terms = cascade(m, r).terms
    bad = [pos for pos, (a, i) in enumerate(terms) if i > (a + 1) // 2]
    if not bad:
        return sum(binom(a, i - 1) for a, i in terms)
    j = bad[0]  # terms run in descending index, so this is the largest bad index
    return sum(binom(a, i - 1) for a, i in terms[:j]) + sum(binom(a, i) for a, i in terms[j:])


def r_expansion(m: int, r: int) -> RExpansion:
    if r < 1:
        raise PreconditionError("r must be at least 1")
    if m < binom(2 * r - 1, r):
        raise PreconditionError(f"r-expansion needs m >= C({2 * r - 1}, {r})")
    terms = []
    rest = m
    while True:
        a = _max_top(rest, r)
        terms.append((a, r))
        rest -= binom(a, r)
        if rest == 0:
            break
        r = max(j for j in range(1, r) if binom(2 * j - 1, j) <= rest)
    return RExpansion(tuple(terms))


def shift_index(exp: RExpansion, t: int) -> int:
    """The 1-based i with r_i + (i - 1) >= t > r_{i+1} + i, taking r_{s+1} = -s - 1."""
    rs = [r for _, r in exp.terms]
    s = len(rs)
    rs.append(-s - 1)
    for i in range(1, s + 1):
        if rs[i - 1] + (i - 1) >= t > rs[i] + i:
            return i
    raise PreconditionError(f"no shift index for t={t}")


def t_expansion_shift(exp: RExpansion, t: int) -> RExpansion:
    """Lower the first i indices of an r-expansion to t, t-1, ..., t-i+1.

    The result is the t-expansion of the shifted sum. The case i = s has no
    untouched tail and is rejected.
    """
    r = exp.terms[0][1]
    if not 1 <= t <= r:
        raise PreconditionError(f"t must lie in [1, {r}]")
    i = shift_index(exp, t)
    if i == len(exp.terms):
        raise PreconditionError("shift index equals the expansion length; no tail to keep")
    head = tuple((a, t - j) for j, (a, _) in enumerate(exp.terms[:i]))
    return RExpansion(head + exp.terms[i:])


def ell_of(k: int) -> int:
    """Smallest j with C(j, floor(j/2)) >= k - 1."""
    j = 0
    while binom(j, j // 2) < k - 1:
        j += 1
    return j


def c_sequence(k: int) -> SatProfile:
    """ell and the layer quotas c_0..c_{ell//2}: top quota k-1, then c_t = nu_colex(c_{t+1}, t+1)."""
    if k < 2:
        raise PreconditionError("c_sequence needs k >= 2")
    ell = ell_of(k)
    h = ell // 2
    c = [0] * (h + 1)
    c[h] = k - 1
    for t in range(h - 1, -1, -1):
        c[t] = nu_colex(c[t + 1], t + 1)
    return SatProfile(k=k, ell=ell, c=tuple(c))
