"""Brute-force permutation oracles: inversion generating functions.

This module exists to be dumb and trustworthy.  It enumerates permutations
of [2n] = {1, ..., 2n} directly, pruning only on the defining prefix
predicates, and tallies q^inv(x) where inv counts pairs i < j with
x_i > x_j.

A permutation x_1 ... x_{2n} is *alternating* when
x_1 < x_2 > x_3 < ... < x_{2n}.  It is a *Salie permutation* when there is
an even index 2k (k >= 1) such that x_1 ... x_{2k} is alternating and
x_{2k} < x_{2k+1} < ... < x_{2n}; k = n (empty increasing tail) is allowed,
k = 0 is not.
"""

from __future__ import annotations

from itertools import combinations

from .poly import IntPoly

DEFAULT_MAX_N = 5


class SizeLimitExceeded(ValueError):
    """Enumeration request beyond the factorial-growth guard."""


def _guard(n: int, max_n: int) -> None:
    if n < 1:
        raise ValueError("half-size must be positive")
    if n > max_n:
        raise SizeLimitExceeded(
            f"half-size {n} exceeds the enumeration cap {max_n}; "
            f"(2n)! grows too fast to enumerate casually"
        )


def is_alternating(seq) -> bool:
    """Zigzag test x_1 < x_2 > x_3 < ... for a prefix of any length."""
    return all(
        seq[i - 1] < seq[i] if i % 2 == 1 else seq[i - 1] > seq[i]
        for i in range(1, len(seq))
    )


def is_salie(seq) -> bool:
    """Brute-force Salie predicate over all admissible split points."""
    half = len(seq) // 2
    for k in range(1, half + 1):
        if not is_alternating(seq[: 2 * k]):
            continue
        tail = seq[2 * k - 1 :]
        if all(tail[i] < tail[i + 1] for i in range(len(tail) - 1)):
            return True
    return False


def prefix_split_count(seq) -> int:
    """Number of k in 0..n with alternating prefix x_1..x_{2k} and strictly
    increasing tail x_{2k+1}..x_{2n} (no constraint at the junction).

    Every Salie permutation admits exactly two such splits; every other
    permutation admits none, which is what makes twice the Salie generating
    function expressible as a signed Gaussian-binomial sum.
    """
    half = len(seq) // 2
    count = 0
    for k in range(half + 1):
        if not is_alternating(seq[: 2 * k]):
            continue
        tail = seq[2 * k :]
        if all(tail[i] < tail[i + 1] for i in range(len(tail) - 1)):
            count += 1
    return count


def inversions(seq) -> int:
    """inv(x): the number of pairs i < j with x_i > x_j."""
    return sum(1 for a, b in combinations(seq, 2) if a > b)


def alternating_gf(n: int, max_n: int = DEFAULT_MAX_N) -> IntPoly:
    """Sum of q^inv(x) over alternating permutations of [2n].

    Equals (-1)^n E_{2n}(q).
    """
    _guard(n, max_n)
    size = 2 * n
    counts = [0] * (size * (size - 1) // 2 + 1)
    used = [False] * (size + 1)

    def place(pos: int, prev: int, inv: int) -> None:
        if pos > size:
            counts[inv] += 1
            return
        ascend = pos % 2 == 0
        for v in range(1, size + 1):
            if used[v]:
                continue
            if pos > 1 and (v > prev) != ascend:
                continue
            added = sum(1 for u in range(v + 1, size + 1) if used[u])
            used[v] = True
            place(pos + 1, v, inv + added)
            used[v] = False

    place(1, 0, 0)
    return IntPoly(counts)


def salie_perm_gf(n: int, max_n: int = DEFAULT_MAX_N) -> IntPoly:
    """Sum of q^inv(x) over Salie permutations of [2n], each counted once.

    Equals half of Sbar_{2n}(q).
    """
    _guard(n, max_n)
    size = 2 * n
    counts = [0] * (size * (size - 1) // 2 + 1)
    used = [False] * (size + 1)

    def place(pos: int, prev: int, alt_alive: bool, tail_alive: bool, inv: int) -> None:
        if pos > size:
            if alt_alive or tail_alive:
                counts[inv] += 1
            return
        ascend = pos % 2 == 0
        for v in range(1, size + 1):
            if used[v]:
                continue
            new_alt = alt_alive and (pos == 1 or (v > prev) == ascend)
            # The increasing tail may start at any odd position 2k+1 >= 3
            # after an alternating prefix of even length 2k.
            new_tail = v > prev and (
                tail_alive or (alt_alive and pos >= 3 and pos % 2 == 1)
            )
            if not (new_alt or new_tail):
                continue
            added = sum(1 for u in range(v + 1, size + 1) if used[u])
            used[v] = True
            place(pos + 1, v, new_alt, new_tail, inv + added)
            used[v] = False

    place(1, 0, True, False, 0)
    return IntPoly(counts)
