"""
Permutations as plain tuples of distinct positive integers.

A word like ``3547`` is a permutation of ``{3, 4, 5, 7}``; it is *normalized*
when its entry set is exactly ``{1, ..., n}``.  Everything here is a pure
function on tuples, so values can be shared freely between threads.

>>> normalize((3, 5, 4, 7))
(1, 3, 2, 4)
>>> format_perm(compose((2, 1, 3), (2, 3, 1)))
'132'
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from math import comb, factorial

__all__ = [
    "Perm", "parse_perm", "format_perm", "is_normalized", "identity",
    "normalize", "contains", "avoids", "avoidance_set", "compose", "invert",
    "reverse", "swap_entries", "descents", "catalan", "all_perms",
    "lehmer_rank", "lehmer_unrank",
]

# a word of distinct positive integers, in one-line notation
Perm = tuple[int, ...]

EMPTY_TOKENS = {"", "e", "ε", "()"}


def parse_perm(text: str) -> Perm:
    """Read ``"246153"`` or ``"2,4,6,1,5,3"`` (always accepted) into a tuple."""
    text = text.strip()
    if text in EMPTY_TOKENS:
        return ()
    if "," in text:
        entries = tuple(int(tok) for tok in text.split(","))
    elif text.isdigit():
        entries = tuple(int(ch) for ch in text)
    else:
        raise ValueError(f"cannot parse permutation {text!r}")
    if any(x < 1 for x in entries):
        raise ValueError(f"entries must be positive: {text!r}")
    if len(set(entries)) != len(entries):
        raise ValueError(f"entries must be distinct: {text!r}")
    return entries


def format_perm(p: Sequence[int]) -> str:
    """Digit string when every entry is a single digit, comma list otherwise."""
    if all(x <= 9 for x in p):
        return "".join(map(str, p))
    return ",".join(map(str, p))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_normalized(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def normalize(w: Sequence[int]) -> Perm:
    """Replace the i-th smallest entry by i."""
    ranks = {x: i for i, x in enumerate(sorted(w), 1)}
    return tuple(ranks[x] for x in w)


def _require_normalized(p: Sequence[int], what: str) -> None:
    if not is_normalized(p):
        raise ValueError(f"{what} must be normalized, got {format_perm(p)!r}")


def _neighbour_table(pattern: Perm) -> list[tuple[int | None, int | None]]:
    # for each k: the earlier pattern positions holding the closest smaller
    # and closest larger value; a candidate only has to fit between those two
    table = []
    for k, v in enumerate(pattern):
        below = [j for j in range(k) if pattern[j] < v]
        above = [j for j in range(k) if pattern[j] > v]
        lo = max(below, key=pattern.__getitem__) if below else None
        hi = min(above, key=pattern.__getitem__) if above else None
        table.append((lo, hi))
    return table


def contains(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """Whether some subsequence of ``sigma`` normalizes to ``tau``.

    Backtracking subsequence scan; a partial occurrence is abandoned as soon
    as its newest entry breaks order-isomorphism with the pattern prefix.
    """
    tau = tuple(tau)
    if not tau:
        raise ValueError("pattern must be nonempty")
    _require_normalized(tau, "pattern")
    m, n = len(tau), len(sigma)
    if m > n:
        return False
    table = _neighbour_table(tau)
    chosen = [0] * m

    def extend(k: int, start: int) -> bool:
        if k == m:
            return True
        lo, hi = table[k]
        low = chosen[lo] if lo is not None else 0
        high = chosen[hi] if hi is not None else None
        # leave room for the remaining m - k - 1 entries
        for pos in range(start, n - (m - k) + 1):
            v = sigma[pos]
            if v > low and (high is None or v < high):
                chosen[k] = v
                if extend(k + 1, pos + 1):
                    return True
        return False

    return extend(0, 0)


def avoids(sigma: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    return not any(contains(sigma, tau) for tau in patterns)


def all_perms(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def avoidance_set(n: int, patterns: Iterable[Sequence[int]]) -> set[Perm]:
    """Members of S_n avoiding every pattern (a filter over all of S_n)."""
    patterns = [tuple(t) for t in patterns]
    for t in patterns:
        if not t:
            raise ValueError("patterns must be nonempty")
        _require_normalized(t, "pattern")
    return {p for p in all_perms(n) if avoids(p, patterns)}


def compose(pi: Sequence[int], sigma: Sequence[int]) -> Perm:
    """Group product in S_n: entry i of the result is ``pi[sigma[i]]``."""
    if len(pi) != len(sigma):
        raise ValueError("compose needs permutations of equal length")
    _require_normalized(pi, "left factor")
    _require_normalized(sigma, "right factor")
    return tuple(pi[s - 1] for s in sigma)


def invert(pi: Sequence[int]) -> Perm:
    _require_normalized(pi, "permutation")
    inv = [0] * len(pi)
    for i, v in enumerate(pi, 1):
        inv[v - 1] = i
    return tuple(inv)


def reverse(pi: Sequence[int]) -> Perm:
    return tuple(reversed(pi))


def swap_entries(i: int, pi: Sequence[int]) -> Perm:
    """Exchange the positions of the values ``i`` and ``i + 1``."""
    n = len(pi)
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} out of range for length {n}")
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in pi)


def descents(pi: Sequence[int]) -> frozenset[int]:
    """Des(pi) as 1-indexed positions."""
    return frozenset(i for i in range(1, len(pi)) if pi[i - 1] > pi[i])


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def lehmer_rank(pi: Sequence[int]) -> int:
    """Lexicographic rank of a normalized permutation (0-based)."""
    n = len(pi)
    rank = 0
    for i, v in enumerate(pi):
        smaller_after = sum(1 for w in pi[i + 1:] if w < v)
        rank += smaller_after * factorial(n - 1 - i)
    return rank


def lehmer_unrank(rank: int, n: int) -> Perm:
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} out of range for n={n}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        q, rank = divmod(rank, factorial(i))
        out.append(pool.pop(q))
    return tuple(out)
