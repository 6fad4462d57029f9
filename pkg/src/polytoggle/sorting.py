"""
Preimages under the stack-sorting map and its twisted compositions.

Everything rests on one split rule: ``s(L M R) = s(L) s(R) M`` with ``M``
the maximum, so a word ``t`` has preimages only if it ends in its maximum,
and then each way of cutting ``t[:-1] = A B`` contributes
``s^-1(A) x s^-1(B)`` (glued back as ``L M R``).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .perm import Perm, all_perms, format_perm, is_normalized, normalize, reverse
from .trees import is_canonical, stack_sort, tree_of

__all__ = [
    "S", "REV", "TwistSpec", "NotSortedError", "SearchCapExceeded",
    "fertility", "fertility_brute", "s_preimages", "apply_twist",
    "twist_preimages", "twist_fertility", "is_sorted", "deficiency",
    "canonical_preimage", "chi", "family_A", "A_SEEDS",
]

S = "s"
REV = "rev"


class NotSortedError(ValueError):
    """The permutation has no preimage under the stack-sorting map."""


class SearchCapExceeded(RuntimeError):
    """A bounded search ran past its cap without finding an answer."""


@dataclass(frozen=True)
class TwistSpec:
    """A composition of ``s`` and ``rev`` whose first-applied factor is ``s``.

    ``word`` lists the factors in application order.  The text form writes
    the composition as usual, so ``"rs"`` means rev after s and its last
    character must be ``"s"``.
    """

    word: tuple[str, ...]

    def __post_init__(self):
        if not self.word:
            raise ValueError("a twisted operator needs at least one factor")
        if self.word[0] != S:
            raise ValueError("the first-applied factor must be s")
        if any(v not in (S, REV) for v in self.word):
            raise ValueError(f"unknown factor in {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> "TwistSpec":
        text = text.strip()
        if not text or set(text) - {"s", "r"}:
            raise ValueError(f"twist spec must be a word over 's','r': {text!r}")
        if text[-1] != "s":
            raise ValueError(f"twist spec must end in 's': {text!r}")
        return cls(tuple(S if c == "s" else REV for c in reversed(text)))

    def __str__(self) -> str:
        return "".join("s" if v == S else "r" for v in reversed(self.word))


TwistLike = Union[TwistSpec, str]


def _spec(t: TwistLike) -> TwistSpec:
    return t if isinstance(t, TwistSpec) else TwistSpec.parse(t)


# lru_cache does its own locking, so concurrent callers see one logical memo
@lru_cache(maxsize=None)
def _fertility_normalized(t: Perm) -> int:
    if not t:
        return 1
    n = len(t)
    if t[-1] != n:
        return 0
    head = t[:-1]
    total = 0
    for k in range(n):
        a, b = head[:k], head[k:]
        fa = _fertility_normalized(normalize(a))
        if fa:
            total += fa * _fertility_normalized(normalize(b))
    return total


def fertility(w: Sequence[int]) -> int:
    """|s^-1(w)|; depends only on the normalization of ``w``."""
    return _fertility_normalized(normalize(w))


def fertility_brute(w: Sequence[int]) -> int:
    """Count by applying s to every permutation of the same length."""
    target = normalize(w)
    return sum(1 for p in all_perms(len(target)) if stack_sort(p) == target)


def s_preimages(w: Sequence[int]) -> set[Perm]:
    """All words sigma (on the entries of ``w``) with s(sigma) = w."""
    memo: dict[Perm, list[Perm]] = {}

    def pre(t: Perm) -> list[Perm]:
        if t in memo:
            return memo[t]
        if not t:
            return [()]
        m = max(t)
        out = []
        if t[-1] == m:
            head = t[:-1]
            for k in range(len(head) + 1):
                lefts = pre(head[:k])
                if not lefts:
                    continue
                rights = pre(head[k:])
                out.extend(l + (m,) + r for l in lefts for r in rights)
        memo[t] = out
        return out

    return set(pre(tuple(w)))


def apply_twist(spec: TwistLike, p: Sequence[int]) -> Perm:
    p = tuple(p)
    for v in _spec(spec).word:
        p = stack_sort(p) if v == S else reverse(p)
    return p


def _as_targets(target) -> set[Perm]:
    if isinstance(target, tuple) and all(isinstance(x, int) for x in target):
        return {target}
    return {tuple(t) for t in target}


def twist_preimages(spec: TwistLike, target, method: str = "layers") -> set[Perm]:
    """Every sigma in S_n with ``apply_twist(spec, sigma)`` in ``target``.

    ``target`` is one permutation or a collection of them, all of length n.
    ``method="layers"`` peels the factors off from the last-applied one;
    ``method="filter"`` scans S_n and is meant as an oracle for small n.
    """
    spec = _spec(spec)
    targets = _as_targets(target)
    if not targets:
        return set()
    lengths = {len(t) for t in targets}
    if len(lengths) != 1:
        raise ValueError("targets must share a common length")
    if not all(is_normalized(t) for t in targets):
        raise ValueError("targets must be normalized")
    if method == "filter":
        (n,) = lengths
        return {p for p in all_perms(n) if apply_twist(spec, p) in targets}
    if method != "layers":
        raise ValueError(f"unknown method {method!r}")
    layer = targets
    for v in reversed(spec.word):
        if v == REV:
            layer = {reverse(t) for t in layer}
        else:
            layer = set().union(*(s_preimages(t) for t in layer))
    return layer


@lru_cache(maxsize=None)
def _twist_fertility(word: tuple[str, ...], p: Perm) -> int:
    return len(twist_preimages(TwistSpec(word), p))


def twist_fertility(spec: TwistLike, p: Sequence[int]) -> int:
    """|spec^-1(p)|, the higher-order twisted fertility."""
    return _twist_fertility(_spec(spec).word, normalize(p))


def is_sorted(p: Sequence[int]) -> bool:
    return fertility(p) > 0


def deficiency(p: Sequence[int], cap: int | None = None) -> int:
    """Least l >= 0 such that ``p (n+1) ... (n+l)`` is sorted.

    The search stops at ``cap`` (default n) and raises rather than guessing.
    """
    p = tuple(p)
    if not p:
        raise ValueError("deficiency is defined for nonempty permutations")
    n = len(p)
    cap = n if cap is None else cap
    for ell in range(cap + 1):
        if fertility(p + tuple(range(n + 1, n + ell + 1))):
            return ell
    raise SearchCapExceeded(f"no sorted extension of {format_perm(p)} with l <= {cap}")


def canonical_preimage(p: Sequence[int]) -> Perm:
    """The unique preimage of ``p`` whose decreasing binary tree is canonical."""
    pre = s_preimages(p)
    if not pre:
        raise NotSortedError(f"{format_perm(p)} is not sorted")
    hits = [q for q in pre if is_canonical(tree_of(q))]
    if len(hits) != 1:
        raise RuntimeError(
            f"{format_perm(p)} has {len(hits)} canonical preimages, expected exactly 1")
    return hits[0]


def chi(m: int, p: Sequence[int]) -> Perm:
    """Wrap ``p`` in the alternating frame n+k: odd k descending on the left,
    even k ascending on the right, for k = 1..m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = len(p)
    left = tuple(n + k for k in range(m, 0, -1) if k % 2 == 1)
    right = tuple(n + k for k in range(2, m + 1, 2))
    return left + tuple(p) + right


A_SEEDS: tuple[Perm, ...] = ((1,), (1, 2), (1, 4, 2, 3), (2, 1, 4, 3))


def family_A(max_len: int) -> set[Perm]:
    """Members of the chi-family over the four seeds with length <= max_len."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    out = set()
    for seed in A_SEEDS:
        for m in range(max_len - len(seed) + 1):
            out.add(chi(m, seed))
    return out
