"""
Polyurethane toggles on S_n, their orbits, and the sliding operators.

``toggle(i, p)`` swaps the values i and i+1 exactly when some entry larger
than i+1 sits strictly between them.  Orbits of the group generated by the
toggles are the skeleton classes of S_n; each contains one 231-avoider
(``swd``) and one 132-avoider (``swu``).
"""

from __future__ import annotations

from collections.abc import Sequence

from .perm import (
    Perm, all_perms, compose, invert, is_normalized, lehmer_rank,
    swap_entries,
)
from .trees import BinaryTree, Node, inorder, stack_sort, tree_of

__all__ = [
    "MAX_ORBIT_N", "toggle", "toggle_acts", "orbit", "orbits",
    "orbit_count", "swd", "swu", "swd_formula",
]

MAX_ORBIT_N = 10


def toggle_acts(i: int, p: Sequence[int]) -> bool:
    """Whether an entry larger than i+1 lies strictly between i and i+1."""
    n = len(p)
    if not 1 <= i <= n - 1:
        raise ValueError(f"toggle index {i} out of range for n={n}")
    a, b = p.index(i), p.index(i + 1)
    if a > b:
        a, b = b, a
    return any(x > i + 1 for x in p[a + 1:b])


def toggle(i: int, p: Sequence[int]) -> Perm:
    if toggle_acts(i, p):
        return swap_entries(i, p)
    return tuple(p)


def _check_n(n: int) -> None:
    if n > MAX_ORBIT_N:
        raise ValueError(f"orbit sweeps are capped at n={MAX_ORBIT_N}")


def orbit(p: Sequence[int]) -> set[Perm]:
    """Closure of ``p`` under all toggles (breadth-first, ranks as keys)."""
    p = tuple(p)
    if not is_normalized(p):
        raise ValueError("orbit needs a normalized permutation")
    n = len(p)
    _check_n(n)
    seen = {lehmer_rank(p)}
    frontier = [p]
    members = [p]
    while frontier:
        nxt = []
        for q in frontier:
            for i in range(1, n):
                r = toggle(i, q)
                key = lehmer_rank(r)
                if key not in seen:
                    seen.add(key)
                    nxt.append(r)
                    members.append(r)
        frontier = nxt
    return set(members)


def orbits(n: int) -> list[list[Perm]]:
    """The orbit partition of S_n; each orbit sorted, orbits ordered by
    their least member."""
    _check_n(n)
    assigned: set[int] = set()
    out = []
    for p in all_perms(n):
        r = lehmer_rank(p)
        if r in assigned:
            continue
        block = orbit(p)
        assigned.update(lehmer_rank(q) for q in block)
        out.append(sorted(block))
    return out


def orbit_count(n: int) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return len(orbits(n))


def _relabel(t: BinaryTree, lo: int, left_low: bool) -> BinaryTree:
    # labels lo .. lo+size-1, root takes the largest
    if t is None:
        return None
    left_size = len(inorder(t.left))
    right_size = len(inorder(t.right))
    top = lo + left_size + right_size
    if left_low:
        left = _relabel(t.left, lo, True)
        right = _relabel(t.right, lo + left_size, True)
    else:
        right = _relabel(t.right, lo, False)
        left = _relabel(t.left, lo + right_size, False)
    return Node(top, left, right)


def swd(p: Sequence[int]) -> Perm:
    """The 231-avoiding permutation with the skeleton of ``p``."""
    return inorder(_relabel(tree_of(tuple(p)), 1, True))


def swu(p: Sequence[int]) -> Perm:
    """The 132-avoiding permutation with the skeleton of ``p``."""
    return inorder(_relabel(tree_of(tuple(p)), 1, False))


def swd_formula(p: Sequence[int]) -> Perm:
    """swd computed in the group S_n as s(p)^-1 . p."""
    return compose(invert(stack_sort(p)), p)

