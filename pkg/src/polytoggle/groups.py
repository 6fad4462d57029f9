"""
The toggle group as a permutation group on the n! points of S_n.

Points are lexicographic (Lehmer) ranks, so a group element is a tuple
``img`` with ``img[x]`` the image of point ``x``.  Products are written in
application order: ``mul(a, b)`` applies ``a`` first.

The order comes from a deterministic Schreier-Sims: Schreier generators are
sifted level by level from the deepest, a nontrivial residue becomes a new
strong generator (restarting at the level where it dropped out), and the
order is the product of the basic orbit lengths.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import factorial, prod

from .perm import all_perms, lehmer_rank
from .toggles import toggle

__all__ = [
    "PointPerm", "GroupHandle", "MAX_GROUP_N", "toggle_as_point_perm",
    "toggle_generators", "group_order", "evaluate_word", "verify_relation",
    "orbit_count_group", "element_order", "standard_relations",
]

PointPerm = tuple[int, ...]

MAX_GROUP_N = 7


def _identity(degree: int) -> PointPerm:
    return tuple(range(degree))


def mul(a: PointPerm, b: PointPerm) -> PointPerm:
    return tuple(b[x] for x in a)


def inv(a: PointPerm) -> PointPerm:
    out = [0] * len(a)
    for x, y in enumerate(a):
        out[y] = x
    return tuple(out)


def _is_identity(a: PointPerm) -> bool:
    return all(x == y for x, y in enumerate(a))


def toggle_as_point_perm(i: int, n: int) -> PointPerm:
    if not 1 <= n <= 8:
        raise ValueError("toggle tables are limited to 1 <= n <= 8")
    if not 1 <= i <= n - 1:
        raise ValueError(f"toggle index {i} out of range for n={n}")
    return tuple(lehmer_rank(toggle(i, p)) for p in all_perms(n))


def toggle_generators(n: int) -> list[PointPerm]:
    return [toggle_as_point_perm(i, n) for i in range(1, n)]


@dataclass
class _Level:
    base_point: int
    # strong generators fixing every earlier base point
    gens: list[PointPerm] = field(default_factory=list)
    # point -> element carrying base_point to it
    transversal: dict[int, PointPerm] = field(default_factory=dict)
    # (orbit point, generator index) pairs whose Schreier generator sifted
    checked: set[tuple[int, int]] = field(default_factory=set)

    def close_orbit(self) -> None:
        todo = list(self.transversal)
        while todo:
            p = todo.pop()
            up = self.transversal[p]
            for h in self.gens:
                q = h[p]
                if q not in self.transversal:
                    self.transversal[q] = mul(up, h)
                    todo.append(q)


class GroupHandle:
    """Base and strong generating set for the group generated by ``gens``.

    Base points are chosen as the smallest point moved by the element that
    forces a new level, so the internal state is reproducible.
    """

    def __init__(self, gens: Sequence[PointPerm], degree: int):
        self.degree = degree
        self.generators = [tuple(g) for g in gens if not _is_identity(tuple(g))]
        self.levels: list[_Level] = []
        for g in self.generators:
            if all(g[lv.base_point] == lv.base_point for lv in self.levels):
                self._new_level(g)
        for j, lv in enumerate(self.levels):
            lv.gens = [g for g in self.generators if self._fixes_prefix(g, j)]
            lv.close_orbit()
        self._schreier_sims()

    def _fixes_prefix(self, g: PointPerm, j: int) -> bool:
        return all(g[lv.base_point] == lv.base_point for lv in self.levels[:j])

    def _new_level(self, g: PointPerm) -> None:
        moved = next(x for x in range(self.degree) if g[x] != x)
        self.levels.append(_Level(moved, [], {moved: _identity(self.degree)}))

    def _schreier_sims(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            jump = None
            for p in list(lv.transversal):
                up = lv.transversal[p]
                for k, h in enumerate(lv.gens):
                    if (p, k) in lv.checked:
                        continue
                    lv.checked.add((p, k))
                    sch = mul(mul(up, h), inv(lv.transversal[h[p]]))
                    residue, j = self.sift(sch, i + 1)
                    if _is_identity(residue):
                        continue
                    if j == len(self.levels):
                        self._new_level(residue)
                    for lw in self.levels[i + 1:j + 1]:
                        lw.gens.append(residue)
                        lw.close_orbit()
                    jump = j
                    break
                if jump is not None:
                    break
            i = jump if jump is not None else i - 1

    @property
    def base(self) -> list[int]:
        return [lv.base_point for lv in self.levels]

    def order(self) -> int:
        return prod(len(lv.transversal) for lv in self.levels)

    def sift(self, g: PointPerm, start: int = 0) -> tuple[PointPerm, int]:
        for j in range(start, len(self.levels)):
            lv = self.levels[j]
            u = lv.transversal.get(g[lv.base_point])
            if u is None:
                return g, j
            g = mul(g, inv(u))
        return g, len(self.levels)

    def contains(self, g: PointPerm) -> bool:
        residue, _ = self.sift(tuple(g))
        return _is_identity(residue)


def _check_group_n(n: int, allow_8: bool = False) -> None:
    cap = 8 if allow_8 else MAX_GROUP_N
    if not 1 <= n <= cap:
        raise ValueError(f"group engine supports 1 <= n <= {cap}")


def group_handle(n: int, allow_8: bool = False) -> GroupHandle:
    _check_group_n(n, allow_8)
    return GroupHandle(toggle_generators(n), factorial(n))


def group_order(n: int, allow_8: bool = False) -> int:
    return group_handle(n, allow_8).order()


def evaluate_word(word: Sequence[int], n: int) -> PointPerm:
    """Product of the toggles indexed by ``word``, applied left to right."""
    _check_group_n(n, allow_8=True)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for n={n}")
    tables = {i: toggle_as_point_perm(i, n) for i in set(word)}
    g = _identity(factorial(n))
    for i in word:
        g = mul(g, tables[i])
    return g


def verify_relation(word: Sequence[int], n: int) -> bool:
    return _is_identity(evaluate_word(word, n))


def element_order(g: PointPerm) -> int:
    k, h = 1, g
    while not _is_identity(h):
        h = mul(h, g)
        k += 1
    return k


def standard_relations(n: int) -> list[tuple[str, list[int]]]:
    """The defining relations: p_{n-1} = 1, p_i^2 = 1, commuting far pairs,
    and (p_i p_{i+1})^6 = 1."""
    rels: list[tuple[str, list[int]]] = []
    if n >= 2:
        rels.append((f"p{n - 1}", [n - 1]))
    for i in range(1, n):
        rels.append((f"p{i}^2", [i, i]))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append((f"(p{i}p{j})^2", [i, j] * 2))
    for i in range(1, n - 1):
        rels.append((f"(p{i}p{i + 1})^6", [i, i + 1] * 6))
    return rels


def orbit_count_group(n: int) -> int:
    """Orbits on S_n by union-find over the generator tables."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 8:
        raise ValueError("orbit counting by tables is limited to n <= 8")
    size = factorial(n)
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(1, n):
        for x, y in enumerate(toggle_as_point_perm(i, n)):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    return sum(1 for x in range(size) if find(x) == x)
