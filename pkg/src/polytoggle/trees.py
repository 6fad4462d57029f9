"""
Decreasing binary and plane trees, their traversals, and skeletons.

A binary tree is either ``None`` (empty) or a :class:`Node`; a plane tree is a
:class:`PlaneTree` with an ordered tuple of children.  The two traversals
connect them to permutations:

* ``inorder``  reads left subtree, root, right subtree (binary trees);
* ``postorder`` reads each child subtree left to right, then the root.

``tree_of`` inverts ``inorder`` by splitting a word at its maximum, and the
stack-sorting map factors as ``postorder(as_plane(tree_of(w)))``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Optional, Union

from .perm import Perm, format_perm, is_normalized

__all__ = [
    "Node", "BinaryTree", "PlaneTree", "tree_of", "inorder", "postorder",
    "as_plane", "stack_sort", "stack_sort_via_trees", "skeleton",
    "is_canonical", "postorder_preimages", "format_tree", "labels",
    "skeleton_multiset",
]


@dataclass(frozen=True)
class Node:
    label: int
    left: Optional["Node"] = None
    right: Optional["Node"] = None


# None is the empty binary tree
BinaryTree = Optional[Node]


@dataclass(frozen=True)
class PlaneTree:
    label: int
    children: tuple["PlaneTree", ...] = ()


def tree_of(w: Sequence[int]) -> BinaryTree:
    """The decreasing binary tree whose in-order reading is ``w``."""
    if not w:
        return None
    k = max(range(len(w)), key=w.__getitem__)
    return Node(w[k], tree_of(w[:k]), tree_of(w[k + 1:]))


def inorder(t: BinaryTree) -> Perm:
    if t is None:
        return ()
    return inorder(t.left) + (t.label,) + inorder(t.right)


def postorder(t: PlaneTree) -> Perm:
    out: list[int] = []

    def walk(u: PlaneTree) -> None:
        for c in u.children:
            walk(c)
        out.append(u.label)

    walk(t)
    return tuple(out)


def as_plane(t: BinaryTree) -> PlaneTree:
    """Forget empty binary subtrees; surviving children keep their order."""
    if t is None:
        raise ValueError("the empty binary tree has no plane-tree image")
    kids = tuple(as_plane(c) for c in (t.left, t.right) if c is not None)
    return PlaneTree(t.label, kids)


def stack_sort(w: Sequence[int]) -> Perm:
    """West's stack-sorting map: s(L n R) = s(L) s(R) n."""
    w = tuple(w)
    if not w:
        return ()
    k = w.index(max(w))
    return stack_sort(w[:k]) + stack_sort(w[k + 1:]) + (w[k],)


def stack_sort_via_trees(w: Sequence[int]) -> Perm:
    """The same map computed as postorder after in-order inversion."""
    if not w:
        return ()
    return postorder(as_plane(tree_of(w)))


def _binary_code(t: BinaryTree) -> str:
    if t is None:
        return ""
    return "(" + _binary_code(t.left) + ")" + _binary_code(t.right)


def _plane_code(t: PlaneTree) -> str:
    return "(" + "".join(_plane_code(c) for c in t.children) + ")"


def skeleton(x: Union[Sequence[int], Node, PlaneTree, None]) -> str:
    """Balanced-parenthesis code of the unlabeled shape.

    Binary shapes use ``B ::= "" | "(" B ")" B``; plane shapes use
    ``T ::= "(" T* ")"``.  A permutation's skeleton is that of its binary
    tree.  Binary and plane codes live in different grammars and are never
    meant to be compared with each other.
    """
    if isinstance(x, PlaneTree):
        return _plane_code(x)
    if x is None or isinstance(x, Node):
        return _binary_code(x)
    return _binary_code(tree_of(tuple(x)))


def labels(t: PlaneTree) -> set[int]:
    return set(postorder(t))


def is_canonical(t: BinaryTree) -> bool:
    """Every vertex with a left child has a nonempty right subtree whose
    in-order reading starts below that left child's label."""
    if t is None:
        return True
    if t.left is not None:
        if t.right is None:
            return False
        if inorder(t.right)[0] > t.left.label:
            return False
    return is_canonical(t.left) and is_canonical(t.right)


def postorder_preimages(w: Sequence[int]) -> list[PlaneTree]:
    """All decreasing plane trees whose postorder reading is ``w``.

    The last entry is the root; the rest is cut into consecutive blocks, each
    ending in its own maximum and each the postorder reading of one child.
    """
    w = tuple(w)
    if not is_normalized(w):
        raise ValueError(f"expected a normalized permutation, got {format_perm(w)!r}")
    memo: dict[Perm, list[PlaneTree]] = {}
    forests: dict[Perm, list[tuple[PlaneTree, ...]]] = {}

    def trees(u: Perm) -> list[PlaneTree]:
        if u in memo:
            return memo[u]
        if not u or u[-1] != max(u):
            memo[u] = []
            return []
        memo[u] = [PlaneTree(u[-1], f) for f in forest(u[:-1])]
        return memo[u]

    def forest(u: Perm) -> list[tuple[PlaneTree, ...]]:
        # ordered sequences of trees whose concatenated readings give u
        if u in forests:
            return forests[u]
        if not u:
            return [()]
        out = []
        for k in range(1, len(u) + 1):
            heads = trees(u[:k])
            if not heads:
                continue
            for rest in forest(u[k:]):
                out.extend((h,) + rest for h in heads)
        forests[u] = out
        return out

    return trees(w) if w else []


def skeleton_multiset(trees: list[PlaneTree]) -> Counter:
    return Counter(skeleton(t) for t in trees)


def format_tree(t: Union[Node, PlaneTree, None]) -> str:
    """Nested label lists: ``6(4(2,ε),5(1,3))`` for the binary tree of 246153."""
    if t is None:
        return "ε"
    if isinstance(t, PlaneTree):
        if not t.children:
            return str(t.label)
        return f"{t.label}(" + ",".join(format_tree(c) for c in t.children) + ")"
    if t.left is None and t.right is None:
        return str(t.label)
    return f"{t.label}({format_tree(t.left)},{format_tree(t.right)})"
