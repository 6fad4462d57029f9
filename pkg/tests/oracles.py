"""Brute-force references, kept independent of the code paths they check."""

import itertools
from math import factorial

from polytoggle.perm import all_perms


def normalize_by_sorting(w):
    order = sorted(w)
    return tuple(order.index(x) + 1 for x in w)


def contains_brute(sigma, tau):
    return any(normalize_by_sorting(sub) == tuple(tau)
               for sub in itertools.combinations(sigma, len(tau)))


def stack_pass(w):
    """One left-to-right pass through a stack whose contents must stay
    increasing from top to bottom; pop whenever the next entry is larger."""
    stack, out = [], []
    for x in w:
        while stack and stack[-1] < x:
            out.append(stack.pop())
        stack.append(x)
    while stack:
        out.append(stack.pop())
    return tuple(out)


def preimages_brute(target):
    n = len(target)
    return {p for p in all_perms(n) if stack_pass(p) == tuple(target)}


def plane_trees_brute(w):
    """Decreasing plane trees with postorder ``w``, as sorted edge sets.

    Every non-root entry picks a later, larger entry as its parent; children
    are ordered by position; keep the choices whose postorder is ``w``.
    """
    w = tuple(w)
    n = len(w)
    if not n or w[-1] != max(w):
        return set()
    options = [[j for j in range(i + 1, n) if w[j] > w[i]] for i in range(n - 1)]
    found = set()
    for parents in itertools.product(*options):
        kids = {j: [] for j in range(n)}
        for i, par in enumerate(parents):
            kids[par].append(i)
        out = []

        def walk(v):
            for c in kids[v]:
                walk(c)
            out.append(w[v])

        walk(n - 1)
        if tuple(out) == w:
            found.add(tuple(sorted((w[i], w[par]) for i, par in enumerate(parents))))
    return found


def closure_order(gens, degree):
    """Size of the group generated by ``gens`` by breadth-first closure."""
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                gh = tuple(h[x] for x in g)
                if gh not in seen:
                    seen.add(gh)
                    nxt.append(gh)
        frontier = nxt
    return len(seen)


def catalan_by_recurrence(n):
    c = [1]
    for k in range(n):
        c.append(sum(c[i] * c[k - i] for i in range(k + 1)))
    return c[n]


def two_stack_sortable(n):
    # closed form for |s^-1(Av_n(231))|
    return 2 * factorial(3 * n) // (factorial(n + 1) * factorial(2 * n + 1))
