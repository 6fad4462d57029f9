"""
Permutation statistics, joint equidistribution, and skeletality checks.

Two sets are jointly equidistributed under a battery of statistics exactly
when the multisets of their statistic vectors agree, which is what
:func:`equidistributed` compares.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from typing import Any, NamedTuple

from .perm import Perm, descents, format_perm
from .sorting import TwistSpec, deficiency, fertility, twist_fertility
from .toggles import orbits

__all__ = [
    "Statistic", "STATISTICS", "get_statistic", "parse_battery",
    "SKELETAL_BATTERY", "DESCENT_FAMILY", "evaluate", "stat_vector",
    "histogram", "equidistributed", "skeletality_check", "Check",
]


@dataclass(frozen=True)
class Statistic:
    name: str
    evaluator: Callable[[Perm], int]
    skeletal: bool

    def __call__(self, p: Sequence[int]) -> int:
        return self.evaluator(tuple(p))


# -- functions of (n, Des) -------------------------------------------------

def _ascent(i: int, n: int, d: frozenset[int]) -> bool:
    return 1 <= i <= n - 1 and i not in d


def des(p: Perm) -> int:
    return len(descents(p))


def asc(p: Perm) -> int:
    return max(len(p) - 1, 0) - des(p)


def maj(p: Perm) -> int:
    return sum(descents(p))


def _triples(p: Perm, first_desc: bool, second_desc: bool) -> int:
    n, d = len(p), descents(p)
    return sum(
        1 for i in range(2, n)
        if ((i - 1) in d) == first_desc and (i in d) == second_desc
    )


def peak(p: Perm) -> int:
    return _triples(p, False, True)


def valley(p: Perm) -> int:
    return _triples(p, True, False)


def ddes(p: Perm) -> int:
    return _triples(p, True, True)


def dasc(p: Perm) -> int:
    return _triples(p, False, False)


def lir(p: Perm) -> int:
    """Length of the leftmost increasing run."""
    n, d = len(p), descents(p)
    return min(d) if d else n


def ldr(p: Perm) -> int:
    n, d = len(p), descents(p)
    ups = [i for i in range(1, n) if _ascent(i, n, d)]
    return min(ups) if ups else n


def rir(p: Perm) -> int:
    n, d = len(p), descents(p)
    return n - max(d) if d else n


def rdr(p: Perm) -> int:
    n, d = len(p), descents(p)
    ups = [i for i in range(1, n) if _ascent(i, n, d)]
    return n - max(ups) if ups else n


# -- other skeletal statistics ---------------------------------------------

def lmax(p: Perm) -> int:
    """Number of left-to-right maxima."""
    best, count = 0, 0
    for x in p:
        if x > best:
            best, count = x, count + 1
    return count


def rmax(p: Perm) -> int:
    return lmax(p[::-1])


def indmax(p: Perm) -> int:
    return p.index(max(p)) + 1 if p else 0


def slmax(p: Perm) -> int:
    """Length of the longest prefix in which the first entry is largest."""
    if not p:
        return 0
    k = 1
    while k < len(p) and p[k] < p[0]:
        k += 1
    return k


def slmax_rev(p: Perm) -> int:
    return slmax(p[::-1])


def tl(p: Perm) -> int:
    """Tail length: the largest l with p_i = i for every i > n - l."""
    n, ell = len(p), 0
    while ell < n and p[n - 1 - ell] == n - ell:
        ell += 1
    return ell


def zeil(p: Perm) -> int:
    """Largest m such that n, n-1, ..., n-m+1 occur left to right."""
    n = len(p)
    if not n:
        return 0
    pos = {v: i for i, v in enumerate(p)}
    m = 1
    while m < n and pos[n - m] > pos[n - m + 1]:
        m += 1
    return m


def de(p: Perm) -> int:
    return deficiency(p)


def _fer_twist(spec: TwistSpec) -> Callable[[Perm], int]:
    return lambda p: twist_fertility(spec, p)


DESCENT_FAMILY = (
    "des", "asc", "maj", "peak", "valley", "ddes", "dasc",
    "lir", "ldr", "rir", "rdr",
)

STATISTICS: dict[str, Statistic] = {
    s.name: s for s in [
        Statistic("des", des, True),
        Statistic("asc", asc, True),
        Statistic("maj", maj, True),
        Statistic("peak", peak, True),
        Statistic("valley", valley, True),
        Statistic("ddes", ddes, True),
        Statistic("dasc", dasc, True),
        Statistic("lir", lir, True),
        Statistic("ldr", ldr, True),
        Statistic("rir", rir, True),
        Statistic("rdr", rdr, True),
        Statistic("lmax", lmax, True),
        Statistic("rmax", rmax, True),
        Statistic("indmax", indmax, True),
        Statistic("slmax", slmax, True),
        Statistic("slmax_rev", slmax_rev, True),
        Statistic("tl", tl, True),
        Statistic("fer", fertility, True),
        Statistic("fer_ss", _fer_twist(TwistSpec.parse("ss")), True),
        Statistic("de", de, True),
        Statistic("zeil", zeil, False),
    ]
}

SKELETAL_BATTERY: tuple[Statistic, ...] = tuple(
    s for s in STATISTICS.values() if s.skeletal)


def get_statistic(name: str) -> Statistic:
    """Look up a statistic; ``fer_<spec>`` builds a twisted fertility on demand."""
    name = name.strip()
    if name == "slmax∘rev":
        name = "slmax_rev"
    if name in STATISTICS:
        return STATISTICS[name]
    if name.startswith("fer_"):
        spec = TwistSpec.parse(name[4:])
        return Statistic(name, _fer_twist(spec), True)
    raise KeyError(f"unknown statistic {name!r}")


def parse_battery(text: str) -> list[Statistic]:
    """Comma-separated names; ``skeletal`` expands to the skeletal battery."""
    out: list[Statistic] = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if tok == "skeletal":
            out.extend(SKELETAL_BATTERY)
        else:
            out.append(get_statistic(tok))
    return out


def evaluate(f: Statistic | str, p: Sequence[int]) -> int:
    if isinstance(f, str):
        f = get_statistic(f)
    return f(p)


def stat_vector(battery: Sequence[Statistic], p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    return tuple(f.evaluator(p) for f in battery)


def histogram(battery: Sequence[Statistic], perms: Iterable[Sequence[int]]) -> Counter:
    return Counter(stat_vector(battery, p) for p in perms)


class Check(NamedTuple):
    ok: bool
    witness: Any = None


def equidistributed(battery: Sequence[Statistic], a: Iterable[Sequence[int]],
                    b: Iterable[Sequence[int]]) -> Check:
    """Compare the statistic-vector multisets of ``a`` and ``b``.

    On failure the witness names one vector whose multiplicities differ and
    the statistics whose individual distributions already disagree.
    """
    battery = list(battery)
    ha, hb = histogram(battery, a), histogram(battery, b)
    if ha == hb:
        return Check(True)
    vec = min(v for v in set(ha) | set(hb) if ha[v] != hb[v])
    marginal = [
        f.name for k, f in enumerate(battery)
        if Counter(v[k] for v in ha.elements()) != Counter(v[k] for v in hb.elements())
    ]
    return Check(False, {
        "vector": dict(zip((f.name for f in battery), vec)),
        "count_a": ha[vec],
        "count_b": hb[vec],
        "statistics": marginal,
    })


def skeletality_check(f: Statistic | str, n: int) -> Check:
    """Whether ``f`` is constant on every toggle orbit of S_n.

    Orbits are visited in order of their least member; the witness pairs that
    least member with the first orbit-mate taking a different value.
    """
    if isinstance(f, str):
        f = get_statistic(f)
    for block in orbits(n):
        base = f(block[0])
        for q in block[1:]:
            if f(q) != base:
                return Check(False, (block[0], q))
    return Check(True)


def format_witness_pair(pair: tuple[Perm, Perm]) -> list[str]:
    return [format_perm(x) for x in pair]
