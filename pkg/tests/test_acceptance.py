"""
Acceptance criteria, one test each.

Every test runs its check under a wall-clock budget and prints a single
``[PASS]`` or ``[FAIL]`` line, so ``pytest -s`` (or the captured report in
``test_output.txt``) reads as a checklist.
"""

import time

import pytest

from polytoggle import groups, sorting, stats, trees, verify
from polytoggle.cli import run
from polytoggle.perm import catalan, parse_perm

P = parse_perm


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, elapsed, extra=""):
        tag = "PASS" if ok else "FAIL"
        line = f"[{tag}] criterion {number:>2}: {title} ({elapsed:.2f}s){extra}"
        with capsys.disabled():
            print("\n" + line)
    return emit


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_criterion_01_stack_sort(report):
    out, t = timed(verify.run_suite, "eq5", 8)
    cli_ok = run(["sort", "246153"])[1] == '{"input":"246153","output":"241356"}'
    ok = out["pass"] and cli_ok and t < 10
    report(1, "s(246153)=241356 and recursion = postorder.as_plane.tree_of, n<=8", ok, t)
    assert ok


def test_criterion_02_preimages_of_identity(report):
    out, t = timed(verify.run_suite, "eq1", 8)
    ok = out["pass"] and out["sizes"][-1] == 1430 == catalan(8) and t < 30
    report(2, "s^-1(12..n) = Av_n(231), size C_n, n<=8", ok, t)
    assert ok


def test_criterion_03_orbits_are_skeleton_fibers(report):
    out, t = timed(verify.run_suite, "theorem1", 8)
    ok = out == {"orbits": 1430, "catalan": 1430, "pass": True} and t < 60
    report(3, "orbits = skeleton fibers, C_n of them, one 231- and one 132-avoider each", ok, t)
    assert ok


def test_criterion_04_toggles_commute_with_sorting(report):
    out, t = timed(verify.run_suite, "lemma1", 7)
    ok = out["pass"] and out["pairs_at_n"] == 5040 * 6 and t < 30
    report(4, "toggle on s(sigma) lifts to sigma, n<=7", ok, t,
           f" [{out['pairs_at_n']} (sigma, i) pairs at n=7, {out['instances']} with the toggle acting]")
    assert ok


def test_criterion_05_twisted_equidistribution(report):
    out, t = timed(verify.run_suite, "theorem2", 6)
    ok = out["pass"] and out["twists"] == ["s", "ss", "rs", "srs"] and "zeil" in out["battery"]
    ok = ok and t < 300
    report(5, "skeletal battery + zeil equidistributed on twisted preimages, n<=6", ok, t)
    assert ok


def test_criterion_06_canonical_preimages(report):
    out, t = timed(verify.run_suite, "theorem3", 7)
    ok = (out["pass"]
          and sorting.canonical_preimage(P("42135")) == P("45231")
          and sorting.canonical_preimage(P("32145")) == P("35241")
          and trees.skeleton(P("45231")) == trees.skeleton(P("35241"))
          and trees.skeleton(P("42135")) != trees.skeleton(P("32145"))
          and (stats.zeil(P("45231")), stats.zeil(P("35241"))) == (1, 2))
    report(6, "unique canonical preimage for sorted perms, n<=7; 42135/32145 example", ok, t)
    assert ok


def test_criterion_07_postorder_skeleton_multisets(report):
    out, t = timed(verify.run_suite, "theorem4", 6)
    ok = out["pass"] and t < 120
    report(7, "postorder-preimage skeleton multisets agree on skeleton classes, n<=6", ok, t)
    assert ok


def test_criterion_08_canonical_skeletons(report):
    out, t = timed(verify.run_suite, "theorem5", 7)
    ok = out["pass"]
    report(8, "same-skeleton sorted pairs have same-skeleton canonical preimages, n<=7", ok, t)
    assert ok


def test_criterion_09_pattern_classes(report):
    out, t = timed(verify.run_suite, "theorem6", 6)
    ok = out["pass"] and out["taus"] == ["1423"] and out["tau_primes"] == ["3412"]
    ok = ok and out["twists"] == ["s", "ss"]
    report(9, "Av(231,1423) vs Av(132,swu(1423)) under s and ss, n<=6", ok, t)
    assert ok


def test_criterion_10_product_classes(report):
    out, t = timed(verify.run_suite, "prop1", 7)
    ok = out["pass"]
    report(10, "skeleton <=> inverse(pi).s(pi); images Av(312), Av(231); swd formula, n<=7", ok, t)
    assert ok


def test_criterion_11_zeil_identity(report):
    out, t = timed(verify.run_suite, "zeil", 8)
    ok = out["pass"]
    report(11, "zeil = min(rmax, tl.s), n<=8", ok, t)
    assert ok


def test_criterion_12_skeletality(report):
    out, t = timed(verify.run_suite, "skeletality", 6)
    expected = {"fer", "de", "fer_ss", "lmax", "rmax", "indmax", "slmax", "slmax_rev", "tl",
                *stats.DESCENT_FAMILY}
    a, b = P("45231"), P("35241")
    pair_is_witness = trees.skeleton(a) == trees.skeleton(b) and stats.zeil(a) != stats.zeil(b)
    ok = (out["pass"] and set(out["results"]) == expected and all(out["results"].values())
          and not out["zeil_skeletal"] and pair_is_witness)
    report(12, "declared statistics skeletal for n<=6; zeil is not ({45231, 35241})", ok, t,
           f" [first witness found: {out['zeil_witness']}]")
    assert ok


def test_criterion_13_group(report):
    out, t = timed(verify.run_suite, "group", 6)
    order5 = groups.group_order(5)
    ok = (out["pass"] and groups.group_order(3) == 2 and groups.group_order(4) == 12
          and out["d12_presentation"] and t < 120)
    report(13, "|P_3|=2, |P_4|=12 with D12 presentation; relations hold for n<=6", ok, t,
           f" [|P_5| = {order5}]")
    assert ok


def test_criterion_14_chi(report):
    out, t = timed(verify.run_suite, "chi", 0)
    ok = (out["pass"] and sorting.chi(5, (1, 3, 2)) == P("86413257")
          and sorting.chi(6, (1, 3, 2)) == P("864132579"))
    report(14, "chi(5,132)=86413257, chi(6,132)=864132579", ok, t)
    assert ok
