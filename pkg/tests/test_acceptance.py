"""Acceptance suite: one check per criterion, exact-integer tolerance.

Each test prints a single pass/fail line. Where exhaustive search refutes a
closed-form candidate value, the test asserts the brute-forced truth and
additionally demonstrates the refuting instance, so every divergence is
visible in the suite rather than silently absorbed.
"""

import random

import pytest

from multires.generators import gen, gen_clique_gadget, parse_family_spec
from multires.graph import clique_number
from multires.multisets import Variant
from multires.solver import (
    INFINITE,
    certify,
    dimension,
    naive_all_dimensions,
)
from multires.bounds import lower_bounds
from multires.verify import (
    closed_form,
    corpus_scan,
    run_theorem,
    wheel_path_structure,
)
from strategies import random_connected_graph


def report(number, name, ok):
    print(f"[acceptance] criterion {number} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({name}) failed"


@pytest.fixture(scope="session")
def corpus6():
    return corpus_scan(6, jobs=4)


def solve(text, variant):
    return dimension(gen(parse_family_spec(text)), variant).value


def test_criterion_1_cycles():
    expected_lmd = {3: INFINITE, 4: 1, 5: INFINITE, 6: 1, 7: 3, 8: 1,
                    9: 3, 10: 1, 11: 3, 12: 1}
    ok = True
    for n in range(3, 13):
        ok = ok and solve(f"cycle:{n}", Variant.LMD) == expected_lmd[n]
        ok = ok and solve(f"cycle:{n}", Variant.LDIM_MS) == (1 if n % 2 == 0 else 2)
    report(1, "cycles", ok)


def test_criterion_2_wheels():
    check_dims = run_theorem("wheels", n_lo=3, n_hi=12)
    check_ldim = run_theorem("wheel_ldim", n_lo=3, n_hi=12)
    spot = (
        solve("wheel:4", Variant.LMD) == 3
        and solve("wheel:8", Variant.LMD) == 2
        and solve("wheel:7", Variant.LDIM_MS) == 3
        and solve("wheel:9", Variant.LDIM_MS) == 3
        and solve("wheel:5", Variant.LMD) == INFINITE
    )
    # ldim_ms(W_4) is 2, not 3: a rim vertex plus the hub resolve
    w4 = gen(parse_family_spec("wheel:4"))
    corrected = (
        solve("wheel:4", Variant.LDIM_MS) == 2
        and certify(w4, (0, 4), Variant.LDIM_MS).valid
        and closed_form(parse_family_spec("wheel:4"), Variant.LDIM_MS) == 2
    )
    report(2, "wheels", check_dims.passed and check_ldim.passed and spot and corrected)


def test_criterion_3_complete_graphs():
    ok = solve("complete:2", Variant.LMD) == 1
    for n in range(3, 9):
        ok = ok and solve(f"complete:{n}", Variant.LMD) == INFINITE
    for n in range(2, 9):
        ok = ok and solve(f"complete:{n}", Variant.LDIM_MS) == n - 1
    report(3, "complete graphs", ok)


def test_criterion_4_amalgamations():
    amal = run_theorem("amal", max_order=4, sizes=(2, 3))
    edge = run_theorem("edge_amal", max_order=4, sizes=(2, 3))
    report(4, "amalgamations", amal.passed and edge.passed)


def test_criterion_5_corona():
    check = run_theorem("corona", path_orders=(3, 4, 5))
    # sharpness fails at path order four: the true value is five
    p4 = gen(parse_family_spec("corona:path:4/2,2,2,2"))
    refutation = (
        dimension(p4, Variant.LMD).value == 5
        and dimension(p4, Variant.LDIM_MS).value == 5
    )
    report(5, "corona", check.passed and refutation)


def test_criterion_6_clique_gadget():
    g4 = gen_clique_gadget(4)
    ok = (
        dimension(g4.graph, Variant.LMD).value == 2
        and dimension(g4.graph, Variant.LDIM_MS).value == 2
    )
    for n in (6, 8):
        gadget = gen_clique_gadget(n)
        g = gadget.graph
        ok = ok and clique_number(g) == n
        ok = ok and certify(g, gadget.landmarks, Variant.LMD).valid
        ok = ok and certify(g, gadget.landmarks, Variant.LDIM_MS).valid
        ok = ok and lower_bounds(g).lower[Variant.LMD].value == 3
        ok = ok and len(gadget.landmarks) == 3
    report(6, "clique gadget", ok)


def test_criterion_7_exhaustive_corpus(corpus6):
    count, failures = corpus6
    ok = count == 27476 and failures == []
    report(7, "exhaustive corpus n<=6", ok)


def test_criterion_8_bound_algebra():
    check = run_theorem("chromatic_bound", chi_hi=50)
    report(8, "bound algebra", check.passed)


def test_criterion_9_solver_self_consistency():
    rng = random.Random(271828)
    ok = True
    for _ in range(500):
        g = random_connected_graph(rng, n_max=8)
        naive = naive_all_dimensions(g)
        for variant in Variant:
            if dimension(g, variant).value != naive[variant].value:
                ok = False
    report(9, "solver self-consistency", ok)


def test_criterion_10_wheel_structure_lemmas():
    lmd_side = run_theorem("wheel_lemma_1or3", n_lo=4, n_hi=12, variants=("lmd",))
    outer_even = run_theorem(
        "wheel_lemma_1or3", n_lo=4, n_hi=12, variants=("ldim_ms",)
    )
    even_ok = all(
        c.ok for c in outer_even.instances if int(c.instance.split()[0][6:]) % 2 == 0
    )
    # the outer condition fails on odd wheels: a rim pair inside W
    # is never compared by the outer variant, yet such minimum bases resolve
    w5 = gen(parse_family_spec("wheel:5"))
    refutation = certify(w5, (0, 1), Variant.LDIM_MS).valid and not (
        wheel_path_structure(5, (0, 1), outer=True)
    )
    odd_refuted = any(
        not c.ok
        for c in outer_even.instances
        if int(c.instance.split()[0][6:]) % 2 == 1
    )
    report(
        10,
        "wheel structure lemmas",
        lmd_side.passed and even_ok and refutation and odd_refuted,
    )
