"""Theorem harness: closed-form oracles checked against the exact solver.

Every degenerate case where exhaustive search refutes the usual closed form
is marked with a "corrected:" note in the closed-form code and carries a
small refuting instance in the test suite. The harness never guesses: a
(family, variant) pair without a covering closed form raises
NoClosedFormError.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from multiprocessing import Pool

from .bounds import (
    infinite_certificates,
    is_path_graph,
    is_regular,
    lower_bounds,
    same_neighborhood_triples,
)
from .errors import NoClosedFormError, NoLeaflessSubgraphError
from .generators import FamilySpec, gen, gen_clique_gadget, graph_from_mask
from .graph import all_pairs_distances, bipartition, two_core
from .multisets import Variant
from .solver import INFINITE, certify, dimension, naive_all_dimensions


def _ceil_div(a, b):
    return -(-a // b)


def _cycle_lmd(n):
    if n % 2 == 0:
        return 1
    return INFINITE if n in (3, 5) else 3


def _cycle_ldim_ms(n):
    return 1 if n % 2 == 0 else 2


def _wheel_ldim(n):
    if n == 3:
        return 3
    if n == 4:
        return 2
    return _ceil_div(n, 4)


def _wheel_lmd(n):
    if n in (4, 6):
        return 3
    if n >= 8 and n % 2 == 0:
        return _ceil_div(n, 4)
    return INFINITE


def _wheel_ldim_ms(n):
    if n in (3, 6):
        return 3
    if n == 4:
        return 2  # corrected: printed value 3 is refuted by exhaustive search
    if (n >= 8 and n % 2 == 0) or n % 4 == 1:
        return _ceil_div(n, 4)
    return _ceil_div(n, 4) + 1


def _amal_counts(orders):
    m3 = sum(1 for x in orders if x == 3)
    mge4 = sum(1 for x in orders if x >= 4)
    m2 = sum(1 for x in orders if x == 2)
    return m2, m3, mge4


def _amal_lmd(orders):
    m2, m3, mge4 = _amal_counts(orders)
    if mge4:
        return INFINITE
    if m3 == 0:
        return 1
    if m3 == 1:
        # corrected: with no K_2 part the amalgam collapses to K_3 (lmd infinite)
        return 2 if m2 >= 1 else INFINITE
    return m3


def _amal_ldim_ms(orders):
    m2, m3, mge4 = _amal_counts(orders)
    if m3 == 0 and mge4 == 0:
        return 1
    if m3 == 1 and mge4 == 0:
        return 2
    total = sum(x - 2 for x in orders if x >= 3)
    # corrected: a lone clique of order >= 4 needs one extra landmark (its
    # K-end vertices all see the same all-ones bag otherwise)
    if m3 + mge4 == 1:
        return total + 1
    return total


def _edge_amal_counts(orders):
    m = len(orders)
    m2 = sum(1 for x in orders if x == 2)
    m3 = sum(1 for x in orders if x == 3)
    m4 = sum(1 for x in orders if x == 4)
    mge4 = sum(1 for x in orders if x >= 4)
    return m, m2, m3, m4, mge4


def _edge_amal_lmd(orders):
    m, m2, m3, m4, mge4 = _edge_amal_counts(orders)
    if any(x >= 5 for x in orders):
        return INFINITE
    if m2 == m:
        return 1
    if m4 == 0:
        # corrected: K_2 parts are absorbed by the shared edge, so a single
        # K_3 with the rest K_2 is just K_3 (lmd infinite)
        return INFINITE if (m3 == 1 and m2 == m - 1) else 3
    if m4 == 1:
        # corrected: the single-K_4 basis construction collides; K_4 alone is
        # infinite, and with K_3 parts present the answer is 3, not m_4 + 1
        return INFINITE if m3 == 0 else 3
    return m4 + 1


def _edge_amal_ldim_ms(orders):
    m, m2, m3, m4, mge4 = _edge_amal_counts(orders)
    if m2 == m:
        return 1
    if mge4 == 0:
        # corrected: for m_3 >= 3 the colliding bags belong to non-adjacent
        # vertices, which the local outer variant ignores; 2 suffices
        return 2
    total = sum(x - 3 for x in orders if x >= 4)
    # corrected: a single spare K-end vertex still collides with the shared
    # edge's far endpoint, so one more landmark is needed when the sum is 1
    return 3 if total == 1 else total + 1


def closed_form(spec, variant):
    """Closed-form dimension for a covered (family, variant) pair."""
    tag = spec.tag
    if tag in ("path", "star"):
        if variant in (Variant.LMD, Variant.LDIM_MS):
            return 1  # bipartite
    elif tag == "cycle":
        n = spec.numbers[0]
        if variant is Variant.LMD:
            return _cycle_lmd(n)
        if variant is Variant.LDIM_MS:
            return _cycle_ldim_ms(n)
    elif tag == "wheel":
        n = spec.numbers[0]
        if variant is Variant.LMD:
            return _wheel_lmd(n)
        if variant is Variant.LDIM_MS:
            return _wheel_ldim_ms(n)
        if variant is Variant.LDIM:
            return _wheel_ldim(n)
    elif tag == "complete":
        n = spec.numbers[0]
        if variant is Variant.LMD:
            return 1 if n <= 2 else INFINITE
        if variant is Variant.LDIM_MS:
            return max(1, n - 1)
    elif tag == "amal":
        if variant is Variant.LMD:
            return _amal_lmd(spec.numbers)
        if variant is Variant.LDIM_MS:
            return _amal_ldim_ms(spec.numbers)
    elif tag == "edge_amal":
        if variant is Variant.LMD:
            return _edge_amal_lmd(spec.numbers)
        if variant is Variant.LDIM_MS:
            return _edge_amal_ldim_ms(spec.numbers)
    elif tag == "unicyclic":
        if len(spec.numbers) > 1 and variant in (Variant.LMD, Variant.LDIM_MS):
            return 1 if spec.numbers[0] % 2 == 0 else 2
    elif tag == "gadget":
        n = spec.numbers[0]
        if variant in (Variant.LMD, Variant.LDIM_MS):
            return max(1, (n - 1).bit_length())
    raise NoClosedFormError(f"no closed form for ({spec}, {variant.name})")


@dataclass(frozen=True)
class InstanceCheck:
    instance: str
    quantity: str
    expected: object
    computed: object
    ok: bool
    note: str = ""


@dataclass
class TheoremCheck:
    theorem_id: str
    instances: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.ok for c in self.instances)

    def add(self, instance, quantity, expected, computed, note=""):
        self.instances.append(
            InstanceCheck(
                instance=str(instance),
                quantity=quantity,
                expected=expected,
                computed=computed,
                ok=expected == computed,
                note=note,
            )
        )

    def add_flag(self, instance, quantity, ok, note=""):
        self.instances.append(
            InstanceCheck(
                instance=str(instance),
                quantity=quantity,
                expected=True,
                computed=bool(ok),
                ok=bool(ok),
                note=note,
            )
        )

    def failures(self):
        return [c for c in self.instances if not c.ok]

    def to_json_dict(self):
        def show(v):
            return "infinity" if v == INFINITE else v

        return {
            "theorem": self.theorem_id,
            "passed": self.passed,
            "instances": len(self.instances),
            "failures": [
                {
                    "instance": c.instance,
                    "quantity": c.quantity,
                    "expected": show(c.expected),
                    "computed": show(c.computed),
                    "note": c.note,
                }
                for c in self.failures()
            ],
        }


def _solve(g, variant, opts=None):
    return dimension(g, variant, opts=opts)


def wheel_path_structure(n, W, outer):
    """Rim path-structure necessary condition for wheel resolving sets.

    True iff every maximal rim run of W minus the hub (and, when outer is
    False, also of the rim complement) has order 1 or 3; a run covering the
    whole rim counts as order n.
    """
    hub = n
    inside = {v for v in W if v != hub}
    if not _runs_ok(n, inside):
        return False
    if not outer:
        complement = set(range(n)) - inside
        if not _runs_ok(n, complement):
            return False
    return True


def _runs_ok(n, subset):
    if not subset:
        return True
    if len(subset) == n:
        return n in (1, 3)
    runs = []
    # rotate so that a gap sits at the start, then count consecutive runs
    start = next(v for v in range(n) if v not in subset)
    run = 0
    for i in range(1, n + 1):
        v = (start + i) % n
        if v in subset:
            run += 1
        elif run:
            runs.append(run)
            run = 0
    return all(r in (1, 3) for r in runs)


# --- theorem checks ---------------------------------------------------------


def check_cycles(n_lo=3, n_hi=12, **_):
    check = TheoremCheck("cycles")
    for n in range(n_lo, n_hi + 1):
        spec = FamilySpec("cycle", (n,))
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


def check_wheels(n_lo=3, n_hi=12, **_):
    check = TheoremCheck("wheels")
    for n in range(n_lo, n_hi + 1):
        spec = FamilySpec("wheel", (n,))
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


def check_wheel_ldim(n_lo=3, n_hi=12, **_):
    check = TheoremCheck("wheel_ldim")
    for n in range(n_lo, n_hi + 1):
        spec = FamilySpec("wheel", (n,))
        g = gen(spec)
        check.add(
            spec,
            "ldim",
            closed_form(spec, Variant.LDIM),
            _solve(g, Variant.LDIM).value,
        )
    return check


def minimum_resolving_sets(g, variant, size, dm=None):
    """All resolving sets of the given (minimum) cardinality."""
    from itertools import combinations

    from .multisets import is_resolving

    if dm is None:
        dm = all_pairs_distances(g)
    return [
        W for W in combinations(range(g.n), size) if is_resolving(dm, g, W, variant)
    ]


def check_wheel_lemma_1or3(n_lo=4, n_hi=12, variants=("lmd", "ldim_ms"), **_):
    """Necessary-condition check on every minimum wheel resolving set.

    This check applies the structure condition as a hard necessary one; for
    the outer variant on odd wheels it reports the refuting bases (a rim
    P_2 inside W is invisible to the outer comparison, so such bases do
    resolve), leaving interpretation to the caller.
    """
    check = TheoremCheck("wheel_lemma_1or3")
    wanted = {Variant.from_name(v) for v in variants}
    for n in range(n_lo, n_hi + 1):
        g = gen(FamilySpec("wheel", (n,)))
        dm = all_pairs_distances(g)
        for variant, outer in ((Variant.LMD, False), (Variant.LDIM_MS, True)):
            if variant not in wanted:
                continue
            result = _solve(g, variant)
            if result.is_infinite:
                continue
            for W in minimum_resolving_sets(g, variant, int(result.value), dm):
                check.add_flag(
                    f"wheel:{n} W={W}",
                    f"{variant.name.lower()}_path_structure",
                    wheel_path_structure(n, W, outer),
                )
    return check


def check_complete(n_lo=2, n_hi=8, **_):
    check = TheoremCheck("complete")
    for n in range(n_lo, n_hi + 1):
        spec = FamilySpec("complete", (n,))
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


def _order_vectors(lo, hi, sizes):
    for m in sizes:
        yield from combinations_with_replacement(range(lo, hi + 1), m)


def check_amal(max_order=4, sizes=(2, 3), **_):
    check = TheoremCheck("amal")
    for orders in _order_vectors(1, max_order, sizes):
        spec = FamilySpec("amal", orders)
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


def check_edge_amal(max_order=4, sizes=(2, 3), **_):
    check = TheoremCheck("edge_amal")
    for orders in _order_vectors(2, max_order, sizes):
        spec = FamilySpec("edge_amal", orders)
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


CORONA_MIXED_INSTANCES = (
    ("path:3", (1, 1, 1)),
    ("path:3", (1, 2, 1)),
    ("path:3", (1, 1, 2)),
    ("path:3", (3, 1, 1)),
    ("path:3", (2, 3, 2)),
    ("path:4", (1, 1, 1, 1)),
    ("path:4", (2, 1, 1, 2)),
    ("path:4", (1, 2, 2, 1)),
    ("path:5", (1, 1, 1, 1, 1)),
    ("path:2", (2, 2)),
    ("cycle:3", (1, 1, 1)),
    ("cycle:3", (2, 2, 2)),
    ("cycle:3", (1, 2, 3)),
    ("cycle:3", (3, 3, 3)),
    ("cycle:4", (1, 1, 1, 1)),
    ("cycle:4", (2, 1, 2, 1)),
    ("cycle:4", (2, 2, 2, 2)),
    ("cycle:5", (1, 1, 1, 1, 1)),
    ("star:3", (1, 1, 1, 1)),
    ("star:3", (2, 1, 1, 1)),
)


def check_corona(path_orders=(3, 4, 5), **_):
    """Corona lower bounds everywhere; sharpness at odd path orders.

    Sharpness does not extend to every path of order >= 3: exhaustive
    search gives lmd(P_4 . K_2) = ldim_ms(P_4 . K_2) = 5, so equality is
    asserted for odd orders only and the even orders get the inequality.
    """
    check = TheoremCheck("corona")
    for k in path_orders:
        spec = FamilySpec(
            "corona", tuple([2] * k), (FamilySpec("path", (k,)),)
        )
        g = gen(spec)
        lmd = _solve(g, Variant.LMD).value
        ldms = _solve(g, Variant.LDIM_MS).value
        if k % 2 == 1:
            check.add(spec, "lmd_sharp", k, lmd)
            check.add(spec, "ldim_ms_sharp", k, ldms)
        else:
            check.add_flag(spec, "lmd_ge_m", lmd >= k)
            check.add_flag(spec, "ldim_ms_ge_sum", ldms >= k)
    for base_text, orders in CORONA_MIXED_INSTANCES:
        spec = FamilySpec(
            "corona", tuple(orders), (parse_spec_cached(base_text),)
        )
        g = gen(spec)
        m = len(orders)
        lmd = _solve(g, Variant.LMD).value
        ldms = _solve(g, Variant.LDIM_MS).value
        if all(mi <= 2 for mi in orders):
            # corrected: order-1 pendant cliques create no K-end pair, so the
            # finite lower bound counts the order-2 cliques only (P_3 with one
            # pendant vertex per base vertex is bipartite, lmd 1 < 3)
            check.add_flag(
                spec, "lmd_ge_m2", lmd >= sum(1 for mi in orders if mi == 2)
            )
        else:
            check.add_flag(spec, "lmd_infinite_for_big_cliques", lmd == INFINITE)
        check.add_flag(
            spec, "ldim_ms_ge_sum", ldms >= sum(mi - 1 for mi in orders)
        )
    return check


@lru_cache(maxsize=None)
def parse_spec_cached(text):
    from .generators import parse_family_spec

    return parse_family_spec(text)


UNICYCLIC_INSTANCES = (
    (3, (0,)),
    (3, (0, 1, 3)),
    (4, (1,)),
    (4, (0, 2)),
    (5, (2, 0)),
    (5, (0, 5, 6)),
    (6, (1,)),
    (6, (0, 3, 6)),
    (7, (4,)),
)


def check_unicyclic(instances=UNICYCLIC_INSTANCES, **_):
    check = TheoremCheck("unicyclic")
    for c, parents in instances:
        spec = FamilySpec("unicyclic", (c,) + tuple(parents))
        g = gen(spec)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            check.add(
                spec,
                variant.name.lower(),
                closed_form(spec, variant),
                _solve(g, variant).value,
            )
    return check


def check_clique_gadget(sizes=(2, 3, 4, 5, 6, 8), solve_up_to=12, **_):
    check = TheoremCheck("clique_gadget")
    for n in sizes:
        gadget = gen_clique_gadget(n)
        g = gadget.graph
        target = max(1, (n - 1).bit_length())
        from .graph import clique_number

        check.add(f"gadget:{n}", "omega", n, clique_number(g))
        cert_lmd = certify(g, gadget.landmarks, Variant.LMD)
        cert_out = certify(g, gadget.landmarks, Variant.LDIM_MS)
        check.add_flag(f"gadget:{n}", "landmarks_resolve_lmd", cert_lmd.valid)
        check.add_flag(f"gadget:{n}", "landmarks_resolve_ldim_ms", cert_out.valid)
        if n > 2:
            report = lower_bounds(g)
            check.add(
                f"gadget:{n}", "lower_bound", target, report.lower[Variant.LMD].value
            )
        if g.n <= solve_up_to:
            for variant in (Variant.LMD, Variant.LDIM_MS):
                check.add(
                    f"gadget:{n}",
                    f"{variant.name.lower()}_exact",
                    target,
                    _solve(g, variant).value,
                )
        else:
            # certificate (upper bound |W| = target) + lower bound pin the value
            check.add_flag(
                f"gadget:{n}",
                "certificate_matches_bound",
                len(gadget.landmarks) == target,
            )
    return check


def check_chromatic_bound(chi_hi=50, **_):
    check = TheoremCheck("chromatic_bound")
    from .bounds import g_bound

    for chi in range(1, chi_hi + 1):
        check.add(f"(d=2,chi={chi})", "g", _ceil_div(chi, 2), g_bound(2, chi))
        # ceil(sqrt(chi + 2)) - 1, via isqrt to stay in exact integers
        check.add(
            f"(d=3,chi={chi})", "g", max(1, math.isqrt(chi + 1)), g_bound(3, chi)
        )
    return check


def check_maxsubgraph_sharpness(**_):
    """Leafless-core upper bound on pendant instances, with equality cases.

    One pendant vertex per core vertex; equality is asserted where it
    actually holds (LDIM_MS on small cycles, LMD on even cycles) and the
    inequality elsewhere (for odd cycles the pendants break the odd-cycle
    obstruction, so lmd drops strictly below the core's value).
    """
    check = TheoremCheck("maxsubgraph_sharpness")
    for base_text in ("cycle:5", "cycle:6", "cycle:7"):
        base = gen(parse_spec_cached(base_text))
        spec = FamilySpec(
            "corona", tuple([1] * base.n), (parse_spec_cached(base_text),)
        )
        g = gen(spec)
        core, vertices = two_core(g)
        check.add(spec, "core_vertices", tuple(range(base.n)), vertices)
        for variant in (Variant.LMD, Variant.LDIM_MS):
            core_val = _solve(core, variant).value
            val = _solve(g, variant).value
            name = variant.name.lower()
            check.add_flag(spec, f"{name}_le_core", val <= core_val)
            if variant is Variant.LDIM_MS or base.n % 2 == 0:
                check.add(spec, f"{name}_equals_core", core_val, val)
    return check


# --- exhaustive small-graph corpus ------------------------------------------


def _examine_graph(g):
    """Per-graph clause checks for the exhaustive corpus; returns failures."""
    failures = []
    n = g.n
    dm = all_pairs_distances(g)
    results = naive_all_dimensions(g, dm)
    val = {v: results[v].value for v in Variant}
    desc = f"n={n} edges={g.edges}"

    chain_ok = (
        1 <= val[Variant.LDIM] <= val[Variant.DIM] <= val[Variant.DIM_MS]
        and val[Variant.DIM_MS] <= val[Variant.MD]
        and val[Variant.LDIM] <= val[Variant.LDIM_MS] <= val[Variant.LMD]
        and val[Variant.LMD] <= val[Variant.MD]
        and val[Variant.LDIM_MS] <= val[Variant.DIM_MS]
        and (n < 2 or val[Variant.DIM_MS] <= n - 1)
    )
    if not chain_ok:
        failures.append(("observation_chain", desc))

    bip = bipartition(g) is not None
    if ((val[Variant.LMD] == 1) != bip) or ((val[Variant.LDIM_MS] == 1) != bip):
        failures.append(("bipartite_iff_1", desc))

    md_inf = val[Variant.MD] == INFINITE
    if (dm.diameter <= 2 and not is_path_graph(g)) and not md_inf:
        failures.append(("infmd_diam", desc))
    if same_neighborhood_triples(g) and not md_inf:
        failures.append(("infmd_triple", desc))
    for cert in infinite_certificates(g, dm):
        if val[cert.variant] != INFINITE:
            failures.append(("certificate_confirmed", f"{desc} {cert.kind}"))

    if n >= 2:
        extremal = val[Variant.DIM_MS] == n - 1
        if extremal != (is_regular(g) and dm.diameter <= 2):
            failures.append(("dms_extremal", desc))

    report = lower_bounds(g, dm)
    for variant in (Variant.LMD, Variant.LDIM_MS):
        if report.lower[variant].value > val[variant]:
            failures.append(
                ("lower_bound_le_exact", f"{desc} {report.lower[variant]}")
            )

    try:
        core, vertices = two_core(g)
    except NoLeaflessSubgraphError:
        core = None
    if core is not None and core.n < n:
        core_vals = naive_all_dimensions(
            core, variants=[Variant.LMD, Variant.LDIM_MS]
        )
        for variant in (Variant.LMD, Variant.LDIM_MS):
            if val[variant] > core_vals[variant].value:
                failures.append(("maxsubgraph_le", desc))
    return failures


def _scan_masks(args):
    n, lo, hi = args
    count = 0
    failures = []
    for mask in range(lo, hi):
        g = graph_from_mask(n, mask)
        if not g.is_connected():
            continue
        count += 1
        failures.extend(_examine_graph(g))
    return count, failures


_CORPUS_CACHE = {}


def corpus_scan(n_max=6, jobs=1):
    """Check every corpus clause on all labeled connected graphs, n <= n_max.

    Returns (graph_count, failures) where failures is a list of
    (clause, description) pairs; cached per n_max.
    """
    if n_max in _CORPUS_CACHE:
        return _CORPUS_CACHE[n_max]
    count = 0
    failures = []
    for n in range(1, n_max + 1):
        total = 1 << (n * (n - 1) // 2)
        if jobs > 1 and total > 1 << 10:
            chunk = (total + 4 * jobs - 1) // (4 * jobs)
            tasks = [
                (n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)
            ]
            with Pool(jobs) as pool:
                for c, f in pool.imap(_scan_masks, tasks):
                    count += c
                    failures.extend(f)
        else:
            c, f = _scan_masks((n, 0, total))
            count += c
            failures.extend(f)
    _CORPUS_CACHE[n_max] = (count, failures)
    return count, failures


def _corpus_check(theorem_id, clauses, n_max, jobs):
    count, failures = corpus_scan(n_max, jobs)
    check = TheoremCheck(theorem_id)
    relevant = [f for f in failures if f[0] in clauses]
    check.add_flag(
        f"all connected graphs n<={n_max} ({count} graphs)",
        "+".join(clauses),
        not relevant,
        note="; ".join(f"{c}: {d}" for c, d in relevant[:5]),
    )
    return check


def check_observation_chain(n_max=5, jobs=1, **_):
    return _corpus_check("observation_chain", ("observation_chain",), n_max, jobs)


def check_bipartite_iff_1(n_max=5, jobs=1, **_):
    return _corpus_check("bipartite_iff_1", ("bipartite_iff_1",), n_max, jobs)


def check_infmd(n_max=5, jobs=1, **_):
    return _corpus_check(
        "infmd", ("infmd_diam", "infmd_triple", "certificate_confirmed"), n_max, jobs
    )


def check_dms_extremal(n_max=5, jobs=1, **_):
    return _corpus_check("dms_extremal", ("dms_extremal",), n_max, jobs)


def check_lower_bounds(n_max=5, jobs=1, **_):
    return _corpus_check("lower_bounds", ("lower_bound_le_exact",), n_max, jobs)


def check_maxsubgraph(n_max=5, jobs=1, **_):
    return _corpus_check("maxsubgraph", ("maxsubgraph_le",), n_max, jobs)


THEOREMS = {
    "cycles": check_cycles,
    "wheels": check_wheels,
    "wheel_ldim": check_wheel_ldim,
    "wheel_lemma_1or3": check_wheel_lemma_1or3,
    "complete": check_complete,
    "amal": check_amal,
    "edge_amal": check_edge_amal,
    "corona": check_corona,
    "unicyclic": check_unicyclic,
    "clique_gadget": check_clique_gadget,
    "chromatic_bound": check_chromatic_bound,
    "maxsubgraph_sharpness": check_maxsubgraph_sharpness,
    "observation_chain": check_observation_chain,
    "bipartite_iff_1": check_bipartite_iff_1,
    "infmd": check_infmd,
    "dms_extremal": check_dms_extremal,
    "lower_bounds": check_lower_bounds,
    "maxsubgraph": check_maxsubgraph,
}


def run_theorem(theorem_id, **params):
    if theorem_id not in THEOREMS:
        raise NoClosedFormError(f"unknown theorem id {theorem_id!r}")
    return THEOREMS[theorem_id](**params)


def run_all(**params):
    return [run_theorem(tid, **params) for tid in THEOREMS]
