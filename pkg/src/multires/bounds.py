"""Closed-form lower bounds, upper bounds and infiniteness certificates.

Bounds never substitute for exact solving; they annotate results, prune the
search, and let the verification harness cross-check exact values.
"""

import math
from dataclasses import dataclass

from .graph import (
    CHI_CAP,
    OMEGA_CAP,
    all_pairs_distances,
    bipartition,
    chromatic_number,
    clique_number,
    k_end_structure,
    two_core,
)
from .multisets import Variant


@dataclass(frozen=True)
class Bound:
    value: int
    provenance: str


@dataclass(frozen=True)
class InfiniteCertificate:
    """Structural witness that a variant's dimension is infinite."""

    variant: Variant
    kind: str  # diam_le_2 | triple_open_neighborhood | triple_k_end
    witness: tuple
    description: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    lower: dict  # Variant -> best Bound
    lower_candidates: dict  # Variant -> tuple of all applicable Bounds
    upper: dict  # Variant -> int (n-1 for the outer variants)
    certificates: tuple  # InfiniteCertificate, ...
    skipped: tuple  # human-readable notes for bounds skipped by caps

    def to_json_dict(self):
        return {
            "n": self.n,
            "lower": {
                v.name.lower(): {"value": b.value, "provenance": b.provenance}
                for v, b in sorted(self.lower.items(), key=lambda kv: kv[0].name)
            },
            "upper": {
                v.name.lower(): u
                for v, u in sorted(self.upper.items(), key=lambda kv: kv[0].name)
            },
            "certificates": [
                {
                    "variant": c.variant.name.lower(),
                    "kind": c.kind,
                    "witness": list(c.witness),
                }
                for c in self.certificates
            ],
            "skipped": list(self.skipped),
        }


def g_bound(d, chi):
    """Smallest k with C(k+d-1,d-1) + C(k+d-2,d-1) - d + 1 >= chi.

    Exact integer arithmetic throughout; k is found by incrementing from 1.
    """
    if d < 2:
        raise ValueError("g_bound requires diameter >= 2")
    if chi < 1:
        raise ValueError("g_bound requires chi >= 1")
    k = 1
    while True:
        if math.comb(k + d - 1, d - 1) + math.comb(k + d - 2, d - 1) - d + 1 >= chi:
            return k
        k += 1


def clique_log_bound(omega):
    """ceil(log2 omega), computed exactly."""
    return (omega - 1).bit_length()


def is_path_graph(g):
    degs = sorted(g.degree(u) for u in range(g.n))
    if g.n == 1:
        return True
    if g.n == 2:
        return degs == [1, 1]
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]) and g.is_connected()


def same_neighborhood_triples(g):
    """Groups of >= 3 vertices sharing one open neighbourhood."""
    groups = {}
    for u in range(g.n):
        groups.setdefault(g.adj[u], []).append(u)
    return [tuple(vs) for vs in groups.values() if len(vs) >= 3]


def infinite_certificates(g, dm=None, cap=OMEGA_CAP):
    """Structural proofs of infiniteness for MD and LMD.

    MD: diameter <= 2 (paths excepted: md(P_2) = md(P_3) = 1, so the raw
    diameter condition is false for them) or three vertices with the same
    open neighbourhood. LMD: a clique with three or more K-end vertices.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    certs = []
    diam = dm.diameter
    if diam <= 2 and not is_path_graph(g):
        far = next(
            (u, v)
            for u in range(g.n)
            for v in range(g.n)
            if dm.d[u][v] == diam
        )
        certs.append(
            InfiniteCertificate(
                Variant.MD,
                "diam_le_2",
                far,
                f"diameter {diam} <= 2 and graph is not a path",
            )
        )
    for triple in same_neighborhood_triples(g):
        certs.append(
            InfiniteCertificate(
                Variant.MD,
                "triple_open_neighborhood",
                triple,
                f"vertices {triple} share one open neighbourhood",
            )
        )
    if g.n <= cap:
        for clique, ends in k_end_structure(g, cap):
            if len(ends) >= 3:
                certs.append(
                    InfiniteCertificate(
                        Variant.LMD,
                        "triple_k_end",
                        ends,
                        f"clique {clique} has {len(ends)} K-end vertices",
                    )
                )
    return certs


def lower_bounds(g, dm=None, omega_cap=OMEGA_CAP, chi_cap=CHI_CAP):
    """Best applicable lower bound for LMD and LDIM_MS, with provenance.

    Each candidate bound is computed only when its inputs fit the exact caps;
    skipped candidates are listed so callers can tell that the report is
    partial rather than silently heuristic.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    candidates = [Bound(1, "trivial_1")]
    skipped = []
    bipartite = bipartition(g) is not None
    if not bipartite:
        candidates.append(Bound(2, "nonbipartite_2"))
    if g.n <= omega_cap:
        omega = clique_number(g)
        candidates.append(Bound(max(1, clique_log_bound(omega)), "clique_log"))
    else:
        omega = None
        skipped.append(f"clique_log: n={g.n} exceeds omega cap {omega_cap}")
    diam = dm.diameter
    if diam >= 2:
        if g.n <= chi_cap:
            chi = chromatic_number(g, lower=omega or 1)
            candidates.append(Bound(g_bound(diam, chi), "chromatic_gdchi"))
        else:
            skipped.append(f"chromatic_gdchi: n={g.n} exceeds chi cap {chi_cap}")
    best = max(candidates, key=lambda b: b.value)
    lower = {Variant.LMD: best, Variant.LDIM_MS: best}
    return BoundReport(
        n=g.n,
        lower=lower,
        lower_candidates={
            Variant.LMD: tuple(candidates),
            Variant.LDIM_MS: tuple(candidates),
        },
        upper={Variant.DIM_MS: g.n - 1, Variant.LDIM_MS: g.n - 1},
        certificates=tuple(infinite_certificates(g, dm, cap=omega_cap)),
        skipped=tuple(skipped),
    )


def is_regular(g):
    degs = {g.degree(u) for u in range(g.n)}
    return len(degs) == 1


def dms_extremal_check(g, solved, dm=None):
    """Check dim_ms = n-1 <=> regular with diameter <= 2 (both directions)."""
    if solved.variant is not Variant.DIM_MS:
        raise ValueError("dms_extremal_check needs the exact DIM_MS result")
    if dm is None:
        dm = all_pairs_distances(g)
    extremal = solved.value == g.n - 1
    structural = is_regular(g) and dm.diameter <= 2
    return extremal == structural


@dataclass(frozen=True)
class MaxSubgraphBound:
    """2-core H of g with the claims lmd(g) <= lmd(H), ldim_ms(g) <= ldim_ms(H)."""

    core: object  # Graph
    core_vertices: tuple
    claimed_upper_for: tuple = (Variant.LMD, Variant.LDIM_MS)


def maxsubgraph_bound(g):
    """The leafless-core upper-bound claims, for verify to discharge exactly.

    Raises NoLeaflessSubgraphError when g is a tree.
    """
    core, vertices = two_core(g)
    return MaxSubgraphBound(core=core, core_vertices=vertices)
