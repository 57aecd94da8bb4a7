"""Named verification suites shared by the CLI and the test-suite."""

from __future__ import annotations

from pathlib import Path

from . import catalog, census, liecount, partitions, permgroup, wreath
from .census import Report
from .liecount import SimpleGroupId

SUITES = ("tables", "inequalities", "wreath", "oracle", "all")

EXPECTED_MAX_D = {
    "primitive-chain": 20,
    "alternating-4k2-failure": 9,
}


# ---------------------------------------------------------------------------
# catalog fixtures


def small_catalog(max_degree: int = 8) -> list[permgroup.PermutationGroup]:
    """Catalog groups of degree at most ``max_degree``, oracle-sized."""
    groups = []
    for n in range(1, max_degree + 1):
        groups.append(catalog.cyclic(n))
        if n >= 3:
            groups.append(catalog.dihedral(n))
        groups.append(catalog.symmetric(n))
        groups.append(catalog.alternating(n))
    groups.append(catalog.klein_four_regular())
    for name in catalog.stored_names():
        if catalog._read_catalog(str(catalog.default_catalog_path()))[name]["degree"] <= max_degree:
            groups.append(catalog.get(name))
    return groups


def subgroup_pairs() -> list[tuple[permgroup.PermutationGroup, permgroup.PermutationGroup]]:
    pairs = []
    for n in range(3, 7):
        S, A, C = catalog.symmetric(n), catalog.alternating(n), catalog.cyclic(n)
        D = catalog.dihedral(n)
        pairs += [(S, A), (S, C), (S, D), (D, C), (S, S), (S, catalog.trivial(n))]
    pairs.append((catalog.symmetric(4), catalog.klein_four_regular()))
    for q in (5, 7, 9, 11):
        pairs.append((catalog.get(f"PGL2({q})"), catalog.get(f"PSL2({q})")))
    return pairs


def normal_pairs() -> list[tuple[permgroup.PermutationGroup, permgroup.PermutationGroup]]:
    pairs = []
    for n in range(3, 7):
        S = catalog.symmetric(n)
        pairs += [(S, catalog.alternating(n)), (S, S), (S, catalog.trivial(n)),
                  (catalog.dihedral(n), catalog.cyclic(n))]
    S4 = catalog.symmetric(4)
    pairs += [(S4, catalog.klein_four_regular()), (catalog.alternating(4), catalog.klein_four_regular())]
    for q in (5, 7, 9, 11):
        pairs.append((catalog.get(f"PGL2({q})"), catalog.get(f"PSL2({q})")))
    return pairs


def wreath_oracle_pairs():
    bases = [catalog.cyclic(2), catalog.cyclic(3), catalog.symmetric(3), catalog.cyclic(4)]
    tops = [catalog.cyclic(1), catalog.cyclic(2), catalog.cyclic(3), catalog.symmetric(3),
            catalog.cyclic(4), catalog.klein_four_regular()]
    return [(a, p) for a in bases for p in tops]


def regular_tops(r_max: int = 12):
    tops = [catalog.cyclic(r) for r in range(1, r_max + 1)]
    tops.append(catalog.klein_four_regular())
    return tops


def _name(G) -> str:
    return G.name or f"group(deg {G.degree})"


# ---------------------------------------------------------------------------
# suites


def tables_suite(data: str | Path | None = None) -> Report:
    rows = census.load(data)
    return census.verify_all(rows)


def inequalities_suite(d_max: int = 1000) -> Report:
    rep = Report("inequalities")
    for d in range(1, d_max + 1):
        if not partitions.check_pribitkin(d):
            rep.add(f"pribitkin/{d}", False)
    rep.add(f"pribitkin/1..{d_max}", not rep.failures)
    bad = [d for d in range(2, d_max + 1) if not partitions.check_stirling(d)]
    rep.add(f"stirling/2..{d_max}", not bad, detail=";".join(map(str, bad[:10])))
    for name, expected in EXPECTED_MAX_D.items():
        got = partitions.max_d_satisfying(name)
        rep.add(f"max-d/{name}", got == expected, got, expected)
    final = partitions.holds("final-chain", 21)
    rep.add("final-chain/d=21-false", not final)
    direct = partitions.max_d_satisfying("primitive-direct-failure")
    rep.add("max-d/primitive-direct-failure<=20", direct <= 20, direct, 20)
    impr = partitions.max_d_satisfying("imprimitive-chain")
    rep.add("max-d/imprimitive-chain", True, impr, detail="largest d with the chain holding")
    m12 = liecount.order(SimpleGroupId("Sporadic", name="M12"))
    rep.add("praeger-saxl/M12", partitions.check_praeger_saxl(m12, 12), m12, 4**12)
    bad = [(d, k, d // k) for d in range(4, 31) for k in range(2, d // 2 + 1)
           if d % k == 0 and not partitions.check_imprimitive_index_bound(d, k, d // k)]
    rep.add("imprimitive-index/d<=30", not bad, detail=str(bad))
    suz = [2 ** f for f in range(3, 16, 2) if liecount.suzuki_exception_holds(2 ** f)]
    rep.add("suzuki/only-q=8", suz == [8], detail=str(suz))
    return rep


def wreath_suite() -> Report:
    rep = Report("wreath")
    bad = [(k, r) for k in range(1, 7) for r in range(1, 13)
           if wreath.k_wreath_generic(k, catalog.cyclic(r)) != wreath.k_wreath_cyclic(k, r)]
    rep.add("generic=cyclic/k<=6,r<=12", not bad, detail=str(bad))
    for A, P in wreath_oracle_pairs():
        T = wreath.tuple_group(A, P)
        got, want = wreath.k_wreath_generic(A.k(), P), T.k()
        rep.add(f"tuple/{_name(A)} wr {_name(P)}", got == want, got, want)
    bad = [(_name(P), k) for P in regular_tops(12) for k in range(1, 7)
           if not wreath.check_regular_estimate(k, P)]
    rep.add("regular-estimate/r<=12,k<=6", not bad, detail=str(bad))
    rep.add("m12-growth/r=300", wreath.check_m12_growth(300))
    sweep = wreath.m12_threshold_sweep(400)
    rep.add("m12-growth/threshold", sweep["threshold"] is not None, sweep["threshold"],
            detail=f"true below threshold at r in {sweep['true_below_threshold']}")
    rep.summary = {"m12_threshold": sweep["threshold"],
                   "m12_true_below_threshold": sweep["true_below_threshold"]}
    return rep


def oracle_suite() -> Report:
    rep = Report("oracle")
    for q in (4, 5, 7, 9, 11):
        for fam in ("PSL", "PGL"):
            gid = SimpleGroupId(fam, 2, q)
            want = liecount.k_exact(gid).value
            got = catalog.get(f"{fam}2({q})").k()
            rep.add(f"{gid.label}/formula=oracle", got == want, got, want)
    for name, want in (("M11", 10), ("M12", 15)):
        got = catalog.get(name).k()
        rep.add(f"{name}/k", got == want, got, want)
    for G, H in subgroup_pairs():
        rep.add(f"subgroup/{_name(G)}>={_name(H)}", permgroup.check_subgroup_inequalities(G, H))
    for G, N in normal_pairs():
        rep.add(f"normal/{_name(G)}|>{_name(N)}", permgroup.check_normal_inequalities(G, N))
    for G in small_catalog(8) + [catalog.get("M11"), catalog.get("M12")]:
        got = permgroup.burnside_class_count(G)
        rep.add(f"burnside/{_name(G)}", got == G.k(), got, G.k())
    for P in small_catalog(8):
        rep.add(f"pyber/{_name(P)}", permgroup.check_pyber_bound(P), P.k(), P.degree)
    return rep


def run_suite(name: str, data: str | Path | None = None) -> Report:
    if name == "tables":
        return tables_suite(data)
    if name == "inequalities":
        return inequalities_suite()
    if name == "wreath":
        return wreath_suite()
    if name == "oracle":
        return oracle_suite()
    if name == "all":
        return census.merge("all", [tables_suite(data), inequalities_suite(),
                                    wreath_suite(), oracle_suite()])
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
