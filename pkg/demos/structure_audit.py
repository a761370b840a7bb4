"""Structural audit of a switch-stable pair, plus the discharging ledger.

The exchange arguments behind the pipeline promise that a switch-stable pair
leaves only small tree components, and that certain configurations (linked
claws, long paths, a C1 subtree) never survive.  This script audits those
predicates on a concrete pair and then evaluates the charge bookkeeping:
every conflict-graph vertex starts at degree - 4.5, rule R0 moves one unit
along each matched edge from a leaf component to a degree-2 vertex, and the
per-shape nets land exactly on -0.5 (P2), 0 (unpaired P3), +1 (paired P3),
and -1.5 (K13) whenever the surrounding structure matches.
"""

from fractions import Fraction

from edgepack import (check_lemmas, classify_components, compute_charges,
                      is_switch_stable, ky_bound, local_search, random_cubic)

g = random_cubic(36, 11)
result = local_search(g, 11)
pair = result.pair
print(f"graph: n={g.n}, m={g.m}; stable pair with union {pair.union_size}")
print(f"is_switch_stable replay: {is_switch_stable(g, pair)}")

report = check_lemmas(g, pair, stability=(2, 1, 3))
print("\nlemma predicates:")
for name in ("no_c1", "no_cycle", "no_long_path", "no_k13_k13_link",
             "no_k13_p4_link", "no_p4_midp3_link", "no_p4_at_all",
             "leaf_double_mid_link", "chain_p3_p3_p3", "two_leaves_two_mids"):
    pred = getattr(report, name)
    tag = "holds" if pred.holds else f"VIOLATED {pred.witness}"
    print(f"  {name:22s} {tag}")
print(f"  paired P3 pairs: {report.paired_p3_count} "
      f"(at most one: {report.paired_p3_at_most_one})")

charges = compute_charges(g, pair)
print("\ndischarging ledger:")
for i, kind in enumerate(charges.component_kinds):
    print(f"  component {i:2d} {kind:4s} edges={list(charges.component_edges[i])} "
          f"initial={charges.component_initial[i]} net={charges.component_net[i]}")
print(f"  transfers: {list(charges.transfers)}")
print(f"  totals: initial={charges.total_initial} net={charges.total_net} "
      "(conserved)")

kinds = [c.kind for c in classify_components(g, pair)]
print(f"\ncomponent census: { {k: kinds.count(k) for k in set(kinds)} }")

print("\nKostochka-Yancey lower bounds for 5-critical graphs:")
for n in (5, 9, 20, 40):
    b = ky_bound(5, n)
    assert b == Fraction(9, 4) * n - Fraction(5, 4)
    print(f"  n={n:3d}: |E| >= {b}")
