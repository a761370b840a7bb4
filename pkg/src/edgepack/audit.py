"""Structural audits of a matching pair: leftover shapes, exchange-lemma
predicates, and the discharging ledger.

The predicates are evaluated literally on the given pair with no optimality
assumption.  For pairs that are switch-stable under the (2,1,3) neighborhood,
the first four (no C1 subtree, no cycle, no long path, no linked claws) are
hard guarantees; the remaining ones hold only under stronger global optimality
conditions and are reported as diagnostics.

Charges are exact rationals: each conflict-graph vertex starts at its degree
minus 9/2, and rule R0 moves one unit along every matched edge from a
leftover-degree-1 endpoint's component to a leftover-degree-2 endpoint's
component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .conflict import build_conflict_graph
from .leftover import K13, P3, P4, VIOLATION, build_leftover
from .matching import find_improving_move


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


@dataclass
class LemmaReport:
    """Outcome of every structural-lemma predicate on one pair."""

    no_c1: PredicateResult
    no_cycle: PredicateResult
    no_long_path: PredicateResult
    no_k13_k13_link: PredicateResult
    no_k13_p4_link: PredicateResult
    no_p4_midp3_link: PredicateResult
    no_p4_at_all: PredicateResult
    paired_p3_count: int
    paired_p3_at_most_one: bool
    paired_p3_pairs: tuple
    leaf_double_mid_link: PredicateResult
    chain_p3_p3_p3: PredicateResult
    two_leaves_two_mids: PredicateResult
    stability: tuple | None = None

    HARD = ("no_c1", "no_cycle", "no_long_path", "no_k13_k13_link")

    def hard_violations(self):
        return [name for name in self.HARD if not getattr(self, name).holds]

    def to_json_dict(self):
        out = {}
        for name in ("no_c1", "no_cycle", "no_long_path", "no_k13_k13_link",
                     "no_k13_p4_link", "no_p4_midp3_link", "no_p4_at_all",
                     "leaf_double_mid_link", "chain_p3_p3_p3", "two_leaves_two_mids"):
            pr = getattr(self, name)
            out[name] = {"holds": pr.holds, "witness": pr.witness}
        out["paired_p3"] = {"count": self.paired_p3_count,
                            "at_most_one": self.paired_p3_at_most_one,
                            "pairs": [list(p) for p in self.paired_p3_pairs]}
        out["stability"] = list(self.stability) if self.stability else None
        return out


@dataclass
class ChargeReport:
    """Discharging ledger: initial charges, R0 transfers, per-component nets."""

    initial: dict                 # EdgeId -> Fraction(d_H - 9/2)
    component_kinds: tuple        # kind per component index
    component_edges: tuple        # leftover EdgeIds per component
    component_initial: tuple      # Fraction per component
    transfers: tuple              # (source comp, sink comp, via U edge) each worth 1
    component_net: tuple          # Fraction per component
    total_initial: Fraction = field(default=Fraction(0))
    total_net: Fraction = field(default=Fraction(0))

    def to_json_dict(self):
        return {
            "initial": {str(e): float(q) for e, q in sorted(self.initial.items())},
            "components": [
                {"kind": self.component_kinds[i],
                 "edges": list(self.component_edges[i]),
                 "initial": float(self.component_initial[i]),
                 "net": float(self.component_net[i])}
                for i in range(len(self.component_kinds))
            ],
            "transfers": [{"from": a, "to": b, "edge": e, "amount": 1}
                          for a, b, e in self.transfers],
            "total_initial": float(self.total_initial),
            "total_net": float(self.total_net),
        }


def classify_components(g, pair):
    """Classified components of the leftover graph for this pair."""
    return list(build_leftover(g, pair.union()).components)


def _leftover_degrees(g, leftover_edges):
    deg = [0] * g.n
    for e in leftover_edges:
        u, v = g.endpoints(e)
        deg[u] += 1
        deg[v] += 1
    return deg


def check_lemmas(g, pair, stability=None):
    """Evaluate every structural-lemma predicate on (g, pair).

    Violations carry a concrete witness of vertex and edge ids.  The optional
    stability tuple is attached to the report so downstream consumers know
    which predicates were guaranteed at that level.
    """
    lg = build_leftover(g, pair.union())
    comps = lg.components
    comp_of = lg.component_of()
    union = sorted(pair.union())
    left = set(lg.edges)
    ldeg = _leftover_degrees(g, lg.edges)
    lnbr = [[] for _ in range(g.n)]
    for e in lg.edges:
        u, v = g.endpoints(e)
        lnbr[u].append(v)
        lnbr[v].append(u)

    no_c1 = PredicateResult(True)
    for e in lg.edges:
        for v, w in (g.endpoints(e), g.endpoints(e)[::-1]):
            mids = [x for x in lnbr[v] if x != w]
            tail = [x for x in lnbr[w] if x != v]
            if len(mids) >= 2:
                u1, u2 = mids[0], mids[1]
                for x in tail:
                    if x not in (u1, u2):
                        no_c1 = PredicateResult(False, {
                            "vertices": [u1, u2, v, w, x],
                            "edges": [g.edge_id(u1, v), g.edge_id(u2, v), e, g.edge_id(w, x)]})
                        break
            if not no_c1.holds:
                break
        if not no_c1.holds:
            break

    no_cycle = PredicateResult(True)
    for comp in comps:
        if comp.kind == VIOLATION and comp.reason == "cycle":
            no_cycle = PredicateResult(False, {"edges": list(comp.edges),
                                               "vertices": list(comp.vertices)})
            break

    no_long_path = PredicateResult(True)

    def dfs_path(v, path):
        if len(path) == 5:
            return list(path)
        for w in lnbr[v]:
            if w not in path:
                path.append(w)
                got = dfs_path(w, path)
                if got:
                    return got
                path.pop()
        return None

    for start in range(g.n):
        if ldeg[start] == 0:
            continue
        got = dfs_path(start, [start])
        if got:
            no_long_path = PredicateResult(False, {"vertices": got})
            break

    def _link_predicate(kind_a, kind_b):
        for e in union:
            x, y = g.endpoints(e)
            for p, q in ((x, y), (y, x)):
                ca, cb = comp_of.get(p), comp_of.get(q)
                if ca is None or cb is None or ca == cb:
                    continue
                if comps[ca].kind != kind_a or comps[cb].kind != kind_b:
                    continue
                return PredicateResult(False, {
                    "edge": e, "components": [list(comps[ca].edges), list(comps[cb].edges)]})
        return PredicateResult(True)

    no_k13_k13_link = _link_predicate(K13, K13)
    no_k13_p4_link = _link_predicate(K13, P4)

    no_p4_midp3_link = PredicateResult(True)
    for e in union:
        x, y = g.endpoints(e)
        for p, q in ((x, y), (y, x)):
            ca, cb = comp_of.get(p), comp_of.get(q)
            if ca is None or cb is None or ca == cb:
                continue
            if comps[ca].kind == P4 and comps[ca].degree_in(g, p) == 1 \
                    and comps[cb].kind == P3 and comps[cb].middle(g) == q:
                no_p4_midp3_link = PredicateResult(False, {
                    "edge": e, "p4": list(comps[ca].edges), "p3": list(comps[cb].edges)})
                break
        if not no_p4_midp3_link.holds:
            break

    no_p4_at_all = PredicateResult(True)
    for comp in comps:
        if comp.kind == P4:
            no_p4_at_all = PredicateResult(False, {"edges": list(comp.edges)})
            break

    p3_middle = {}
    for i, comp in enumerate(comps):
        if comp.kind == P3:
            p3_middle[comp.middle(g)] = i
    paired_pairs = []
    for e in union:
        x, y = g.endpoints(e)
        if x in p3_middle and y in p3_middle and p3_middle[x] != p3_middle[y]:
            paired_pairs.append((p3_middle[x], p3_middle[y], e))

    # one leaf of a P3 linked to another P3's middle and to a third P3
    leaf_double = PredicateResult(True)
    p3_comps = [i for i, c in enumerate(comps) if c.kind == P3]
    u_at = [[] for _ in range(g.n)]
    for e in union:
        u, v = g.endpoints(e)
        u_at[u].append(e)
        u_at[v].append(e)
    for ia in p3_comps:
        for leaf in comps[ia].leaves(g):
            links = []
            for e in u_at[leaf]:
                q = g.other_end(e, leaf)
                cb = comp_of.get(q)
                if cb is not None and cb != ia and comps[cb].kind == P3:
                    links.append((e, q, cb))
            has_mid = [(e, q, cb) for e, q, cb in links if comps[cb].middle(g) == q]
            if has_mid and len(links) >= 2:
                leaf_double = PredicateResult(False, {
                    "leaf": leaf, "p3": list(comps[ia].edges),
                    "links": [{"edge": e, "other_p3": list(comps[cb].edges)}
                              for e, q, cb in links]})
                break
        if not leaf_double.holds:
            break

    # P3 middle -> P3 leaf link whose middle links onward to a third P3
    chain = PredicateResult(True)
    for ia in p3_comps:
        mid_a = comps[ia].middle(g)
        for e in u_at[mid_a]:
            q = g.other_end(e, mid_a)
            ib = comp_of.get(q)
            if ib is None or ib == ia or comps[ib].kind != P3:
                continue
            if comps[ib].middle(g) == q:
                continue   # middle-middle links are the paired case
            mid_b = comps[ib].middle(g)
            for e2 in u_at[mid_b]:
                z = g.other_end(e2, mid_b)
                ic = comp_of.get(z)
                if ic is not None and ic != ib and comps[ic].kind == P3:
                    chain = PredicateResult(False, {
                        "p3_chain": [list(comps[ia].edges), list(comps[ib].edges),
                                     list(comps[ic].edges)],
                        "edges": [e, e2]})
                    break
            if not chain.holds:
                break
        if not chain.holds:
            break

    # both leaves of one P3 linked to middles of two other P3s
    two_leaves = PredicateResult(True)
    for ia in p3_comps:
        hits = []
        for leaf in comps[ia].leaves(g):
            for e in u_at[leaf]:
                q = g.other_end(e, leaf)
                cb = comp_of.get(q)
                if cb is not None and cb != ia and comps[cb].kind == P3 \
                        and comps[cb].middle(g) == q:
                    hits.append((leaf, e, cb))
        used = {cb for _, _, cb in hits}
        if len({leaf for leaf, _, _ in hits}) >= 2 and len(used) >= 2:
            two_leaves = PredicateResult(False, {
                "p3": list(comps[ia].edges),
                "links": [{"leaf": leaf, "edge": e, "other_p3": list(comps[cb].edges)}
                          for leaf, e, cb in hits]})
            break

    return LemmaReport(
        no_c1=no_c1,
        no_cycle=no_cycle,
        no_long_path=no_long_path,
        no_k13_k13_link=no_k13_k13_link,
        no_k13_p4_link=no_k13_p4_link,
        no_p4_midp3_link=no_p4_midp3_link,
        no_p4_at_all=no_p4_at_all,
        paired_p3_count=len(paired_pairs),
        paired_p3_at_most_one=len(paired_pairs) <= 1,
        paired_p3_pairs=tuple((a, b) for a, b, _ in paired_pairs),
        leaf_double_mid_link=leaf_double,
        chain_p3_p3_p3=chain,
        two_leaves_two_mids=two_leaves,
        stability=stability,
    )


def compute_charges(g, pair):
    """Discharging ledger for a pair whose leftover components are all basic.

    Initial charge of each leftover edge is its conflict-graph degree minus
    9/2.  R0: every M1 u M2 edge from a leftover-degree-1 vertex to a
    leftover-degree-2 vertex moves one unit between their components.
    Transfers conserve charge, so the net total equals the initial total.
    """
    lg = build_leftover(g, pair.union())
    comps = lg.components
    for comp in comps:
        if comp.kind == VIOLATION:
            raise ValueError(f"cannot compute charges: component {comp.edges} "
                             f"is a violation ({comp.reason})")
    h = build_conflict_graph(g, pair)
    half9 = Fraction(9, 2)
    initial = {}
    for i, e in enumerate(h.vertices):
        initial[e] = Fraction(h.degree(i)) - half9
    comp_of = lg.component_of()
    comp_initial = [sum((initial[e] for e in comp.edges), Fraction(0)) for comp in comps]
    ldeg = _leftover_degrees(g, lg.edges)
    transfers = []
    for e in sorted(pair.union()):
        x, y = g.endpoints(e)
        for p, q in ((x, y), (y, x)):
            if ldeg[p] == 1 and ldeg[q] == 2:
                transfers.append((comp_of[p], comp_of[q], e))
    net = list(comp_initial)
    for src, dst, _ in transfers:
        net[src] -= 1
        net[dst] += 1
    total_initial = sum(comp_initial, Fraction(0))
    total_net = sum(net, Fraction(0))
    assert total_initial == total_net
    return ChargeReport(
        initial=initial,
        component_kinds=tuple(c.kind for c in comps),
        component_edges=tuple(c.edges for c in comps),
        component_initial=tuple(comp_initial),
        transfers=tuple(transfers),
        component_net=tuple(net),
        total_initial=total_initial,
        total_net=total_net,
    )


def ky_bound(k, n):
    """Kostochka-Yancey lower bound on the edge count of a k-critical graph."""
    if not (isinstance(k, int) and isinstance(n, int)):
        raise ValueError("ky_bound takes integers")
    if k < 3 or n < k:
        raise ValueError("ky_bound requires k >= 3 and n >= k")
    return (Fraction(k, 2) - Fraction(1, k - 1)) * n - Fraction(k * (k - 3), 2 * (k - 1))


def is_switch_stable(g, pair, r=2, s=1, a=3):
    """True iff no move in the (r, s, a) neighborhood improves the objective."""
    if pair.graph is not g and pair.graph != g:
        raise ValueError("pair does not belong to this graph")
    return find_improving_move(pair, r, s, a) is None
