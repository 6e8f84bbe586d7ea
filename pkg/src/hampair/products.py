"""Arc-disjoint Hamiltonian path pairs in products of directed cycles.

The three-factor product C_m x C_n x C_l is handled by finding a
"strongly switchable" ordered pair of arc-disjoint Hamiltonian paths in
the two-factor base and lifting it layer by layer through the third
cycle.  When the base has a Hamiltonian directed cycle, the product
also contains a spanning C_{mn} x C_l, and a pair found there by
exhaustive search is mapped back through the cycle relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from . import oracle
from .core import (
    CayleyDigraph,
    FiniteAbelianGroup,
    InputError,
    LabeledWalk,
    Vertex,
    arc_disjoint,
    verify_hamiltonian,
)


def product_digraph(orders: Sequence[int]) -> CayleyDigraph:
    """The Cartesian product of directed cycles as a Cayley digraph on
    the product group, with one unit-vector generator per factor."""
    if any(o < 2 for o in orders):
        raise InputError(f"cycle lengths must be >= 2, got {tuple(orders)}")
    group = FiniteAbelianGroup(tuple(orders))
    gens = tuple(
        tuple(1 if j == i else 0 for j in range(len(orders)))
        for i in range(len(orders))
    )
    return CayleyDigraph(group, gens)


@dataclass(frozen=True)
class SwitchabilityData:
    iota_p: Vertex
    tau_p: Vertex
    iota_q: Vertex
    tau_q: Vertex
    alpha: Vertex  # tau_P - iota_Q
    beta: Vertex  # tau_Q - iota_P
    gamma: Vertex  # alpha - beta


def _switch_data(p: LabeledWalk, q: LabeledWalk) -> SwitchabilityData:
    g = p.digraph.group
    alpha = g.add(p.end, g.neg(q.start))
    beta = g.add(q.end, g.neg(p.start))
    gamma = g.add(alpha, g.neg(beta))
    return SwitchabilityData(p.start, p.end, q.start, q.end, alpha, beta, gamma)


def is_strongly_switchable(
    d: CayleyDigraph, p: LabeledWalk, q: LabeledWalk
) -> tuple[bool, SwitchabilityData, list[str]]:
    """Test the ordered pair (p, q); the condition is not symmetric.

    Requires p, q to be arc-disjoint Hamiltonian paths (raises if not).
    Returns the pass flag, the endpoint data, and the violated clauses.
    """
    for w in (p, q):
        rep = verify_hamiltonian(d, w)
        if not rep.ok:
            raise InputError(f"input is not a Hamiltonian path: {rep.reason}")
    if not arc_disjoint(p, q):
        raise InputError("input paths are not arc-disjoint")
    data = _switch_data(p, q)
    g = d.group
    violations = []
    if p.arc_set() & q.translate(data.gamma).arc_set():
        violations.append("translated arc overlap")
    if p.end == q.end:
        violations.append("terminal equality")
    if p.end == g.add(q.end, data.gamma):
        violations.append("translated terminal equality")
    return not violations, data, violations


@dataclass(frozen=True)
class SwitchablePairOutcome:
    status: oracle.Status
    pair: Optional[tuple[LabeledWalk, LabeledWalk]] = None
    nodes_used: int = 0

    @property
    def found(self) -> bool:
        return self.status is oracle.Status.FOUND


def find_strongly_switchable_pair(
    d: CayleyDigraph, node_budget: int = oracle.DEFAULT_BUDGET
) -> SwitchablePairOutcome:
    """First strongly switchable ordered pair, enumerating arc-disjoint
    Hamiltonian path pairs in DFS order and testing both orders."""
    budget = oracle._Budget(node_budget)
    try:
        for p, q in oracle.iter_arc_disjoint_pairs(d, budget):
            for cand in ((p, q), (q, p)):
                ok, _, _ = is_strongly_switchable(d, *cand)
                if ok:
                    return SwitchablePairOutcome(oracle.Status.FOUND, cand, budget.used)
    except oracle.BudgetExhausted:
        return SwitchablePairOutcome(oracle.Status.INCONCLUSIVE, None, budget.used)
    return SwitchablePairOutcome(oracle.Status.ABSENT, None, budget.used)


def lift_plan(data: SwitchabilityData, group: FiniteAbelianGroup, ell: int):
    """Layer translations p_i, q_i: p_0 = q_0 = 0, q_{i+1} = p_i + alpha,
    p_{i+1} = q_i + beta."""
    ps = [group.zero]
    qs = [group.zero]
    for i in range(ell - 1):
        qs.append(group.add(ps[i], data.alpha))
        ps.append(group.add(qs[i], data.beta))
    return ps, qs


def lift_through_cycle(
    d: CayleyDigraph, p: LabeledWalk, q: LabeledWalk, ell: int
) -> tuple[LabeledWalk, LabeledWalk]:
    """Lift a strongly switchable pair of D to a verified arc-disjoint
    Hamiltonian path pair of D x C_ell.

    Layer i of the first lifted path carries P + p_i for even i and
    Q + q_i for odd i (the second path swaps the roles); consecutive
    layers are joined by one arc in the new cycle direction.
    """
    if ell < 2:
        raise InputError(f"need ell >= 2, got {ell}")
    ok, data, violations = is_strongly_switchable(d, p, q)
    if not ok:
        raise InputError(f"pair is not strongly switchable: {violations}")
    group = d.group
    lifted = product_like_extension(d, ell)
    vertical = lifted.labels[-1]
    ps, qs = lift_plan(data, group, ell)

    def build(first_is_p: bool) -> LabeledWalk:
        segments = []
        for i in range(ell):
            use_p = first_is_p == (i % 2 == 0)
            segments.append(p.translate(ps[i]) if use_p else q.translate(qs[i]))
        start = segments[0].start + (0,)
        labels = segments[0].labels
        for seg in segments[1:]:
            labels += vertical + seg.labels
        return LabeledWalk(lifted, start, labels)

    w1 = build(True)
    w2 = build(False)
    for w in (w1, w2):
        rep = verify_hamiltonian(lifted, w)
        if not rep.ok:
            raise RuntimeError(f"lifted path failed verification: {rep.reason}")
    if not arc_disjoint(w1, w2):
        raise RuntimeError("lifted paths are not arc-disjoint")
    return w1, w2


def product_like_extension(d: CayleyDigraph, ell: int) -> CayleyDigraph:
    """D x C_ell: append a cyclic factor and the corresponding generator."""
    group = FiniteAbelianGroup(d.group.orders + (ell,))
    gens = tuple(g + (0,) for g in d.gens) + (
        (0,) * len(d.group.orders) + (1,),
    )
    return CayleyDigraph(group, gens)


@lru_cache(maxsize=None)
def _base_analysis(m: int, n: int, node_budget: int):
    """Cached per-base work: Hamiltonian cycle search and strongly
    switchable pair search in C_m x C_n."""
    d = product_digraph((m, n))
    cycle = oracle.find_hamiltonian_cycle(d, node_budget)
    switchable = find_strongly_switchable_pair(d, node_budget)
    return d, cycle, switchable


def build_three_factor(
    m: int, n: int, ell: int, node_budget: int = oracle.DEFAULT_BUDGET
) -> tuple[LabeledWalk, LabeledWalk]:
    """Two verified arc-disjoint Hamiltonian paths in C_m x C_n x C_ell.

    Strategy (a): lift a strongly switchable pair of the base C_m x C_n.
    Strategy (b): when the base has a Hamiltonian directed cycle, search
    for a pair in the spanning C_{mn} x C_ell and map it back through
    the cycle relabeling.  Fails loudly with per-strategy diagnostics.
    """
    if min(m, n, ell) < 2:
        raise InputError(f"need m, n, ell >= 2, got {(m, n, ell)}")
    d, cycle, switchable = _base_analysis(m, n, node_budget)
    diagnostics = []
    if switchable.found:
        return lift_through_cycle(d, *switchable.pair, ell)
    diagnostics.append(f"strategy (a): switchable pair search {switchable.status.value}")

    if cycle.found:
        pair = _pair_via_cycle_relabeling(d, cycle.walk, ell, node_budget)
        if pair is not None:
            return pair
        diagnostics.append(
            "strategy (b): pair search in the relabeled two-cycle product failed"
        )
    else:
        diagnostics.append(
            f"strategy (b): base Hamiltonian cycle search {cycle.status.value}"
        )
    raise RuntimeError(
        f"no arc-disjoint pair built for C_{m} x C_{n} x C_{ell}: "
        + "; ".join(diagnostics)
    )


def _pair_via_cycle_relabeling(
    d: CayleyDigraph, cycle: LabeledWalk, ell: int, node_budget: int
) -> Optional[tuple[LabeledWalk, LabeledWalk]]:
    """Arc-disjoint pair in D x C_ell using only arcs of the spanning
    subdigraph C_{mn} x C_ell defined by a Hamiltonian cycle of D."""
    mn = d.group.size
    ring = product_digraph((mn, ell))
    outcome = oracle.find_arc_disjoint_pair(ring, node_budget)
    if not outcome.found:
        return None
    cyc_vertices = cycle.vertex_list[:-1]
    cyc_labels = cycle.labels  # label of the base arc leaving cyc_vertices[j]
    lifted = product_like_extension(d, ell)
    vertical = lifted.labels[-1]

    def map_walk(w: LabeledWalk) -> LabeledWalk:
        j = w.start[0]
        labels = []
        for lab in w.labels:
            if lab == "A":  # ring step: the j-th arc of the base cycle
                labels.append(cyc_labels[j])
                j = (j + 1) % mn
            else:  # vertical step
                labels.append(vertical)
        start = cyc_vertices[w.start[0]] + (w.start[1],)
        return LabeledWalk(lifted, start, "".join(labels))

    w1, w2 = (map_walk(w) for w in outcome.pair)
    for w in (w1, w2):
        rep = verify_hamiltonian(lifted, w)
        if not rep.ok:
            raise RuntimeError(f"relabeled path failed verification: {rep.reason}")
    if not arc_disjoint(w1, w2):
        raise RuntimeError("relabeled paths are not arc-disjoint")
    return w1, w2
