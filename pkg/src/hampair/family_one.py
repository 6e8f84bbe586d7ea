"""The Cay(Z_k; a, a+1) family: cut permutations, the Hamiltonian cut
set, reflection distance, count pairs, and realization of two
arc-disjoint Hamiltonian paths.

A standard cut candidate steps by a+1 below the cut value d and by a
above it; adjoining the formal closing step d -> a turns it into a
permutation of Z_k which is a k-cycle exactly when the candidate is a
Hamiltonian path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import oracle
from .core import InputError, LabeledWalk, arc_disjoint, cayley, verify_hamiltonian


def _check_params(k: int, a: int) -> int:
    a %= k
    if k < 3 or a in (0, k - 1):
        raise InputError(f"need k >= 3 and a not in {{0, k-1}} mod k, got {(k, a)}")
    return a


def cut_permutation(k: int, a: int, d: int) -> list[int]:
    """The cut permutation at cut value d, as an image list on 0..k-1."""
    a = _check_params(k, a)
    if not 0 <= d < k:
        raise InputError(f"cut value d must satisfy 0 <= d < k, got {d}")
    phi = []
    for i in range(k):
        if i < d:
            phi.append((i + a + 1) % k)
        elif i == d:
            phi.append(a)
        else:
            phi.append((i + a) % k)
    return phi


def cut_set_values(k: int, a: int) -> list[int]:
    """Sorted cut values d whose cut permutation is a single k-cycle.

    All k permutations are tested at once: the orbits of 0 are advanced
    in lockstep across d, and d is kept iff its orbit first returns to 0
    after exactly k steps.
    """
    a = _check_params(k, a)
    d = np.arange(k)
    pos = np.zeros(k, dtype=np.int64)
    first_return = np.zeros(k, dtype=np.int64)
    for t in range(1, k + 1):
        pos = np.where(
            pos < d, pos + a + 1, np.where(pos == d, a, pos + a)
        ) % k
        first_return = np.where((pos == 0) & (first_return == 0), t, first_return)
    return [int(x) for x in d[first_return == k]]


@dataclass(frozen=True)
class CutProfile:
    k: int
    a: int
    Z: tuple[int, ...]
    delta: int
    witness: tuple[int, int]
    count_pair: Optional[tuple[int, int]] = None

    @property
    def N(self) -> int:
        return self.k - 1


def cut_set(k: int, a: int) -> CutProfile:
    """Cut values plus the reflection distance dist(Z, N-Z) and a witness.

    The witness is the lexicographically least pair (u, v) in Z x Z with
    u <= v attaining |u + v - N| = delta.
    """
    a = _check_params(k, a)
    Z = cut_set_values(k, a)
    N = k - 1
    best = None
    for u in Z:
        for v in Z:
            if v < u:
                continue
            cand = (abs(u + v - N), u, v)
            if best is None or cand < best:
                best = cand
    assert best is not None, "cut set is empty"
    delta, u, v = best
    return CutProfile(k, a, tuple(Z), delta, (u, v))


def cut_path(k: int, a: int, d: int) -> LabeledWalk:
    """The Hamiltonian cut path at d: from vertex a to vertex d, using
    exactly d arcs labeled B."""
    a = _check_params(k, a)
    if d not in set(cut_set_values(k, a)):
        raise InputError(f"d={d} is not a Hamiltonian cut value for {(k, a)}")
    digraph = cayley([k], a, a + 1)
    labels = []
    x = a
    for _ in range(k - 1):
        if x < d:
            labels.append("B")
            x = (x + a + 1) % k
        else:
            labels.append("A")
            x = (x + a) % k
    walk = LabeledWalk(digraph, (a,), "".join(labels))
    assert walk.end == (d % k,)
    return walk


def count_pair(k: int, a: int) -> tuple[int, int]:
    """A pair d, e of cut values with d + e in {k-2, k-1, k}.

    Preference order: sum k-1, then k-2, then k; within a sum class the
    pair with least d, then least e, subject to d <= e.  Existence is
    guaranteed by the reflection bound; absence would falsify it.
    """
    a = _check_params(k, a)
    Z = set(cut_set_values(k, a))
    for target in (k - 1, k - 2, k):
        for d in sorted(Z):
            e = target - d
            if e >= d and e in Z:
                return d, e
    raise AssertionError(
        f"no cut-value pair with sum in {{k-2, k-1, k}} for {(k, a)}: Z={sorted(Z)}"
    )


@dataclass(frozen=True)
class RealizedPair:
    path1: LabeledWalk
    path2: LabeledWalk
    stage: str  # "translate-count-pair", "translate-any", or "oracle"

    def __iter__(self):
        return iter((self.path1, self.path2))


def realize_disjoint_pair(
    k: int, a: int, node_budget: int = oracle.DEFAULT_BUDGET
) -> RealizedPair:
    """Two verified arc-disjoint Hamiltonian paths in Cay(Z_k; a, a+1).

    Stage 1 tries translates of the two count-pair cut paths; stage 2
    widens to all pairs of cut values; stage 3 falls back to exhaustive
    search.  Arc-disjointness is invariant under translating both paths
    by the same element, so only the relative translate is scanned.
    Every accepted pair is re-verified before being returned.
    """
    a = _check_params(k, a)
    digraph = cayley([k], a, a + 1)
    Z = cut_set_values(k, a)
    d0, e0 = count_pair(k, a)

    def try_translates(d: int, e: int) -> Optional[tuple[LabeledWalk, LabeledWalk]]:
        p = cut_path(k, a, d)
        q = cut_path(k, a, e)
        p_arcs = p.arc_set()
        q_arcs = q.arcs()
        for h in range(k):
            shifted = {(((t[0] + h) % k,), lab) for t, lab in q_arcs}
            if not (p_arcs & shifted):
                return p, q.translate(h)
        return None

    stage = None
    found = try_translates(d0, e0)
    if found is not None:
        stage = "translate-count-pair"
    else:
        for d in Z:
            for e in Z:
                found = try_translates(d, e)
                if found is not None:
                    stage = "translate-any"
                    break
            if found is not None:
                break
    if found is None:
        outcome = oracle.find_arc_disjoint_pair(digraph, node_budget)
        if not outcome.found:
            raise RuntimeError(
                f"no arc-disjoint pair realized for {(k, a)}: "
                f"translate stages failed and oracle search was "
                f"{outcome.status.value}"
            )
        found = outcome.pair
        stage = "oracle"

    p, q = found
    if not (
        verify_hamiltonian(digraph, p).ok
        and verify_hamiltonian(digraph, q).ok
        and arc_disjoint(p, q)
    ):
        raise RuntimeError(f"realized pair for {(k, a)} failed verification")
    return RealizedPair(p, q, stage)


def valid_a_values(k: int) -> list[int]:
    """All generator residues a giving a well-formed first-family digraph."""
    return [a for a in range(1, k - 1)]


__all__ = [
    "CutProfile",
    "RealizedPair",
    "count_pair",
    "cut_path",
    "cut_permutation",
    "cut_set",
    "cut_set_values",
    "realize_disjoint_pair",
    "valid_a_values",
]
