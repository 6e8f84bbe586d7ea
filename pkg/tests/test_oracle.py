import itertools

import pytest

from hampair.core import InputError, LabeledWalk, arc_disjoint, cayley, verify_hamiltonian
from hampair.oracle import (
    SearchConstraints,
    Status,
    find_arc_disjoint_pair,
    find_hamiltonian_cycle,
    find_hamiltonian_path,
    oracle_cut_set,
)
from hampair.products import product_digraph


def test_constrained_path_exists():
    # Cay(Z_5; 2, 3): cut value 0 is Hamiltonian, so an all-A path from
    # 2 to 0 exists.
    d = cayley([5], 2, 3)
    out = find_hamiltonian_path(
        d, SearchConstraints(required_start=(2,), required_end=(0,), required_b_count=0)
    )
    assert out.found
    assert verify_hamiltonian(d, out.walk).ok
    assert out.walk.start == (2,) and out.walk.end == (0,)
    assert out.walk.delta_b() == 0


def test_constrained_path_absent():
    # cut value 1 is not Hamiltonian for (5, 2): no path from 2 to 1
    # using exactly one B arc.
    d = cayley([5], 2, 3)
    out = find_hamiltonian_path(
        d, SearchConstraints(required_start=(2,), required_end=(1,), required_b_count=1)
    )
    assert out.status is Status.ABSENT


def test_trivial_group_not_representable():
    # A one-element group has no nonzero generator, so the smallest
    # representable digraph has two vertices; its Hamiltonian path is a
    # single arc.
    from hampair.core import CayleyDigraph, FiniteAbelianGroup

    g = FiniteAbelianGroup((1,))
    with pytest.raises(InputError):
        CayleyDigraph(g, ((0,),))
    out = find_hamiltonian_path(cayley([2], 1))
    assert out.found and len(out.walk) == 1


def test_budget_exhaustion_is_reported():
    d = cayley([12], 1, 5)
    out = find_hamiltonian_path(d, SearchConstraints(node_budget=3))
    assert out.status is Status.INCONCLUSIVE
    assert out.nodes_used > 3 - 1


def test_cycle_c2c2():
    out = find_hamiltonian_cycle(product_digraph((2, 2)))
    assert out.found
    assert out.walk.labels == "ABAB"


def test_cycle_c2c3_absent():
    out = find_hamiltonian_cycle(product_digraph((2, 3)))
    assert out.status is Status.ABSENT


def test_cycle_z6():
    out = find_hamiltonian_cycle(cayley([6], 5, 2))
    assert out.found


def test_pair_z6():
    d = cayley([6], 5, 2)
    out = find_arc_disjoint_pair(d)
    assert out.found
    p, q = out.pair
    assert verify_hamiltonian(d, p).ok and verify_hamiltonian(d, q).ok
    assert arc_disjoint(p, q)


def test_pair_z3():
    out = find_arc_disjoint_pair(cayley([3], 1, 2))
    assert out.found


def test_oracle_cut_set_reference_rows():
    assert oracle_cut_set(5, 2) == {0, 4}
    assert oracle_cut_set(10, 4) == {1, 3, 5}
    assert oracle_cut_set(6, 2) == {1, 3}
    assert oracle_cut_set(15, 3) == {2, 4, 6, 8, 14}


def test_oracle_cut_set_rejects_bad_params():
    with pytest.raises(InputError):
        oracle_cut_set(5, 0)
    with pytest.raises(InputError):
        oracle_cut_set(5, 4)
    with pytest.raises(InputError):
        oracle_cut_set(2, 1)


def _exists_by_label_enumeration(d, mode):
    """Ground truth for the ground truth: try every label sequence."""
    n = d.group.size
    length = n - 1 if mode == "path" else n
    for start in d.group.elements():
        for labels in itertools.product(d.labels, repeat=length):
            w = LabeledWalk(d, start, "".join(labels))
            if verify_hamiltonian(d, w, mode).ok:
                return True
    return False


@pytest.mark.parametrize(
    "orders,gens",
    [
        ([5], (2, 3)),
        ([6], (5, 2)),
        ([8], (2, 3)),
        ([4, 2], ((1, 0), (0, 1))),
        ([3, 3], ((1, 0), (0, 1))),
        ([12], (4, 9)),
    ],
)
def test_desk_scale_completeness(orders, gens):
    # pruned DFS agrees with full label-sequence enumeration on existence
    d = cayley(orders, *gens)
    for mode in ("path", "cycle"):
        brute = _exists_by_label_enumeration(d, mode)
        if mode == "path":
            out = find_hamiltonian_path(d)
        else:
            out = find_hamiltonian_cycle(d)
        assert out.found == brute, (orders, gens, mode)


def test_returned_witnesses_always_verify():
    for orders, gens in [([7], (2, 4)), ([9], (3, 4)), ([2, 4], ((1, 0), (0, 1)))]:
        d = cayley(orders, *gens)
        out = find_hamiltonian_path(d)
        if out.found:
            assert verify_hamiltonian(d, out.walk).ok
        pair = find_arc_disjoint_pair(d)
        if pair.found:
            p, q = pair.pair
            assert verify_hamiltonian(d, p).ok and verify_hamiltonian(d, q).ok
            assert arc_disjoint(p, q)
