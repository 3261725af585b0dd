import pytest

from tensorcond.errors import FiltrationError, GroupConstructionError
from tensorcond.groups import (affine, build_group, cyclic, dihedral,
                               direct_product, elementary_abelian,
                               filtration_from_generators, heisenberg,
                               make_filtration, power_map, quaternion8,
                               subgroup_generated, trivial_subgroup,
                               whole_group, Subgroup)


def corpus_like_groups():
    return [cyclic(1), cyclic(4), cyclic(8), cyclic(9), quaternion8(),
            dihedral(4), heisenberg(3), affine(5), elementary_abelian(3, 2),
            affine(3), direct_product(cyclic(2), cyclic(3))]


def test_affine3_order_and_classes():
    G = affine(3)
    assert G.order == 6
    assert len(G.classes) == 3


def test_cyclic1_trivial():
    G = cyclic(1)
    assert G.order == 1
    assert G.identity == 0
    assert G.exponent == 1


def test_quaternion8_shape():
    G = quaternion8()
    assert G.order == 8
    assert len(G.classes) == 5
    assert G.exponent == 4


def test_heisenberg_exponent():
    G = heisenberg(3)
    assert G.order == 27
    assert G.exponent == 3
    assert heisenberg(5).order == 125


def test_affine_order_and_prime_rejection():
    assert affine(5).order == 20
    with pytest.raises(GroupConstructionError):
        affine(4)
    with pytest.raises(GroupConstructionError):
        heisenberg(6)


def test_order_cap():
    with pytest.raises(GroupConstructionError):
        build_group({"kind": "cyclic", "n": 10}, max_order=8)


def test_build_group_descriptors():
    assert build_group({"kind": "affine", "p": 5}).order == 20
    assert build_group({"kind": "direct_product",
                        "factors": [{"kind": "cyclic", "n": 2},
                                    {"kind": "cyclic", "n": 2}]}).order == 4
    with pytest.raises(GroupConstructionError):
        build_group({"kind": "nope"})


def test_associativity_exhaustive():
    for G in corpus_like_groups():
        G.check_associativity()


def test_subgroup_generated_center_of_q8():
    G = quaternion8()
    Z = subgroup_generated(G, [4])  # -1
    assert Z.elements == (0, 4)
    assert subgroup_generated(G, []).elements == (0,)
    assert subgroup_generated(G, list(range(8))).size == 8


def test_power_map():
    C4 = cyclic(4)
    assert power_map(C4, 1, 2) == 2
    assert C4.element_orders[power_map(C4, 1, 2)] == 2
    Q = quaternion8()
    assert power_map(Q, 1, -1) == 5  # i^-1 = -i
    for G in (C4, Q):
        for k in (-3, 0, 5):
            assert power_map(G, G.identity, k) == G.identity


def test_filtration_validation():
    Q = quaternion8()
    Z = subgroup_generated(Q, [4])
    filt = make_filtration(Q, [whole_group(Q), Z, trivial_subgroup(Q)])
    assert [s.size for s in filt.chain] == [8, 2, 1]
    # trivial tail appended when absent
    filt2 = make_filtration(Q, [whole_group(Q), Z])
    assert filt2.chain[-1].is_trivial()
    with pytest.raises(FiltrationError):
        make_filtration(Q, [Z, whole_group(Q)])
    with pytest.raises(FiltrationError):
        make_filtration(Q, [])
    with pytest.raises(FiltrationError):
        make_filtration(Q, [Z])  # does not start at the whole group


def test_lagrange_on_filtrations():
    G = affine(5)
    filt = filtration_from_generators(G, [[1], [1]])
    for s in filt.chain:
        assert s.index * s.size == G.order


def test_affine_unique_normal_p_subgroup():
    for p in (3, 5, 7):
        G = affine(p)
        subs_of_order_p = set()
        for g in range(G.order):
            H = subgroup_generated(G, [g])
            if H.size == p:
                subs_of_order_p.add(H.elements)
        assert subs_of_order_p == {tuple(range(p))}
        assert Subgroup(G, range(p)).is_normal()


def test_nonnormal_subgroups_allowed_in_chains():
    D = dihedral(4)
    refl = subgroup_generated(D, [4])
    assert not refl.is_normal()
    filt = filtration_from_generators(D, [[4]])
    assert [s.size for s in filt.chain] == [8, 2, 1]
    G = affine(5)
    torus = subgroup_generated(G, [5])
    assert torus.size == 4 and not torus.is_normal()


def test_subgroup_closure_validation():
    Q = quaternion8()
    with pytest.raises(GroupConstructionError):
        Subgroup(Q, [0, 1])  # not closed: i*i = -1 missing


def test_subgroup_as_group():
    Q = quaternion8()
    H = subgroup_generated(Q, [1])  # <i> of order 4
    S, embed = H.as_group()
    assert S.order == 4
    assert sorted(embed) == list(H.elements)
    assert S.exponent == 4


def test_conjugacy_classes_are_conjugation_orbits():
    for G in (quaternion8(), dihedral(4), affine(3)):
        for cls in G.classes:
            orbit = {G.conjugate(h, cls[0]) for h in range(G.order)}
            assert orbit == set(cls)
