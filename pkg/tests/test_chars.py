from fractions import Fraction

import pytest

from tensorcond.chars import (ClassFunction, character_table, dual, dsum,
                              fixed_dim, frobenius_schur, gen_character,
                              gen_rational, gen_symplectic, inner_product,
                              is_rational_charpoly, is_symplectic, restrict,
                              tensor)
from tensorcond.errors import NonCharacterError
from tensorcond.groups import (affine, cyclic, dihedral, heisenberg,
                               quaternion8, subgroup_generated,
                               trivial_subgroup, whole_group)

from oracles import (linear_reps_q8, permutation_rep_affine, sign_rep_affine,
                     two_dim_rep_q8)


@pytest.fixture(scope="module")
def q8():
    return quaternion8()


@pytest.fixture(scope="module")
def q8_table(q8):
    return character_table(q8)


def two_dim(q8_table):
    return q8_table.irreducibles[q8_table.degrees.index(2)]


def test_inner_products(q8, q8_table):
    C2 = cyclic(2)
    reg = ClassFunction.regular(C2)
    assert inner_product(reg, ClassFunction.trivial(C2)) == 1
    chi2 = two_dim(q8_table)
    assert inner_product(chi2, chi2) == 1
    for G in (q8, C2):
        H = subgroup_generated(G, [G.order - 1])
        triv = ClassFunction.trivial(G)
        assert inner_product(triv, triv, H) == 1


def test_fixed_dim(q8, q8_table):
    C2 = cyclic(2)
    assert fixed_dim(ClassFunction.regular(C2), whole_group(C2)) == 1
    chi2 = two_dim(q8_table)
    center = subgroup_generated(q8, [4])
    assert fixed_dim(chi2, center) == 0
    for chi in q8_table.irreducibles:
        assert fixed_dim(chi, trivial_subgroup(q8)) == chi.dim


def test_fixed_dim_rejects_non_characters(q8):
    not_char = ClassFunction(q8, [Fraction(1, 3), 0, 0, 0, 0])
    with pytest.raises(NonCharacterError):
        fixed_dim(not_char, whole_group(q8))


def test_tensor_dsum_dual(q8, q8_table):
    chi2 = two_dim(q8_table)
    triv = ClassFunction.trivial(q8)
    assert tensor(chi2, triv) == chi2
    assert dual(dual(chi2)) == chi2
    sq = tensor(chi2, chi2)
    # 4 at +-1, 0 elsewhere
    assert sq.values[0] == 4 and sq.values[-1] == 4
    assert all(v == 0 for v in sq.values[1:4])
    assert dsum(chi2, triv).dim == 3


def test_restrict(q8, q8_table):
    chi2 = two_dim(q8_table)
    center = subgroup_generated(q8, [4])
    res = restrict(chi2, center)
    assert res.group.order == 2
    assert res.values[0] == 2 and res.values[1] == -2
    S = res.group
    assert fixed_dim(res, whole_group(S)) == 0


def test_character_table_dimensions():
    assert sorted(character_table(affine(3)).degrees) == [1, 1, 2]
    assert sorted(character_table(quaternion8()).degrees) == [1, 1, 1, 1, 2]
    assert sorted(character_table(dihedral(4)).degrees) == [1, 1, 1, 1, 2]
    assert sorted(character_table(heisenberg(3)).degrees) == [1] * 9 + [3, 3]
    assert sorted(character_table(affine(5)).degrees) == [1, 1, 1, 1, 4]


def test_character_table_c4_linear_values():
    C4 = cyclic(4)
    T = character_table(C4)
    assert T.degrees == (1, 1, 1, 1)
    # each character is the homomorphism k -> zeta_4^(j k) for one j,
    # and all four fourth roots of unity occur as generator values
    from tensorcond.cyclo import CycloNum
    gen_class = C4.class_of[1]
    seen = set()
    for chi in T.irreducibles:
        v = chi.values[gen_class]
        j = next(k for k in range(4) if v == CycloNum.root_of_unity(4, k))
        seen.add(j)
        for c in range(4):
            assert chi.values[C4.class_of[c]] == CycloNum.root_of_unity(4, j * c)
    assert seen == {0, 1, 2, 3}


def test_table_orthogonality_exact():
    for G in (affine(3), quaternion8(), dihedral(4), heisenberg(3)):
        T = character_table(G)
        for i, chi in enumerate(T.irreducibles):
            for j, psi in enumerate(T.irreducibles):
                assert inner_product(chi, psi) == (1 if i == j else 0)
        assert sum(d * d for d in T.degrees) == G.order


def test_table_determinism():
    G1, G2 = quaternion8(), quaternion8()
    T1, T2 = character_table(G1), character_table(G2)
    for a, b in zip(T1.irreducibles, T2.irreducibles):
        assert a.values == tuple(b.values)


def test_frobenius_schur(q8, q8_table):
    chi2 = two_dim(q8_table)
    assert frobenius_schur(chi2) == -1
    assert frobenius_schur(ClassFunction.trivial(q8)) == 1
    C4 = cyclic(4)
    T4 = character_table(C4)
    faithful = next(ch for ch in T4.irreducibles
                    if not ch.values[C4.class_of[1]].is_rational())
    assert frobenius_schur(faithful) == 0
    with pytest.raises(NonCharacterError):
        frobenius_schur(dsum(chi2, chi2))


def test_is_symplectic(q8, q8_table):
    chi2 = two_dim(q8_table)
    assert is_symplectic(chi2)
    assert not is_symplectic(ClassFunction.trivial(q8))
    for psi in q8_table.irreducibles:
        assert is_symplectic(dsum(psi, dual(psi)))
    C4 = cyclic(4)
    T4 = character_table(C4)
    for psi in T4.irreducibles:
        assert is_symplectic(dsum(psi, dual(psi)))


def test_is_rational_charpoly():
    C3 = cyclic(3)
    T3 = character_table(C3)
    triv_ix = T3.index_of_trivial()
    assert is_rational_charpoly(ClassFunction.regular(C3))
    nontriv = T3.irreducibles[(triv_ix + 1) % 3]
    assert not is_rational_charpoly(nontriv)
    C9 = cyclic(9)
    T9 = character_table(C9)
    # the six faithful characters form a single Galois orbit; their sum is
    # rational even though no single member is
    orbit = next(o for o in T9.galois_orbits if len(o) == 6)
    total = ClassFunction.zero(C9)
    for i in orbit:
        assert not is_rational_charpoly(T9.irreducibles[i])
        total = dsum(total, T9.irreducibles[i])
    assert is_rational_charpoly(total)


def test_generators_satisfy_postconditions():
    for G in (quaternion8(), heisenberg(3), cyclic(8), affine(5)):
        for s in range(12):
            assert is_symplectic(gen_symplectic(G, s, 8))
            assert is_rational_charpoly(gen_rational(G, s, 12))
            chi = gen_character(G, s, 9)
            assert chi.dim <= 9


def test_generator_budget_caps():
    for G in (quaternion8(), heisenberg(3)):
        for s in range(8):
            assert gen_symplectic(G, s, 6).dim <= 6
            assert gen_rational(G, s, 7).dim <= 7
            assert gen_character(G, s, 5).dim <= 5
    with pytest.raises(ValueError):
        gen_symplectic(quaternion8(), 0, 1)
    with pytest.raises(ValueError):
        gen_rational(quaternion8(), 0, 0)


def test_gen_character_sample_space_c2():
    C2 = cyclic(2)
    T = character_table(C2)
    allowed = set()
    for m0 in range(3):
        for m1 in range(3):
            if m0 + m1 <= 2:
                allowed.add((m0, m1))
    seen = set()
    for s in range(200):
        chi = gen_character(C2, s, 2)
        mults = T.multiplicities(chi)
        assert mults in allowed
        seen.add(mults)
    assert seen == allowed


def test_character_table_degrees_on_harder_groups():
    from collections import Counter
    from tensorcond.groups import direct_product, elementary_abelian
    cases = [
        (heisenberg(5), {1: 25, 5: 4}),
        (dihedral(6), {1: 4, 2: 2}),
        (dihedral(5), {1: 2, 2: 2}),
        (direct_product(quaternion8(), cyclic(3)), {1: 12, 2: 3}),
        (elementary_abelian(2, 4), {1: 16}),
        (affine(7), {1: 6, 6: 1}),
        (affine(13), {1: 12, 12: 1}),
    ]
    for G, want in cases:
        T = character_table(G)
        assert dict(Counter(T.degrees)) == want
        assert sum(d * d for d in T.degrees) == G.order


def test_group_with_identity_not_at_zero():
    """The table machinery must not assume where the identity sits."""
    from tensorcond.groups import FiniteGroup
    # relabel C3 by the permutation 0<->2
    perm = [2, 1, 0]
    inv = [2, 1, 0]
    base = cyclic(3)
    table = [[perm[base.table[inv[a]][inv[b]]] for b in range(3)]
             for a in range(3)]
    G = FiniteGroup(table, name="C3-shuffled")
    assert G.identity == 2
    assert G.classes[0] == (2,)  # identity class still first
    T = character_table(G)
    assert sorted(T.degrees) == [1, 1, 1]
    for chi in T.irreducibles:
        assert chi.dim == 1


def test_additivity_of_fixed_dim(q8, q8_table):
    center = subgroup_generated(q8, [4])
    for i in range(4):
        chi = gen_character(q8, f"add:{i}", 8)
        psi = gen_character(q8, f"add2:{i}", 8)
        assert fixed_dim(dsum(chi, psi), center) == \
            fixed_dim(chi, center) + fixed_dim(psi, center)
        assert fixed_dim(dual(chi), center) == fixed_dim(chi, center)


# -- matrix-representation oracle cross-checks ------------------------------------


def test_q8_two_dim_against_matrices(q8, q8_table):
    rep = two_dim_rep_q8(q8)
    traces = rep.character_values()
    chi2 = two_dim(q8_table)
    assert list(chi2.values) == traces
    center = subgroup_generated(q8, [4])
    assert rep.fixed_dim_by_projector(center) == fixed_dim(chi2, center) == 0
    sub_i = subgroup_generated(q8, [1])
    assert rep.fixed_dim_by_projector(sub_i) == fixed_dim(chi2, sub_i)


def test_q8_linear_characters_against_matrices(q8, q8_table):
    table_keys = {tuple(v.rational_value() for v in ch.values)
                  for ch in q8_table.irreducibles if ch.dim == 1}
    matrix_keys = set()
    for rep in linear_reps_q8(q8):
        matrix_keys.add(tuple(v.rational_value() for v in rep.character_values()))
    assert table_keys == matrix_keys


def test_s3_table_against_matrices():
    G = affine(3)
    T = character_table(G)
    perm = permutation_rep_affine(G, 3)
    sign = sign_rep_affine(G, 3)
    perm_char = ClassFunction(G, perm.character_values())
    # permutation character = trivial + standard
    std = next(ch for ch in T.irreducibles if ch.dim == 2)
    assert perm_char == dsum(ClassFunction.trivial(G), std)
    sign_char = ClassFunction(G, sign.character_values())
    assert any(ch == sign_char for ch in T.irreducibles)
    translations = subgroup_generated(G, [1])
    assert perm.fixed_dim_by_projector(translations) == \
        fixed_dim(perm_char, translations) == 1
    assert perm.fixed_dim_by_projector(whole_group(G)) == 1
