import pytest

from p3groups import catalog
from p3groups.group import (
    LINEAR, PROJECTIVE, GroupElement, GroupTooLargeError, abelian_quotient, center, close, commutator_subgroup,
    conjugacy_class_indices, element_order, generated_subgroups, is_normal, one_dim_characters,
    tag_isomorphism_type,
)
from p3groups.linalg import Mat

import strategies as st


@pytest.mark.parametrize("name, mode, order", [
    ("H", LINEAR, 32), ("H", PROJECTIVE, 16), ("HH", LINEAR, 64),
    ("G80", PROJECTIVE, 80), ("G160", PROJECTIVE, 160), ("G320", PROJECTIVE, 320),
    ("G144", PROJECTIVE, 144), ("G144", LINEAR, 576), ("G80", LINEAR, 320),
])
def test_orders(name, mode, order):
    assert catalog.group(name, mode).order == order


# class counts: extraspecial 2^(1+4) has 2^4 + 1; mu2^4 x| mu5 has 1 + 15/5 + 64/16; A4 x A4 has 4 * 4
@pytest.mark.parametrize("name, mode, classes", [
    ("H", LINEAR, 17), ("H", PROJECTIVE, 16), ("G80", PROJECTIVE, 8), ("G144", PROJECTIVE, 16),
])
def test_class_counts(name, mode, classes):
    assert len(conjugacy_class_indices(catalog.group(name, mode))) == classes


@pytest.mark.parametrize("name, stats", [
    ("H", {1: 1, 2: 15}),
    ("G80", {1: 1, 2: 15, 5: 64}),
    ("G144", {1: 1, 2: 15, 3: 80, 6: 48}),
])
def test_order_statistics(name, stats):
    assert catalog.group(name, PROJECTIVE).order_statistics() == stats


def test_abelianizations():
    assert abelian_quotient(catalog.group("G80", PROJECTIVE)).order == 5
    assert abelian_quotient(catalog.group("G144", PROJECTIVE)).order == 9
    assert len(one_dim_characters(catalog.group("H", PROJECTIVE))) == 16


def test_center_and_commutator():
    h = catalog.group("H")
    assert center(h).order == 2 and commutator_subgroup(h).order == 2
    assert center(catalog.group("G80", PROJECTIVE)).order == 1


def test_tags():
    assert tag_isomorphism_type(catalog.group("H", PROJECTIVE)).name == "elementary-abelian-2^4"
    assert tag_isomorphism_type(catalog.group("G80", PROJECTIVE)).name == "mu2^4 x| mu5"
    tag = tag_isomorphism_type(catalog.group("G144", PROJECTIVE))
    assert tag.name == "A4 x A4"
    f1, f2 = set(tag.witness["factor_1"]), set(tag.witness["factor_2"])
    assert len(f1) == len(f2) == 12 and len(f1 & f2) == 1


def test_normality():
    hb = catalog.group("H", PROJECTIVE)
    assert is_normal(hb, catalog.group("G80", PROJECTIVE))
    assert is_normal(hb, catalog.group("G144", PROJECTIVE))


def test_find_across_fields():
    g = catalog.group("G80", LINEAR)
    t = GroupElement(catalog.matrix("T"), LINEAR)
    assert g.find(t) is not None
    # the identity written over a larger field is still found
    assert g.find(GroupElement(Mat.identity(4, 40), LINEAR)) == g.identity_index
    assert catalog.group("H").find(GroupElement(catalog.matrix("R"), LINEAR)) is None


def test_element_orders():
    assert element_order(GroupElement(catalog.matrix("T"))) == 10
    assert element_order(GroupElement(catalog.matrix("S"))) == 8
    assert element_order(GroupElement(catalog.matrix("T"), PROJECTIVE)) == 5


def test_subgroups_of_hbar():
    # subspaces of F2^4: 1 + 15 + 35 + 15 + 1
    assert len(generated_subgroups(catalog.group("H", PROJECTIVE), 4)) == 67


def test_size_caps():
    with pytest.raises(GroupTooLargeError):
        close([catalog.matrix("T"), catalog.matrix("S"), catalog.matrix("S1")], LINEAR, cap=50)
    with pytest.raises(GroupTooLargeError):
        generated_subgroups(catalog.group("G320", PROJECTIVE), 4)


def test_closure_idempotence_property():
    # re-closing uses every element as a generator, so a small ambient group keeps this quick
    g = catalog.group("H", LINEAR)
    r = st.rng(3)
    bad = []
    for case in range(st.CASES):
        gens = [g.elements[r.randrange(g.order)] for _ in range(r.randint(1, 3))]
        once = close(gens, LINEAR)
        twice = close(once.elements, LINEAR)
        keys1 = {e.key() for e in once.elements}
        if keys1 != {e.key() for e in twice.elements} or g.order % once.order:
            bad.append(case)
    assert bad == []
