"""Group model: elements, generating sets, quotients."""

import pytest
from hypothesis import given, strategies as st

from lattice_waves.errors import (
    ContainsIdentity,
    DoesNotGenerate,
    InfiniteSubgroup,
    ModulusOutOfRange,
    NotSymmetric,
    ShapeMismatch,
)
from lattice_waves.groups import (
    elem_add,
    elem_neg,
    elem_sub,
    identity,
    make_element,
    make_group,
    quotient,
    validate_generators,
)

Z = make_group(1, [])
Z2 = make_group(2, [])
ZxZ4 = make_group(1, [4])


def elements(G):
    free = st.tuples(*[st.integers(-50, 50)] * G.rank)
    tor = st.tuples(*[st.integers(-50, 50) for _ in G.moduli])
    return st.builds(lambda f, t: make_element(G, f, t), free, tor)


class TestGroupSpec:
    def test_moduli_must_be_at_least_two(self):
        with pytest.raises(ModulusOutOfRange):
            make_group(1, [1])
        with pytest.raises(ModulusOutOfRange):
            make_group(0, [0])

    def test_element_torsion_reduced_eagerly(self):
        a = make_element(ZxZ4, [3], [7])
        assert a.torsion == (3,)
        assert make_element(ZxZ4, [3], [-1]).torsion == (3,)

    def test_wrong_coordinate_count_rejected(self):
        with pytest.raises(ShapeMismatch):
            make_element(Z, [1, 2], [])
        with pytest.raises(ShapeMismatch):
            make_element(ZxZ4, [1], [])


@pytest.mark.parametrize("G", [Z, Z2, ZxZ4, make_group(0, [2, 3])])
class TestGroupLaws:
    def test_identity_neutral(self, G):
        @given(elements(G))
        def inner(a):
            e = identity(G)
            assert elem_add(G, a, e) == a
            assert elem_add(G, e, a) == a

        inner()

    def test_inverse_and_commutativity(self, G):
        @given(elements(G), elements(G))
        def inner(a, b):
            assert elem_add(G, a, elem_neg(G, a)) == identity(G)
            assert elem_add(G, a, b) == elem_add(G, b, a)
            assert elem_sub(G, a, b) == elem_add(G, a, elem_neg(G, b))

        inner()

    def test_associativity(self, G):
        @given(elements(G), elements(G), elements(G))
        def inner(a, b, c):
            assert elem_add(G, elem_add(G, a, b), c) == elem_add(G, a, elem_add(G, b, c))

        inner()


class TestValidateGenerators:
    def test_standard_set_on_z(self):
        S = validate_generators(Z, [make_element(Z, [1], []), make_element(Z, [-1], [])])
        assert S.degree == 2

    def test_identity_rejected(self):
        with pytest.raises(ContainsIdentity):
            validate_generators(Z, [identity(Z), make_element(Z, [1], [])])

    def test_asymmetric_rejected(self):
        with pytest.raises(NotSymmetric):
            validate_generators(Z, [make_element(Z, [1], [])])

    def test_non_generating_rejected(self):
        # +-2 generates only the even integers.
        with pytest.raises(DoesNotGenerate):
            validate_generators(Z, [make_element(Z, [2], []), make_element(Z, [-2], [])])

    def test_torsion_only_set_cannot_generate_free_part(self):
        with pytest.raises(DoesNotGenerate):
            validate_generators(
                ZxZ4, [make_element(ZxZ4, [0], [1]), make_element(ZxZ4, [0], [3])]
            )

    def test_involution_allowed_without_distinct_inverse(self):
        G = make_group(0, [2])
        S = validate_generators(G, [make_element(G, [], [1])])
        assert S.degree == 1


class TestQuotient:
    def test_z_x_z4_by_order_two_subgroup(self):
        Q = quotient(ZxZ4, [make_element(ZxZ4, [0], [2])])
        assert Q.order == 2
        assert Q.group.rank == 1
        assert tuple(Q.group.moduli) == (2,)
        assert Q.project(make_element(ZxZ4, [0], [3])) == make_element(Q.group, [0], [1])
        assert Q.project(make_element(ZxZ4, [0], [2])) == identity(Q.group)

    def test_projection_is_homomorphism(self):
        Q = quotient(ZxZ4, [make_element(ZxZ4, [0], [2])])

        @given(elements(ZxZ4), elements(ZxZ4))
        def inner(a, b):
            assert Q.project(elem_add(ZxZ4, a, b)) == elem_add(
                Q.group, Q.project(a), Q.project(b)
            )

        inner()

    def test_section_is_right_inverse(self):
        Q = quotient(ZxZ4, [make_element(ZxZ4, [0], [2])])
        for t in range(2):
            q = make_element(Q.group, [3], [t])
            assert Q.project(Q.section(q)) == q

    def test_fiber_enumerates_the_coset(self):
        Q = quotient(ZxZ4, [make_element(ZxZ4, [0], [2])])
        q = make_element(Q.group, [1], [1])
        fib = Q.fiber(q)
        assert len(fib) == 2
        assert all(Q.project(x) == q for x in fib)

    def test_trivial_subgroup_keeps_presentation(self):
        G = make_group(1, [2, 3])
        Q = quotient(G, [])
        assert Q.group == G
        assert Q.order == 1
        a = make_element(G, [5], [1, 2])
        assert Q.project(a) == a

    def test_infinite_subgroup_rejected(self):
        with pytest.raises(InfiniteSubgroup):
            quotient(Z2, [make_element(Z2, [1, 0], [])])

    def test_klein_style_quotients(self):
        G = make_group(1, [2, 2])
        for tor in ([1, 0], [0, 1]):
            Q = quotient(G, [make_element(G, [0], tor)])
            assert Q.order == 2
            assert Q.group.rank == 1
            assert tuple(Q.group.moduli) == (2,)
