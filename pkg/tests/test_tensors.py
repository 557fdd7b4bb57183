from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import braid_element, case1_r, case2_r, case2_r_inverse, frobenius_map, kz2_algebra
from oqa.algebra import ShapeMismatchError, identity_map, matrix_algebra, tensor_algebra
from oqa.scalars import Scalar, scalar_eq
from oqa.tensors import (
    TensorElement,
    apply_maps,
    embed,
    first_difference,
    flatten,
    multi_product,
    outer,
    permute_legs,
    tensor_invert,
    tensor_multiply,
    unflatten,
)

M2 = matrix_algebra(2)
M3 = matrix_algebra(3)


class TestEmbed:
    def test_unit_embeds_to_unit(self):
        unit = TensorElement.unit((M2, M3))
        out = embed(unit, (M2, M2, M3), (0, 2))
        assert out == TensorElement.unit((M2, M2, M3))

    def test_outer_leg_placement(self):
        r = case1_r()
        out = embed(r, (M2, M2, M3), (0, 2))
        # every term of r shows up once per unit term of the middle leg
        assert len(out.coeffs) == len(r.coeffs) * 2
        for (i, j), c in r.coeffs.items():
            for k in (M2.index("E11"), M2.index("E22")):
                assert scalar_eq(out.coeffs[(i, k, j)], c)

    def test_position_validation(self):
        r = case1_r()
        with pytest.raises(ShapeMismatchError):
            embed(r, (M2, M2, M3), (2, 0))
        with pytest.raises(ShapeMismatchError):
            embed(r, (M2, M2, M3), (0, 1))

    def test_triple_product_matches_direct_expansion(self):
        # left side of the braiding compatibility law, assembled two ways
        p = braid_element(2)
        r = case1_r()
        legs = (M2, M2, M3)
        via_embed = tensor_multiply(
            tensor_multiply(embed(p, legs, (0, 1)), embed(r, legs, (0, 2))),
            embed(r, legs, (1, 2)),
        )
        direct = multi_product(
            [p, r, r],
            legs,
            [[(0, 0), (1, 0)], [(0, 1), (2, 0)], [(1, 1), (2, 1)]],
        )
        assert via_embed == direct


class TestMultiply:
    def test_unit_is_neutral(self):
        r = case2_r()
        unit = TensorElement.unit((M2, M3))
        assert tensor_multiply(unit, r) == r
        assert tensor_multiply(r, unit) == r

    def test_case1_r_squares_to_unit(self):
        r = case1_r()
        assert tensor_multiply(r, r) == TensorElement.unit((M2, M3))

    def test_matrix_units(self):
        s = TensorElement.from_terms((M2, M3), [("E12", "E21", 1)])
        t = TensorElement.from_terms((M2, M3), [("E21", "E12", 1)])
        assert tensor_multiply(s, t) == TensorElement.from_terms(
            (M2, M3), [("E11", "E22", 1)]
        )

    def test_reversed_leg_multiplication(self):
        s = TensorElement.from_terms((M2, M2), [("E12", "E12", 1)])
        t = TensorElement.from_terms((M2, M2), [("E21", "E21", 1)])
        straight = tensor_multiply(s, t)
        assert straight == TensorElement.from_terms((M2, M2), [("E11", "E11", 1)])
        second_reversed = tensor_multiply(s, t, reversed_legs=(1,))
        assert second_reversed == TensorElement.from_terms((M2, M2), [("E11", "E22", 1)])


class TestApplyMaps:
    def test_identity(self):
        r = case2_r()
        assert apply_maps(r, (None, None)) == r
        assert apply_maps(r, (identity_map(M2), identity_map(M3))) == r

    def test_braid_element_is_fixed_by_diagonal_automorphism(self):
        f = frobenius_map(2)
        p = braid_element(2)
        assert apply_maps(p, (f, f)) == p

    def test_case2_r_fixed_by_pair(self):
        f2 = frobenius_map(2)
        f3 = frobenius_map(3)
        r = case2_r()
        assert apply_maps(r, (f2, f3)) == r


class TestPermute:
    def test_swap(self):
        kt = kz2_algebra()
        t = TensorElement.from_terms((kt, M2), [("t", "E12", 1)])
        swapped = permute_legs(t, (1, 0))
        assert swapped.legs == (M2, kt)
        assert swapped == TensorElement.from_terms((M2, kt), [("E12", "t", 1)])

    def test_middle_swap_of_outer_product(self):
        p = braid_element(2)
        q = case1_r()
        four = outer(p, q)
        swapped = permute_legs(four, (0, 2, 1, 3))
        # coefficients are products of the factors at interleaved indices
        for (i1, i2), c1 in p.coeffs.items():
            for (j1, j2), c2 in q.coeffs.items():
                assert scalar_eq(swapped.coeffs[(i1, j1, i2, j2)], c1 * c2)

    def test_double_swap_is_identity(self):
        t = outer(case1_r(), case2_r())
        assert permute_legs(permute_legs(t, (0, 2, 1, 3)), (0, 2, 1, 3)) == t

    @given(st.permutations(range(3)), st.permutations(range(3)))
    @settings(max_examples=20, deadline=None)
    def test_composition(self, p1, p2):
        t = embed(case2_r(), (M2, M2, M3), (0, 2))
        composed = tuple(p1[p2[i]] for i in range(3))
        lhs = permute_legs(permute_legs(t, p1), p2)
        # applying p1 then p2 gathers index p1[p2[i]]
        rhs = permute_legs(t, composed)
        assert lhs.legs == rhs.legs and lhs == rhs


class TestInvert:
    def test_unit(self):
        unit = TensorElement.unit((M2, M3))
        assert tensor_invert(unit) == unit

    def test_case2_r_has_the_stated_inverse(self):
        r = case2_r()
        assert tensor_invert(r) == case2_r_inverse()

    def test_braid_element_inverse_two_sided(self):
        p = braid_element(2)
        inv = tensor_invert(p)
        unit = TensorElement.unit((M2, M2))
        assert tensor_multiply(p, inv) == unit
        assert tensor_multiply(inv, p) == unit


class TestFlatten:
    def test_four_legs_to_two(self):
        four = outer(case1_r(), case2_r())
        perm = permute_legs(four, (0, 2, 1, 3))  # legs (M2, M2, M3, M3)
        flat = flatten(perm, [2, 2])
        assert flat.legs[0] == tensor_algebra(M2, M2)
        assert flat.legs[1] == tensor_algebra(M3, M3)
        back = unflatten(flat, [[M2, M2], [M3, M3]])
        assert back == perm

    def test_trivial_grouping(self):
        r = case2_r()
        assert flatten(r, [1, 1]) == r

    def test_flatten_respects_products(self):
        # flattening is an algebra isomorphism: products commute with it
        s = outer(case1_r(), case1_r())
        t = outer(case2_r(), case2_r())
        lhs = flatten(tensor_multiply(s, t), [2, 2])
        rhs = tensor_multiply(flatten(s, [2, 2]), flatten(t, [2, 2]))
        assert lhs == rhs

    def test_bad_grouping(self):
        with pytest.raises(ShapeMismatchError):
            flatten(case1_r(), [3])


class TestProperties:
    small_algebras = [kz2_algebra(), matrix_algebra(2)]

    @st.composite
    @staticmethod
    def small_tensors(draw, legs):
        coeffs = {}
        n = draw(st.integers(min_value=0, max_value=4))
        for _ in range(n):
            idx = tuple(draw(st.integers(0, leg.dim - 1)) for leg in legs)
            value = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
            coeffs[idx] = Scalar.from_rational(value, legs[0].params)
        return TensorElement(legs, coeffs)

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_multiply_associative(self, data):
        legs = (kz2_algebra(), matrix_algebra(2))
        s = data.draw(self.small_tensors(legs))
        t = data.draw(self.small_tensors(legs))
        u = data.draw(self.small_tensors(legs))
        assert tensor_multiply(tensor_multiply(s, t), u) == tensor_multiply(
            s, tensor_multiply(t, u)
        )

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_embed_is_multiplicative(self, data):
        legs = (M2, M3)
        target = (M2, kz2_algebra(), M3)
        s = data.draw(self.small_tensors(legs))
        t = data.draw(self.small_tensors(legs))
        lhs = tensor_multiply(embed(s, target, (0, 2)), embed(t, target, (0, 2)))
        rhs = embed(tensor_multiply(s, t), target, (0, 2))
        assert lhs == rhs

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_automorphisms_distribute_over_products(self, data):
        legs = (M2, M2)
        f = frobenius_map(2)
        s = data.draw(self.small_tensors(legs))
        t = data.draw(self.small_tensors(legs))
        lhs = apply_maps(tensor_multiply(s, t), (f, f))
        rhs = tensor_multiply(apply_maps(s, (f, f)), apply_maps(t, (f, f)))
        assert lhs == rhs

    @given(st.data())
    @settings(max_examples=30, deadline=None)
    def test_evaluation_commutes_with_operations(self, data):
        legs = (M2, M2)
        s = data.draw(self.small_tensors(legs))
        t = data.draw(self.small_tensors(legs))
        value = data.draw(
            st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(
                lambda q: q != 0
            )
        )
        assignment = {"a": value}
        s_num = s.substitute(assignment)
        t_num = t.substitute(assignment)
        assert tensor_multiply(s, t).substitute(assignment) == tensor_multiply(s_num, t_num)
        assert permute_legs(s, (1, 0)).substitute(assignment) == permute_legs(s_num, (1, 0))
        target = (M2, M2, M2)
        assert embed(s, target, (0, 2)).substitute(assignment) == embed(
            s_num, tuple(a.substitute(assignment) for a in target), (0, 2)
        )
        f = frobenius_map(2)
        f_num = f.substitute(assignment)
        assert apply_maps(s, (f, f)).substitute(assignment) == apply_maps(s_num, (f_num, f_num))
        assert flatten(s, [2]).substitute(assignment) == flatten(s_num, [2])

    def test_evaluation_commutes_with_inversion(self):
        from fractions import Fraction

        p = braid_element(2)
        assignment = {"a": Fraction(7, 2)}
        lhs = tensor_invert(p).substitute(assignment)
        rhs = tensor_invert(p.substitute(assignment))
        assert lhs == rhs


class TestWitness:
    def test_first_difference_reported_in_index_order(self):
        s = TensorElement.from_terms((M2, M3), [("E11", "E11", 1), ("E12", "E13", 2)])
        t = TensorElement.from_terms((M2, M3), [("E11", "E11", 1), ("E12", "E13", 3)])
        idx, left, right = first_difference(s, t)
        assert s.labels(idx) == ("E12", "E13")
        assert scalar_eq(left, Scalar.from_rational(2, ("a",)))
        assert scalar_eq(right, Scalar.from_rational(3, ("a",)))
