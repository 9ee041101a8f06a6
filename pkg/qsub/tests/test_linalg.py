from django.core.exceptions import ValidationError
from django.test import SimpleTestCase

from qsub.exceptions import DimensionMismatch, NotSurjective, UnsupportedField
from qsub.linalg import (
    RATIONALS,
    Field,
    LinMap,
    Subspace,
    canonicalize_subspace,
    commuting_constraint,
    find_invertible,
    find_section,
    flip_map,
    image_of,
    kernel_of,
    solve,
    tensor_of_maps,
)


class FieldTest(SimpleTestCase):
    """Ground field arithmetic"""

    def test_prime_field_arithmetic(self):
        F = Field(5)
        self.assertEqual(F.element(3) * F.element(2), F.one)
        self.assertEqual(F.format(F.element(-1)), '4')

    def test_non_prime_characteristic_rejected(self):
        with self.assertRaises(UnsupportedField):
            Field(4)

    def test_unsupported_field_is_a_validation_error(self):
        with self.assertRaises(ValidationError):
            Field(9)

    def test_parse_fraction(self):
        self.assertEqual(RATIONALS.format(RATIONALS.parse('3/6')), '1/2')
        self.assertEqual(Field(7).parse('1/2') * Field(7).element(2), Field(7).one)

    def test_parse_rejects_zero_denominator(self):
        with self.assertRaises(ValueError):
            Field(3).parse('1/3')


class LinMapTest(SimpleTestCase):
    """Sparse maps and their sympy round trips"""

    def setUp(self):
        self.f = LinMap.from_rows([[1, 2, 3], [2, 4, 6]], RATIONALS)

    def test_zero_entries_are_dropped(self):
        g = LinMap.from_rows([[0, 1], [0, 0]], RATIONALS)
        self.assertEqual(dict(g.entries), {(0, 1): RATIONALS.one})

    def test_entry_outside_shape(self):
        with self.assertRaises(DimensionMismatch):
            LinMap.from_entries(2, 2, RATIONALS, {(2, 0): 1})

    def test_rank_and_kernel(self):
        self.assertEqual(self.f.rank(), 1)
        kernel = kernel_of(self.f)
        self.assertEqual(kernel.dim, 2)
        for vector in kernel.basis:
            self.assertEqual(self.f.apply(vector), RATIONALS.zero_vector(2))

    def test_image(self):
        image = image_of(self.f)
        self.assertEqual(image.dim, 1)
        self.assertTrue(image.contains(RATIONALS.vector([1, 2])))
        self.assertFalse(image.contains(RATIONALS.vector([1, 0])))

    def test_dense_and_sparse_reduce_identically(self):
        dense, dense_pivots = self.f.to_domain_matrix('dense').rref()
        sparse, sparse_pivots = self.f.to_domain_matrix('sparse').rref()
        self.assertEqual(tuple(dense_pivots), tuple(sparse_pivots))
        self.assertEqual(LinMap.from_domain_matrix(dense, RATIONALS),
                         LinMap.from_domain_matrix(sparse, RATIONALS))

    def test_compose_shape_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            self.f @ self.f

    def test_inverse(self):
        g = LinMap.from_rows([[1, 1], [0, 1]], RATIONALS)
        self.assertEqual(g @ g.inverse(), LinMap.identity(2, RATIONALS))

    def test_first_difference(self):
        g = LinMap.from_rows([[1, 2, 3], [2, 5, 6]], RATIONALS)
        self.assertEqual(self.f.first_difference(g), (1, 1))
        self.assertIsNone(self.f.first_difference(self.f))


class TensorConventionTest(SimpleTestCase):
    """Flattened tensor indices follow ``i * dim2 + j``"""

    def test_kronecker_index(self):
        f = LinMap.from_rows([[1, 0], [0, 2]], RATIONALS)
        g = LinMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]], RATIONALS)
        product = tensor_of_maps(f, g)
        self.assertEqual(product.shape, (6, 6))
        # (e1 (x) e0) -> 2 * (e1 (x) e1)
        self.assertEqual(product[(1 * 3 + 1, 1 * 3 + 0)], RATIONALS.element(2))

    def test_flip(self):
        flip = flip_map(2, 3, RATIONALS)
        vector = RATIONALS.unit_vector(6, 0 * 3 + 1)
        self.assertEqual(flip.apply(vector), RATIONALS.unit_vector(6, 1 * 2 + 0))


class SubspaceTest(SimpleTestCase):
    """Canonical echelon bases"""

    def test_canonical_basis_ignores_spanning_set(self):
        first = canonicalize_subspace([[1, 1, 0], [0, 1, 1]], 3)
        second = canonicalize_subspace([[1, 2, 1], [1, 0, -1], [0, 0, 0]], 3)
        self.assertEqual(first, second)

    def test_coordinates_and_quotient(self):
        S = canonicalize_subspace([[1, 1, 0]], 3)
        vector = RATIONALS.vector([2, 2, 0])
        self.assertEqual(S.coordinates(vector), RATIONALS.vector([2]))
        projection = S.quotient_map()
        self.assertEqual(projection.shape, (2, 3))
        self.assertEqual(projection.apply(vector), RATIONALS.zero_vector(2))

    def test_coordinates_outside_subspace(self):
        S = canonicalize_subspace([[1, 0, 0]], 3)
        with self.assertRaises(DimensionMismatch):
            S.coordinates(RATIONALS.vector([0, 1, 0]))

    def test_intersection(self):
        S = canonicalize_subspace([[1, 0, 0], [0, 1, 0]], 3)
        T = canonicalize_subspace([[0, 1, 0], [0, 0, 1]], 3)
        self.assertEqual(S.intersect(T), canonicalize_subspace([[0, 1, 0]], 3))

    def test_vector_length_checked(self):
        with self.assertRaises(DimensionMismatch):
            canonicalize_subspace([[1, 0]], 3)


class SolverTest(SimpleTestCase):
    """Linear systems and constrained sections"""

    def test_inconsistent_system(self):
        f = LinMap.from_rows([[1, 1], [1, 1]], RATIONALS)
        self.assertIsNone(solve(f, [1, 2]))

    def test_solution(self):
        f = LinMap.from_rows([[1, 1], [0, 1]], RATIONALS)
        self.assertEqual(solve(f, [3, 1]), RATIONALS.vector([2, 1]))

    def test_section_of_surjection(self):
        p = LinMap.from_rows([[1, 1, 0], [0, 0, 1]], RATIONALS)
        s = find_section(p)
        self.assertEqual(p @ s, LinMap.identity(2, RATIONALS))

    def test_section_requires_surjection(self):
        p = LinMap.from_rows([[1, 1], [2, 2]], RATIONALS)
        with self.assertRaises(NotSurjective):
            find_section(p)

    def test_constrained_section(self):
        # s must intertwine the swap on k^2 with the swap of the first two coordinates
        p = LinMap.from_rows([[1, 0, 0], [0, 1, 0]], RATIONALS)
        X = LinMap.from_rows([[0, 1], [1, 0]], RATIONALS)
        Y = LinMap.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]], RATIONALS)
        s = find_section(p, [commuting_constraint(X, Y, 3, 2)])
        self.assertEqual(p @ s, LinMap.identity(2, RATIONALS))
        self.assertEqual(s @ X, Y @ s)


class InvertibleSearchTest(SimpleTestCase):
    """Invertible elements of a space of square maps"""

    def diagonal_space(self, field):
        # diag(t0, t1, t0 + t1): every basis element is singular
        return canonicalize_subspace([[1, 0, 0, 0, 0, 0, 0, 0, 1], [0, 0, 0, 0, 1, 0, 0, 0, 1]], 9, field)

    def test_empty_map_is_invertible(self):
        found = find_invertible(Subspace.zero(0, RATIONALS), 0, 0)
        self.assertEqual(found, LinMap.identity(0, RATIONALS))

    def test_combination_found_when_basis_elements_are_singular(self):
        found = find_invertible(self.diagonal_space(RATIONALS), 3, 3, attempts=0)
        self.assertTrue(found.is_invertible())
        self.assertEqual(found, LinMap.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]], RATIONALS))

    def test_small_prime_tries_every_residue(self):
        # t0 t1 (t0 + t1) vanishes on all of GF(2)^2 but not on GF(3)^2
        self.assertIsNone(find_invertible(self.diagonal_space(Field(2)), 3, 3, attempts=0))
        found = find_invertible(self.diagonal_space(Field(3)), 3, 3, attempts=0)
        self.assertTrue(found.is_invertible())

    def test_no_invertible_element(self):
        space = canonicalize_subspace([[1, 0, 0, 0], [0, 1, 0, 0]], 4, RATIONALS)
        self.assertIsNone(find_invertible(space, 2, 2))
