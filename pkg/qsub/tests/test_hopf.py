from django.test import SimpleTestCase, override_settings

from qsub.catalog import (
    build,
    catalog_certificates,
    cyclic_group,
    evaluation_isomorphism,
    function_algebra,
    group_algebra,
    matrix_coalgebra,
    named_group,
    s3_subgroups,
    subgroup_data,
    sweedler4,
    symmetric_group,
    taft,
)
from qsub.exceptions import (
    DimensionCapExceeded,
    DimensionMismatch,
    NotASubgroup,
    NotPrimitiveRoot,
    UnknownName,
)
from qsub.hopf import (
    antipode_bijective,
    antipode_order,
    basis_grouplikes,
    canonical_pairing,
    check_coalgebra_axioms,
    check_hopf_axioms,
    check_pairing,
    double_dual_identification,
    hit_action,
)
from qsub.linalg import LinMap, identity


class HopfAxiomTest(SimpleTestCase):
    """Axiom suites and their witnesses"""

    def setUp(self):
        self.H = sweedler4()

    def test_sweedler_passes(self):
        suite = check_hopf_axioms(self.H)
        self.assertTrue(suite.passed)
        self.assertEqual(
            [check.name for check in suite.checks],
            ['associativity', 'unit', 'coassociativity', 'counit', 'comult_multiplicative',
             'counit_multiplicative', 'antipode_left', 'antipode_right'],
        )

    def test_wrong_antipode_names_first_bad_basis_element(self):
        broken = self.H.with_antipode(identity(4, self.H.field))
        suite = check_hopf_axioms(broken)
        self.assertFalse(suite.passed)
        failure = suite['antipode_left']
        self.assertFalse(failure.passed)
        self.assertEqual(failure.witness['basis'], 'x')
        # x + gx on the left, 0 on the right
        self.assertEqual(failure.witness['lhs'], {'x': '1', 'gx': '1'})
        self.assertEqual(failure.witness['rhs'], {})

    def test_broken_coassociativity(self):
        C = self.H.coalgebra
        comult = C.comult + LinMap(16, 4, C.field, {(2 * 4 + 2, 2): C.field.one})
        suite = check_coalgebra_axioms(type(C)(C.dim, comult, C.counit, C.labels))
        self.assertFalse(suite['coassociativity'].passed)
        self.assertIn('basis', suite['coassociativity'].witness)

    def test_shape_mismatch_is_input_error(self):
        broken = self.H.with_antipode(identity(3, self.H.field))
        with self.assertRaises(DimensionMismatch):
            check_hopf_axioms(broken)

    def test_sweedler_antipode(self):
        self.assertEqual(antipode_order(self.H), 4)
        self.assertTrue(antipode_bijective(self.H).passed)

    def test_grouplikes(self):
        self.assertEqual(basis_grouplikes(self.H), ['1', 'g'])

    def test_double_dual(self):
        self.assertTrue(double_dual_identification(self.H).passed)


class PairingTest(SimpleTestCase):
    """Evaluation pairings and hit actions"""

    def test_canonical_pairing_is_a_bialgebra_pairing(self):
        for H in (sweedler4(), group_algebra(symmetric_group(3))):
            self.assertTrue(check_pairing(canonical_pairing(H)).passed)

    def test_hit_actions_are_modules(self):
        P = canonical_pairing(sweedler4())
        for side in ('left', 'right'):
            module = hit_action(P, side)
            self.assertEqual(module.dim, 4)
            self.assertEqual(module.side, side)


class CatalogTest(SimpleTestCase):
    """Catalog objects certify themselves"""

    def test_acceptance_certificates(self):
        certificates = catalog_certificates()
        self.assertEqual(set(certificates), {'k', 'kC2', 'kS3', 'k^S3', 'sweedler4', 'taft(3,GF(7))'})
        for name, suite in certificates.items():
            self.assertTrue(suite.passed, name)

    def test_taft_antipode_order(self):
        H = taft(3, 7, 2)
        self.assertEqual(H.dim, 9)
        self.assertEqual(str(H.field), 'GF(7)')
        self.assertEqual(antipode_order(H), 6)
        self.assertEqual(basis_grouplikes(H), ['1', 'g', 'g^2'])

    def test_taft_requires_primitive_root(self):
        with self.assertRaises(NotPrimitiveRoot):
            taft(3, 7, 1)
        with self.assertRaises(NotPrimitiveRoot):
            taft(3, 7, 3)

    def test_group_algebra_grouplikes(self):
        H = group_algebra(symmetric_group(3))
        self.assertEqual(basis_grouplikes(H), list(H.labels))
        self.assertEqual(antipode_order(H), 2)

    def test_evaluation_isomorphism(self):
        _, suite = evaluation_isomorphism(cyclic_group(3))
        self.assertTrue(suite.passed)

    def test_matrix_coalgebra(self):
        C = matrix_coalgebra(2)
        self.assertEqual(C.labels, ('e00', 'e01', 'e10', 'e11'))
        self.assertTrue(check_coalgebra_axioms(C).passed)

    def test_s3_subgroup_data(self):
        S3 = symmetric_group(3)
        subgroups = s3_subgroups(S3)
        self.assertEqual({name: len(M) for name, M in subgroups.items()},
                         {'trivial': 1, 'C2': 2, 'C3': 3, 'S3': 6})
        A, Q = subgroup_data(S3, subgroups['C2'])
        self.assertEqual((A.dim, Q.dim), (3, 2))

    def test_subset_without_identity(self):
        S3 = symmetric_group(3)
        with self.assertRaises(NotASubgroup):
            subgroup_data(S3, (1, 2))

    def test_unknown_names(self):
        with self.assertRaises(UnknownName):
            named_group('D4')
        with self.assertRaises(UnknownName):
            build('quantum-sl2')

    def test_build_with_parameters(self):
        self.assertEqual(build('group-algebra', group='C2').dim, 2)
        self.assertEqual(build('function-algebra', group='C3', p='5').field.characteristic, 5)

    @override_settings(QSUB_DIMENSION_CAP=4)
    def test_dimension_cap(self):
        with self.assertRaises(DimensionCapExceeded):
            group_algebra(symmetric_group(3))
        self.assertEqual(sweedler4().dim, 4)

    @override_settings(QSUB_DIMENSION_CAP=64)
    def test_group_order_capped_before_construction(self):
        with self.assertRaises(DimensionCapExceeded) as raised:
            named_group('S7')
        self.assertEqual(raised.exception.params, {'dim': 5040, 'cap': 64})
        with self.assertRaises(DimensionCapExceeded):
            build('group-algebra', group='C100000')
        self.assertEqual(named_group('S4').order, 24)

    def test_bad_parameters_are_input_errors(self):
        for params in ({'n': 'abc'}, {'p': '7.5'}):
            with self.subTest(params=params), self.assertRaises(UnknownName):
                build('taft', **params)
        for group in ('S', 'Cx', 'Q8'):
            with self.subTest(group=group), self.assertRaises(UnknownName):
                named_group(group)
        with self.assertRaises(DimensionMismatch):
            taft(0, p=0, q=1)
        with self.assertRaises(DimensionMismatch):
            named_group('C0')
