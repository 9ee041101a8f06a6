from django.test import SimpleTestCase

from qsub import choices
from qsub.catalog import (
    function_algebra,
    s3_subgroups,
    span_of_labels,
    subgroup_data,
    sweedler4,
    sweedler_dual_radical_subalgebra,
    symmetric_group,
)
from qsub.correspondence import (
    c_semisimple_implication,
    c_semisimple_summary,
    classify_quantum,
    coinvariants,
    composition_chain,
    flatness_exactness_oracle,
    hopf_as_module,
    is_faithfully_coflat,
    is_faithfully_flat,
    quotient_module_coalgebra,
    roundtrip_correspondence,
    sequence_splits,
    verify_coideal_subalgebra,
)
from qsub.exceptions import VerificationFailed
from qsub.hopf import canonical_pairing
from qsub.reps import LEFT, RIGHT, radical_and_simples, regular_module


class SweedlerCorrespondenceTest(SimpleTestCase):
    """span{1, g} inside Sweedler's four-dimensional algebra"""

    def setUp(self):
        self.H = sweedler4()
        self.A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'g']))

    def test_grouplike_span_is_coideal_subalgebra(self):
        self.assertTrue(self.A.verified)
        self.assertEqual(self.A.dim, 2)

    def test_quotient_has_dimension_two(self):
        Q = quotient_module_coalgebra(self.A)
        self.assertEqual(Q.dim, 2)
        self.assertTrue(Q.certificate.passed)

    def test_coinvariants_recover_subalgebra(self):
        Q = quotient_module_coalgebra(self.A)
        self.assertEqual(coinvariants(Q).subspace, self.A.subspace)

    def test_roundtrip_both_directions(self):
        Q = quotient_module_coalgebra(self.A)
        suite = roundtrip_correspondence(self.H, [self.A], [Q])
        self.assertTrue(suite.passed, suite.failures)
        self.assertEqual(suite['A[0]_roundtrip'].witness['dim_H_A'], 2)

    def test_flat_on_both_sides(self):
        for side in (LEFT, RIGHT):
            verdict = is_faithfully_flat(self.A, side)
            self.assertTrue(verdict.passed, verdict.evidence())

    def test_quotient_is_coflat(self):
        Q = quotient_module_coalgebra(self.A)
        self.assertTrue(is_faithfully_coflat(Q).passed)

    def test_classification(self):
        self.assertEqual(classify_quantum(self.A).label, choices.QUANTUM_HOMOGENEOUS_SPACE)
        Q = quotient_module_coalgebra(self.A)
        self.assertEqual(classify_quantum(Q).label, choices.QUANTUM_SUBGROUP)

    def test_flatness_oracle_agrees(self):
        for side in (LEFT, RIGHT):
            verdict = is_faithfully_flat(self.A, side)
            oracle = flatness_exactness_oracle(hopf_as_module(self.A, side), verdict)
            self.assertTrue(oracle['oracle_agrees'].passed, oracle.failures)


class NonSplitSequenceTest(SimpleTestCase):
    """Sweedler's algebra over itself: free, with non-split sequences to reflect"""

    def setUp(self):
        self.H = sweedler4()
        self.A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'g', 'x', 'gx'])).require_verified()

    def test_radical_sequence_does_not_split(self):
        regular = regular_module(self.H.algebra, LEFT)
        radical = radical_and_simples(self.H.algebra, LEFT).radical
        self.assertFalse(sequence_splits(regular, radical))
        chain = composition_chain(regular)
        self.assertEqual([W.dim for W in chain], [3, 2, 1])

    def test_oracle_reflects_non_split_sequences(self):
        oracle = flatness_exactness_oracle(hopf_as_module(self.A, RIGHT))
        self.assertTrue(oracle.passed, oracle.failures)
        reflected = [check for check in oracle.checks
                     if check.name.startswith('reflects[') and check.name.endswith(':non-split]')]
        self.assertTrue(reflected)
        self.assertTrue(all(check.witness['homology_dim'] > 0 for check in reflected))
        self.assertTrue(any(check.name.startswith('preserves[') and 'non-split' in check.name
                            for check in oracle.checks))


class RejectedSubspaceTest(SimpleTestCase):
    """Subspaces that are not coideal subalgebras"""

    def setUp(self):
        self.H = sweedler4()

    def test_span_of_one_and_x_is_not_a_coideal(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'x']))
        self.assertTrue(A.is_subalgebra)
        self.assertFalse(A.is_coideal)
        self.assertEqual(A.certificate['coideal'].witness['inclusion'], 'Delta(A) in A (x) H')

    def test_span_without_unit(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['g']))
        self.assertFalse(A.certificate['contains_unit'].passed)
        self.assertFalse(A.verified)

    def test_quotient_requires_verified_subalgebra(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'x']))
        with self.assertRaises(VerificationFailed):
            quotient_module_coalgebra(A)

    def test_unverified_input_is_classified_neither(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'x']))
        self.assertEqual(classify_quantum(A).label, choices.NEITHER)


class FunctionAlgebraTest(SimpleTestCase):
    """Coset functions in k^S3"""

    def setUp(self):
        self.S3 = symmetric_group(3)
        self.H = function_algebra(self.S3)

    def test_roundtrip_for_every_subgroup(self):
        for name, M in s3_subgroups(self.S3).items():
            with self.subTest(subgroup=name):
                A, Q = subgroup_data(self.S3, M)
                self.assertEqual(A.dim * Q.dim, 6)
                suite = roundtrip_correspondence(self.H, [A], [Q])
                self.assertTrue(suite.passed, suite.failures)

    def test_coinvariants_of_restriction(self):
        A, Q = subgroup_data(self.S3, s3_subgroups(self.S3)['C2'])
        self.assertEqual(coinvariants(Q).subspace, A.subspace)
        self.assertEqual(quotient_module_coalgebra(A).dim, 2)


class SemisimplicityImplicationTest(SimpleTestCase):
    """Semisimple module categories force cosemisimple quotients"""

    def test_group_algebra_instance(self):
        S3 = symmetric_group(3)
        P = canonical_pairing(function_algebra(S3))
        U = P.left
        K = span_of_labels(U, [f'd_{S3.labels[g]}*' for g in s3_subgroups(S3)['C2']])
        suite = c_semisimple_implication(P, K, [regular_module(U.algebra, RIGHT)])
        self.assertTrue(suite.passed, suite.failures)
        summary = c_semisimple_summary(suite)
        self.assertEqual(summary, {'hypothesis': True, 'cosemisimple': True, 'flat_left': True, 'flat_right': True})

    def test_radical_instance_is_vacuous(self):
        H = sweedler4()
        U, K = sweedler_dual_radical_subalgebra(H)
        suite = c_semisimple_implication(canonical_pairing(H), K, [regular_module(U.algebra, RIGHT)])
        self.assertTrue(suite.passed, suite.failures)
        self.assertFalse(c_semisimple_summary(suite)['hypothesis'])
