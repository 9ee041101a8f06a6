from django.test import SimpleTestCase

from qsub.catalog import span_of_labels, sweedler4
from qsub.correspondence import (
    algebra_relative_module,
    hopf_relative_module,
    quotient_from_ideal,
    quotient_module_coalgebra,
    verify_coideal_subalgebra,
)
from qsub.exceptions import PipelineHalted
from qsub.linalg import LinMap, identity, tensor_of_maps
from qsub.monadics import (
    ASSUMED_COCONTINUITY,
    ASSUMED_LOCAL_PRESENTABILITY,
    FUNCTOR_DERIVED,
    FUNCTOR_SUPPLIED,
    HomComonad,
    IdentityComonad,
    TensorComonad,
    adjunction_naturality_check,
    adjunction_unit_counit_check,
    comonad_coalgebra,
    comparison_comodule,
    free_relative_module,
    gamma_isomorphism,
    identity_adjunction,
    internal_hom,
    module_functor_checks,
    monad_from_adjunction,
    res_ind_adjunction,
    run_quotient_pipeline,
    surjectivity_from_coflatness,
    unit_object_algebra,
)
from qsub.reps import (
    RIGHT,
    ModuleData,
    RelHopfModuleData,
    check_representation,
    regular_comodule,
    trivial_comodule,
)


class SweedlerMixin:
    def setUp(self):
        self.H = sweedler4()
        self.A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'g'])).require_verified()
        self.Q = quotient_module_coalgebra(self.A)


class MonadTest(SweedlerMixin, SimpleTestCase):
    """Monads from adjunctions and their unit-object algebras"""

    def test_identity_adjunction_gives_ground_field(self):
        unit_object = trivial_comodule(self.H)
        monad = monad_from_adjunction(identity_adjunction(), [('I', unit_object)])
        unit = unit_object_algebra(monad, unit_object)
        self.assertEqual(unit.algebra.dim, 1)
        self.assertTrue(monad.certificate.passed)

    def test_res_ind_unit_object_is_the_subalgebra(self):
        unit_object = trivial_comodule(self.H)
        monad = monad_from_adjunction(res_ind_adjunction(self.A),
                                      [('I', unit_object), ('H', regular_comodule(self.H.coalgebra))])
        self.assertTrue(monad.certificate.passed, monad.certificate.failures)
        unit = unit_object_algebra(monad, unit_object, self.A.labels)
        self.assertEqual(unit.algebra.dim, 2)
        self.assertEqual(unit.algebra.mult, self.A.algebra.mult)

    def test_res_ind_hypotheses_are_verified(self):
        adjunction = res_ind_adjunction(self.A)
        self.assertEqual(adjunction.hypotheses, {})
        samples = [('k', trivial_comodule(self.H)), ('H', regular_comodule(self.H.coalgebra))]
        suite = adjunction.verify_hypotheses(samples)
        self.assertTrue(suite.passed, suite.failures)
        self.assertEqual(adjunction.hypotheses, {'res_module_functor': True, 'ind_module_functor': True})

    def test_induction_that_ignores_the_tensor_factor_is_caught(self):
        base = self.A.comodule_algebra
        field = self.H.field

        def first_leg_only(V):
            # A acts on the first basis vector of V and kills the rest
            M = free_relative_module(V, base)
            keep = LinMap(V.dim, V.dim, field, {(0, 0): field.one})
            action = tensor_of_maps(keep, base.algebra.mult)
            return RelHopfModuleData(M.comodule, ModuleData(M.dim, action, base.algebra, RIGHT), base)

        samples = [('k', trivial_comodule(self.H)), ('H', regular_comodule(self.H.coalgebra))]
        suite = module_functor_checks(self.H, A=self.A, samples=samples, induce=first_leg_only)
        self.assertFalse(suite['ind_module_functor'].passed)
        self.assertIn('H,k', suite['ind_module_functor'].witness['pairs'])
        self.assertNotIn('k,k', suite['ind_module_functor'].witness['pairs'])


class InternalHomTest(SweedlerMixin, SimpleTestCase):
    """The relative internal hom and its adjunction"""

    def test_internal_hom_is_relative_module(self):
        data = internal_hom(self.A.comodule_algebra, regular_comodule(self.H.coalgebra))
        self.assertTrue(data.certificate.passed, data.certificate.failures)

    def test_bijection_for_algebra_and_regular(self):
        bijection = adjunction_unit_counit_check(algebra_relative_module(self.A),
                                                 regular_comodule(self.H.coalgebra))
        self.assertTrue(bijection.certificate.passed, bijection.certificate.failures)
        self.assertEqual(bijection.left.dim, bijection.right.dim)

    def test_naturality_along_inclusion(self):
        N = regular_comodule(self.H.coalgebra)
        suite = adjunction_naturality_check(algebra_relative_module(self.A), hopf_relative_module(self.A),
                                            self.A.subspace.inclusion(), N, N, identity(N.dim, N.field))
        self.assertTrue(suite.passed, suite.failures)
        self.assertTrue(any(check.name.startswith('target_square') for check in suite.checks))


class ComonadTest(SimpleTestCase):
    """Coalgebras read off comonads on vector spaces"""

    def setUp(self):
        self.H = sweedler4()

    def test_identity_comonad(self):
        result = comonad_coalgebra(IdentityComonad(self.H.field))
        self.assertEqual(result.coalgebra.dim, 1)
        self.assertIn(ASSUMED_COCONTINUITY, result.assumed)

    def test_tensor_comonad_recovers_coalgebra(self):
        D = self.H.coalgebra
        C = comonad_coalgebra(TensorComonad(D)).coalgebra
        self.assertEqual(C.comult, D.comult)
        self.assertEqual(C.counit, D.counit)

    def test_hom_comonad_over_ground_subalgebra(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1'])).require_verified()
        G = HomComonad(A.comodule_algebra)
        result = comonad_coalgebra(G)
        self.assertTrue(result.certificate.passed)
        self.assertEqual(result.coalgebra.comult, self.H.comult)
        self.assertEqual(result.coalgebra.counit, self.H.counit)
        V = comparison_comodule(G, result.coalgebra, hopf_relative_module(A))
        self.assertEqual(V.coaction, self.H.comult)
        self.assertTrue(check_representation(V).passed)


class QuotientPipelineTest(SweedlerMixin, SimpleTestCase):
    """From a quotient back to its coideal subalgebra"""

    def test_sweedler_pipeline(self):
        result = run_quotient_pipeline(self.Q)
        self.assertEqual(result.subalgebra.subspace, self.A.subspace)
        self.assertTrue(result.flat.passed)
        self.assertEqual(result.assumed, (ASSUMED_LOCAL_PRESENTABILITY,))
        self.assertEqual(result.functor, FUNCTOR_DERIVED)
        self.assertEqual(result.hypotheses, {'corestriction_module_functor': True})

    def test_supplied_coaction_recovers_pi(self):
        field = self.H.field
        coaction = tensor_of_maps(identity(self.H.dim, field), self.Q.pi) @ self.H.comult
        result = run_quotient_pipeline(self.Q, coaction=coaction)
        self.assertEqual(result.functor, FUNCTOR_SUPPLIED)
        self.assertEqual(result.subalgebra.subspace, self.A.subspace)

    def test_supplied_coaction_of_another_map_halts_at_recover(self):
        # h -> h (x) pi(1) comes from the coalgebra map eps(-) pi(1), not from pi
        field = self.H.field
        constant = self.Q.pi @ self.H.unit @ self.H.counit
        coaction = tensor_of_maps(identity(self.H.dim, field), constant) @ self.H.comult
        with self.assertRaises(PipelineHalted) as raised:
            run_quotient_pipeline(self.Q, coaction=coaction)
        self.assertEqual(raised.exception.stage, 'recover')
        check = raised.exception.certificate['matches_pi']
        self.assertEqual(check.witness, {'functor': FUNCTOR_SUPPLIED})

    def test_surjectivity_composite(self):
        suite = surjectivity_from_coflatness(self.Q)
        self.assertTrue(suite.passed, suite.failures)

    def test_halts_on_a_kernel_that_is_not_a_left_ideal(self):
        # span{x} is a coideal but g x = gx leaves it
        bad = quotient_from_ideal(self.H, span_of_labels(self.H, ['x']))
        with self.assertRaises(PipelineHalted) as raised:
            run_quotient_pipeline(bad)
        self.assertEqual(raised.exception.stage, 'quotient')


class GammaTest(SweedlerMixin, SimpleTestCase):
    """The comparison isomorphism on cotensor products"""

    def test_roundtrip_on_trivial_and_regular(self):
        M = regular_comodule(self.Q.coalgebra)
        for name, X in (('k', trivial_comodule(self.H)), ('H', regular_comodule(self.H.coalgebra))):
            with self.subTest(X=name):
                data = gamma_isomorphism(X, M, self.Q, seed=7, samples=20)
                self.assertTrue(data.certificate.passed, data.certificate.failures)
                self.assertEqual(data.certificate['random_roundtrip'].witness['exact'], 20)
