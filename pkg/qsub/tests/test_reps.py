from django.test import SimpleTestCase

from qsub.catalog import group_algebra, span_of_labels, sweedler4, symmetric_group, taft
from qsub.correspondence import quotient_module_coalgebra, simple_comodules, verify_coideal_subalgebra
from qsub.exceptions import DimensionMismatch, RadicalUnavailable
from qsub.linalg import LinMap
from qsub.reps import (
    LEFT,
    ComoduleData,
    check_representation,
    corestriction_adjunction,
    cotensor_counit,
    hom_colinear,
    is_cosemisimple,
    jacobson_radical,
    radical_and_simples,
    rational_module,
    comodule_from_dual_module,
    regular_comodule,
    regular_module,
    trivial_comodule,
)


class RepresentationAxiomTest(SimpleTestCase):
    """Comodule and module axioms"""

    def setUp(self):
        self.H = sweedler4()

    def test_regular_structures(self):
        self.assertTrue(check_representation(regular_comodule(self.H.coalgebra)).passed)
        self.assertTrue(check_representation(regular_comodule(self.H.coalgebra, LEFT)).passed)
        self.assertTrue(check_representation(regular_module(self.H.algebra)).passed)
        self.assertTrue(check_representation(trivial_comodule(self.H)).passed)

    def test_broken_coaction_reported(self):
        field = self.H.field
        # v -> v (x) x is not counital
        coaction = LinMap.from_entries(4, 1, field, {(2, 0): field.one})
        suite = check_representation(ComoduleData(1, coaction, self.H.coalgebra))
        self.assertFalse(suite.passed)

    def test_unknown_representation_type(self):
        with self.assertRaises(TypeError):
            check_representation(self.H)

    def test_rational_module_round_trip(self):
        V = regular_comodule(self.H.coalgebra)
        back = comodule_from_dual_module(rational_module(V), self.H.coalgebra)
        self.assertEqual(back.coaction, V.coaction)
        self.assertEqual(back.side, V.side)


class ColinearMapTest(SimpleTestCase):
    def setUp(self):
        self.H = sweedler4()

    def test_colinear_endomorphisms_of_regular_comodule(self):
        self.assertEqual(hom_colinear(regular_comodule(self.H.coalgebra), regular_comodule(self.H.coalgebra)).dim, 4)

    def test_sides_must_agree(self):
        with self.assertRaises(DimensionMismatch):
            hom_colinear(regular_comodule(self.H.coalgebra), regular_comodule(self.H.coalgebra, LEFT))

    def test_cotensor_with_coalgebra(self):
        V = regular_comodule(self.H.coalgebra)
        S, counit = cotensor_counit(V)
        self.assertEqual(S.dim, V.dim)
        self.assertTrue(counit.is_invertible())

    def test_corestriction_adjunction(self):
        A = verify_coideal_subalgebra(self.H, span_of_labels(self.H, ['1', 'g'])).require_verified()
        Q = quotient_module_coalgebra(A)
        maps = corestriction_adjunction(Q.psi, regular_comodule(self.H.coalgebra), regular_comodule(Q.coalgebra))
        self.assertTrue(maps.certificate.passed, maps.certificate.failures)


class RadicalTest(SimpleTestCase):
    """Trace-form radicals and simple modules"""

    def test_sweedler_radical(self):
        H = sweedler4()
        self.assertEqual(jacobson_radical(H.algebra), span_of_labels(H, ['x', 'gx']))

    def test_group_algebra_is_semisimple(self):
        data = radical_and_simples(group_algebra(symmetric_group(3)).algebra)
        self.assertEqual(data.radical.dim, 0)
        self.assertEqual([S.dim for S in data.simples], [1, 1, 2])

    def test_small_characteristic_rejected(self):
        with self.assertRaises(RadicalUnavailable):
            jacobson_radical(taft(3, 7, 2).algebra)

    def test_cosemisimplicity(self):
        self.assertTrue(is_cosemisimple(group_algebra(symmetric_group(3)).coalgebra).passed)
        check = is_cosemisimple(sweedler4().coalgebra)
        self.assertFalse(check.passed)
        self.assertEqual(check.witness['dual_radical_dim'], 2)

    def test_simple_comodules_of_sweedler(self):
        simples = simple_comodules(sweedler4().coalgebra)
        self.assertEqual([V.dim for V in simples], [1, 1])
