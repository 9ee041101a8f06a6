from django.test import SimpleTestCase

from qsub.catalog import cyclic_group, group_algebra, matrix_coalgebra, sweedler4
from qsub.linalg import LinMap, identity
from qsub.morita import (
    cohom,
    cohom_adjunction_check,
    coend,
    coend_matrix_witness,
    coend_regular_witness,
    ground_coalgebra,
    identity_pre_equivalence,
    is_quasi_finite,
    matrix_morita_data,
    verify_pre_equivalence,
)
from qsub.reps import (
    LEFT,
    RIGHT,
    BicomoduleData,
    ComoduleData,
    regular_bicomodule,
    regular_comodule,
    trivial_comodule,
)


class QuasiFiniteTest(SimpleTestCase):
    def test_regular_comodule_hom_dims(self):
        H = sweedler4()
        samples = [('k', trivial_comodule(H)), ('H', regular_comodule(H.coalgebra))]
        check = is_quasi_finite(regular_comodule(H.coalgebra), samples)
        self.assertTrue(check.passed)
        self.assertEqual(check.witness['hom_dims'], {'k': 1, 'H': 4})


class CohomTest(SimpleTestCase):
    """Cohom as the dual of colinear maps"""

    def test_ground_coalgebra(self):
        k = ground_coalgebra()
        field = k.field
        X = BicomoduleData(2, ComoduleData(2, identity(2, field), k, LEFT), ComoduleData(2, identity(2, field), k, RIGHT))
        Y = ComoduleData(3, identity(3, field), k, RIGHT)
        self.assertEqual(cohom(X, Y).comodule.dim, 6)
        W = ComoduleData(1, identity(1, field), k, RIGHT)
        suite = cohom_adjunction_check(X, Y, [('W', W)])
        self.assertTrue(suite.passed, suite.failures)

    def test_regular_bicomodule_is_forgetful(self):
        D = group_algebra(cyclic_group(2)).coalgebra
        Y = regular_comodule(D)
        data = cohom(regular_bicomodule(D), Y)
        self.assertEqual(data.comodule.dim, Y.dim)
        suite = cohom_adjunction_check(regular_bicomodule(D), Y, [('D', regular_comodule(D))])
        self.assertTrue(suite.passed, suite.failures)


class CoendTest(SimpleTestCase):
    """Coend coalgebras and their witnesses"""

    def test_trivial_comodule(self):
        H = sweedler4()
        data = coend(trivial_comodule(H))
        self.assertEqual(data.coalgebra.dim, 1)
        self.assertTrue(data.certificate.passed)

    def test_regular_witness(self):
        for D in (sweedler4().coalgebra, matrix_coalgebra(2)):
            _, suite = coend_regular_witness(D)
            self.assertTrue(suite.passed, suite.failures)

    def test_matrix_witness(self):
        E = matrix_morita_data(2)
        witness, suite = coend_matrix_witness(ComoduleData(2, identity(2, E.Gamma.field), E.Gamma, RIGHT))
        self.assertTrue(suite.passed, suite.failures)
        self.assertEqual(witness.shape, (4, 4))


class PreEquivalenceTest(SimpleTestCase):
    """Morita-Takeuchi data"""

    def test_identity_data(self):
        D = sweedler4().coalgebra
        regular = regular_comodule(D)
        suite = verify_pre_equivalence(identity_pre_equivalence(D), [('D', regular)], [('D', regular)])
        self.assertTrue(suite.passed, suite.failures)

    def test_matrix_data(self):
        E = matrix_morita_data(2)
        suite = verify_pre_equivalence(E, [('k', regular_comodule(E.Gamma))],
                                       [('D', regular_comodule(E.D)), ('simple', E.P.right)])
        self.assertTrue(suite.passed, suite.failures)

    def test_zeroed_entry_breaks_bijectivity(self):
        E = matrix_morita_data(2)
        broken = type(E)(E.Gamma, E.D, E.P, E.Q, LinMap.zero(*E.f.shape, E.f.field), E.g)
        suite = verify_pre_equivalence(broken)
        self.assertFalse(suite.passed)
        self.assertFalse(suite['f_bijective'].passed)
