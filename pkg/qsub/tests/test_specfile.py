from django.test import SimpleTestCase

from qsub import specfile
from qsub.catalog import span_of_labels, sweedler4
from qsub.exceptions import DimensionMismatch, NotSurjective, SpecFileError
from qsub.hopf import check_coalgebra_axioms, check_hopf_axioms

GROUPLIKE = """\
# one grouplike element
field QQ
kind coalgebra
basis a
map comult
  a a(x)a 1
map counit
  a k 1
"""


class ParseTest(SimpleTestCase):
    """Parsing and the positions carried by parse errors"""

    def assertSpecError(self, text, line, column):
        with self.assertRaises(SpecFileError) as raised:
            specfile.parse(text)
        self.assertEqual((raised.exception.line, raised.exception.column), (line, column))

    def test_grouplike_coalgebra(self):
        document = specfile.parse(GROUPLIKE)
        self.assertEqual(document.kind, specfile.COALGEBRA)
        self.assertEqual(document.labels, ('a',))
        self.assertTrue(check_coalgebra_axioms(specfile.to_coalgebra(document)).passed)

    def test_bad_value_position(self):
        self.assertSpecError(GROUPLIKE.replace('a a(x)a 1', 'a a(x)a 1/0'), 6, 11)

    def test_undeclared_label_position(self):
        self.assertSpecError(GROUPLIKE.replace('  a k 1', '  b k 1'), 8, 3)

    def test_duplicate_label(self):
        self.assertSpecError(GROUPLIKE.replace('basis a', 'basis a a'), 4, 9)

    def test_bad_field(self):
        self.assertSpecError(GROUPLIKE.replace('field QQ', 'field GF(6)'), 2, 7)

    def test_missing_field(self):
        self.assertSpecError(GROUPLIKE.replace('field QQ\n', ''), 1, 1)

    def test_entry_before_map(self):
        self.assertSpecError('field QQ\n  a a 1\n', 2, 3)

    def test_missing_map(self):
        text = GROUPLIKE.split('map counit')[0]
        with self.assertRaises(SpecFileError):
            specfile.parse(text)

    def test_tensor_arity(self):
        with self.assertRaises(DimensionMismatch):
            specfile.parse(GROUPLIKE.replace('a a(x)a 1', 'a a 1'))

    def test_unreadable_file(self):
        with self.assertRaises(SpecFileError):
            specfile.load('/nonexistent/qsub.spec')


class SerializationTest(SimpleTestCase):
    def setUp(self):
        self.H = sweedler4()
        self.text = specfile.serialize(specfile.from_hopf(self.H))

    def test_serialized_hopf_algebra_parses_back(self):
        H = specfile.to_hopf(specfile.parse(self.text))
        self.assertEqual(H.labels, self.H.labels)
        self.assertEqual(H.mult, self.H.mult)
        self.assertEqual(H.comult, self.H.comult)
        self.assertEqual(H.antipode, self.H.antipode)
        self.assertTrue(check_hopf_axioms(H).passed)

    def test_serialization_is_stable(self):
        self.assertEqual(specfile.serialize(specfile.parse(self.text)), self.text)

    def test_hash_ignores_label_order(self):
        reordered = self.text.replace('basis 1 g x gx', 'basis gx x g 1')
        self.assertNotEqual(reordered, self.text)
        self.assertEqual(specfile.content_hash(specfile.parse(reordered)),
                         specfile.content_hash(specfile.parse(self.text)))

    def test_hash_sees_values(self):
        changed = specfile.parse(self.text.replace('map antipode', 'map antipode\n  1 g 0'))
        self.assertEqual(specfile.content_hash(changed), specfile.content_hash(specfile.parse(self.text)))
        other = specfile.from_hopf(self.H.with_antipode(self.H.antipode.scale(2)))
        self.assertNotEqual(specfile.content_hash(other), specfile.content_hash(specfile.parse(self.text)))


class ConversionTest(SimpleTestCase):
    """Library documents against the objects they were built from"""

    def setUp(self):
        self.library = specfile.spec_library()
        self.H = specfile.to_hopf(self.library['sweedler4.spec'])

    def test_library_objects_are_hopf_algebras(self):
        for name, document in self.library.items():
            if document.kind != specfile.HOPF:
                continue
            with self.subTest(name=name):
                self.assertTrue(check_hopf_axioms(specfile.to_hopf(document)).passed)

    def test_subalgebra_document(self):
        S = specfile.to_subspace(self.library['sweedler4-subalgebra-1-g.spec'], self.H)
        self.assertEqual(S, span_of_labels(self.H, ['1', 'g']))

    def test_quotient_document(self):
        Q = specfile.to_quotient(self.library['sweedler4-quotient-1-g.spec'], self.H)
        self.assertEqual(Q.dim, 2)
        self.assertTrue(Q.certificate.passed)

    def test_projection_must_be_surjective(self):
        text = 'field QQ\nkind quotient\nbasis q0 q1\nambient 1 g x gx\nmap projection\n  1 q0 1\n'
        with self.assertRaises(NotSurjective):
            specfile.to_quotient(specfile.parse(text), self.H)

    def test_ambient_must_match(self):
        text = 'field QQ\nkind subspace\nbasis v0\nambient 1 g x y\nmap inclusion\n  v0 1 1\n'
        with self.assertRaises(SpecFileError):
            specfile.to_subspace(specfile.parse(text), self.H)

    def test_field_must_match(self):
        text = 'field GF(7)\nkind subspace\nbasis v0\nambient 1 g x gx\nmap inclusion\n  v0 1 1\n'
        with self.assertRaises(DimensionMismatch):
            specfile.to_subspace(specfile.parse(text), self.H)
