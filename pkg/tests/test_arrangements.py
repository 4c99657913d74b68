import unittest

from arrangements import (Arrangement, ArrangementError, build_lattice, characteristic_polynomial, csm_complement,
                          csm_divisor, euler_characteristic_complement, factor_over_integers, integer_roots,
                          mobius_sum_rule_holds, mobius_values, poincare_polynomial)
from polynomials import parse_polynomial

COORDINATES_P2 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]

ARRANGEMENTS = {
    'boolean_p1': (1, [[1, 0], [0, 1]]),
    'boolean_p2': (2, COORDINATES_P2),
    'concurrent_lines_p2': (2, [[1, 0, 0], [0, 1, 0], [1, 1, 0]]),
    'supersolvable_p2': (2, COORDINATES_P2 + [[1, 1, 0]]),
    'braid_p2': (2, COORDINATES_P2 + [[1, -1, 0], [1, 0, -1], [0, 1, -1]]),
    'deleted_braid_p2': (2, COORDINATES_P2 + [[1, -1, 0], [1, 0, -1]]),
    'pencil_four_lines_p2': (2, [[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]]),
    'generic_four_planes_p2': (2, COORDINATES_P2 + [[1, 1, 1]]),
    'single_hyperplane_p3': (3, [[1, 0, 0, 0]]),
    'empty_p2': (2, []),
}

EXPECTED_CHI = {
    'boolean_p1': [1, -2, 1],
    'boolean_p2': [1, -3, 3, -1],
    'concurrent_lines_p2': [1, -3, 2, 0],
    'supersolvable_p2': [1, -4, 5, -2],
    'braid_p2': [1, -6, 11, -6],
    'deleted_braid_p2': [1, -5, 8, -4],
    'pencil_four_lines_p2': [1, -4, 3, 0],
    'generic_four_planes_p2': [1, -4, 6, -3],
    'single_hyperplane_p3': [1, -1, 0, 0, 0],
    'empty_p2': [1, 0, 0, 0],
}

EXPECTED_CSM = {
    'boolean_p1': [1, 0],
    'boolean_p2': [1, 0, 0],
    'concurrent_lines_p2': [1, 0, -1],
    'supersolvable_p2': [1, -1, 0],
    'braid_p2': [1, -3, 2],
    'deleted_braid_p2': [1, -2, 1],
    'pencil_four_lines_p2': [1, -1, -2],
    'generic_four_planes_p2': [1, -1, 1],
    'single_hyperplane_p3': [1, 3, 3, 1],
    'empty_p2': [1, 3, 3],
}


def make(name):
    n, rows = ARRANGEMENTS[name]
    return Arrangement(n, tuple(tuple(r) for r in rows), name=name)


class TestArrangement(unittest.TestCase):
    """Test cases for Arrangement validation and helpers"""

    def test_defining_polynomial(self):
        """Q is the product of the linear forms"""
        A = make('concurrent_lines_p2')
        self.assertEqual(A.defining_polynomial(), parse_polynomial("x*y*(x+y)", ('x', 'y', 'z')))
        self.assertTrue(make('empty_p2').defining_polynomial().is_constant())

    def test_rejects_proportional_hyperplanes(self):
        """Repeated hyperplanes make the divisor non-reduced"""
        with self.assertRaises(ArrangementError):
            Arrangement(1, ((1, 1), (2, 2)))

    def test_rejects_bad_rows(self):
        """Wrong length and zero rows are errors"""
        with self.assertRaises(ArrangementError):
            Arrangement(2, ((1, 0),))
        with self.assertRaises(ArrangementError):
            Arrangement(2, ((0, 0, 0),))
        with self.assertRaises(ArrangementError):
            Arrangement(0, ())

    def test_from_dict_accepts_rational_strings(self):
        """Coefficients may be given as strings like '1/2'"""
        A = Arrangement.from_dict({'n': 1, 'hyperplanes': [["1/2", "1"], ["0", "3"]]})
        self.assertEqual(len(A), 2)
        self.assertEqual(Arrangement.from_dict(A.to_dict()), A)
        with self.assertRaises(ArrangementError):
            Arrangement.from_dict({'hyperplanes': []})

    def test_essential(self):
        """A pencil of lines through a point of P^2 is not essential"""
        self.assertFalse(make('pencil_four_lines_p2').is_essential())
        self.assertTrue(make('braid_p2').is_essential())


class TestLattice(unittest.TestCase):
    """Test cases for the intersection lattice and Möbius function"""

    def test_braid_lattice(self):
        """Braid arrangement: 6 lines, 4 triple points, 3 double points"""
        lattice = build_lattice(make('braid_p2'))
        self.assertEqual(len(lattice.flats_of_rank(1)), 6)
        points = lattice.flats_of_rank(2)
        self.assertEqual(sorted(len(p.closed_set) for p in points), [2, 2, 2, 3, 3, 3, 3])
        self.assertEqual(len(lattice.flats_of_rank(3)), 1)

    def test_mobius_sum_rule(self):
        """Σ_{y <= x} μ(0, y) = 0 on every fixture"""
        for name in ARRANGEMENTS:
            self.assertTrue(mobius_sum_rule_holds(build_lattice(make(name))), name)

    def test_triple_point_mobius(self):
        """μ of a point where three lines meet is 2"""
        lattice = build_lattice(make('concurrent_lines_p2'))
        point = lattice.flats_of_rank(2)[0]
        self.assertEqual(lattice.mobius_of(point), 2)

    def test_mobius_values_by_recursion(self):
        """mobius_values recomputes the stored Möbius function of the braid lattice"""
        lattice = build_lattice(make('braid_p2'))
        values = mobius_values(lattice)
        self.assertEqual(values, lattice.mobius)
        self.assertEqual(sorted(values[p.closed_set] for p in lattice.flats_of_rank(2)), [1, 1, 1, 2, 2, 2, 2])


class TestInvariants(unittest.TestCase):
    """Test cases for characteristic polynomials and CSM classes"""

    def test_characteristic_polynomials(self):
        """χ(t) on every fixture"""
        for name, expected in EXPECTED_CHI.items():
            self.assertEqual(characteristic_polynomial(make(name)).to_list(), expected, name)

    def test_chi_vanishes_at_one(self):
        """χ(1) = 0 for nonempty central arrangements"""
        for name in ARRANGEMENTS:
            if name != 'empty_p2':
                self.assertEqual(characteristic_polynomial(make(name)).evaluate(1), 0, name)

    def test_csm_complement(self):
        """c_SM(1_U) on every fixture"""
        for name, expected in EXPECTED_CSM.items():
            self.assertEqual(csm_complement(make(name)).to_list(), expected, name)

    def test_euler_characteristic_matches_degree_zero_part(self):
        """The [P^0] coefficient of c_SM(1_U) is χ(U)"""
        for name in ARRANGEMENTS:
            A = make(name)
            self.assertEqual(csm_complement(A).degree_zero, euler_characteristic_complement(A), name)
        self.assertEqual(euler_characteristic_complement(make('braid_p2')), 2)

    def test_csm_divisor_is_complementary(self):
        """c_SM(1_D) + c_SM(1_U) = c(TP^n)"""
        A = make('braid_p2')
        self.assertEqual((csm_divisor(A) + csm_complement(A)).to_list(), [1, 3, 3])

    def test_text_and_poincare(self):
        """Printing and the Poincaré polynomial of the braid arrangement"""
        A = make('braid_p2')
        self.assertEqual(characteristic_polynomial(A).to_text(), "t^3 - 6t^2 + 11t - 6")
        self.assertEqual(poincare_polynomial(A), (1, 6, 11, 6))

    def test_integer_factorization(self):
        """Integer roots split off; generic four lines leave a quadratic"""
        self.assertEqual(integer_roots(characteristic_polynomial(make('braid_p2'))), (1, 2, 3))
        roots, residual = factor_over_integers(characteristic_polynomial(make('generic_four_planes_p2')))
        self.assertEqual(roots, (1,))
        self.assertEqual(residual, (1, -3, 3))
        self.assertEqual(integer_roots(characteristic_polynomial(make('pencil_four_lines_p2'))), (0, 1, 3))


if __name__ == '__main__':
    unittest.main()
