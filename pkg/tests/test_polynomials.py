import random
import unittest
from fractions import Fraction

from polynomials import (GREVLEX, MonomialOrder, Polynomial, PolynomialSyntaxError, RingMismatchError,
                         default_variables, format_polynomial, leading_term, parse_polynomial, parse_rational,
                         partial_derivative, poly_add, poly_mul)

XY = ('x', 'y')
XYZ = ('x', 'y', 'z')


def P(text, varnames=XY):
    return parse_polynomial(text, varnames)


class TestParsePolynomial(unittest.TestCase):
    """Test cases for parse_polynomial"""

    def test_parses_cusp(self):
        """x^2 - y^3 has two terms with the expected coefficients"""
        h = P("x^2 - y^3")
        self.assertEqual(h.terms, {(2, 0): 1, (0, 3): -1})

    def test_parses_product_of_linear_forms(self):
        """Parenthesized products expand"""
        self.assertEqual(P("x*y*(x+y)"), P("x^2*y + x*y^2"))

    def test_unary_minus_and_rational_literal(self):
        """Leading sign and p/q literals are accepted"""
        self.assertEqual(P("-1/2*x + 3").terms, {(1, 0): Fraction(-1, 2), (0, 0): 3})

    def test_implicit_multiplication_is_rejected(self):
        """'2x' must be written '2*x'"""
        with self.assertRaises(PolynomialSyntaxError) as ctx:
            P("2x")
        self.assertEqual(ctx.exception.position, 1)

    def test_trailing_operator_reports_end_of_input(self):
        """'x + ' fails at the end of the text"""
        with self.assertRaises(PolynomialSyntaxError) as ctx:
            P("x + ")
        self.assertIn("end of input", str(ctx.exception))

    def test_unknown_variable(self):
        """Variables outside the ring are rejected"""
        with self.assertRaises(PolynomialSyntaxError):
            P("x + q")

    def test_exponent_must_be_positive_integer(self):
        """x^0 and x^y are syntax errors"""
        for text in ("x^0", "x^y"):
            with self.assertRaises(PolynomialSyntaxError):
                P(text)

    def test_division_only_in_literals(self):
        """x/2 is not a polynomial expression"""
        with self.assertRaises(PolynomialSyntaxError):
            P("x/2")

    def test_canonical_output_reparses(self):
        """format_polynomial output parses back to the same polynomial"""
        rng = random.Random(7)
        for _ in range(50):
            terms = {(rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 2)):
                     Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(0, 5))}
            p = Polynomial(terms, XYZ)
            self.assertEqual(parse_polynomial(format_polynomial(p), XYZ), p)


class TestFormatPolynomial(unittest.TestCase):
    """Test cases for the canonical printer"""

    def test_grevlex_descending(self):
        """Higher total degree first"""
        self.assertEqual(str(P("x^2 - y^3")), "-y^3 + x^2")

    def test_rational_coefficient(self):
        """Fractions print as p/q"""
        self.assertEqual(str(P("1/2*x")), "1/2*x")

    def test_zero(self):
        """The zero polynomial prints as 0"""
        self.assertEqual(str(Polynomial.zero(XY)), "0")


class TestArithmetic(unittest.TestCase):
    """Test cases for ring operations"""

    def test_partial_derivatives(self):
        """∂x(x^2 - y^3) = 2x and ∂y = -3y^2"""
        h = P("x^2 - y^3")
        self.assertEqual(h.partial(0), P("2*x"))
        self.assertEqual(h.partial(1), P("-3*y^2"))

    def test_partial_out_of_range(self):
        """Asking for a variable index beyond the ring fails"""
        with self.assertRaises(IndexError):
            P("x").partial(2)

    def test_ring_mismatch(self):
        """Adding polynomials over different variable lists fails"""
        with self.assertRaises(RingMismatchError):
            P("x") + parse_polynomial("x", XYZ)

    def test_functional_forms(self):
        """poly_add, poly_mul, partial_derivative and leading_term agree with the methods"""
        a, b = P("x + y"), P("x - y")
        self.assertEqual(poly_add(a, b), P("2*x"))
        self.assertEqual(poly_mul(a, b), P("x^2 - y^2"))
        self.assertEqual(partial_derivative(P("x^2*y"), 0), P("2*x*y"))
        self.assertEqual(leading_term(P("3*x^2 + y^3"), MonomialOrder("lex")), ((2, 0), 3))
        with self.assertRaises(RingMismatchError):
            poly_mul(a, parse_polynomial("x", XYZ))
        with self.assertRaises(ValueError):
            leading_term(Polynomial.zero(XY))

    def test_ring_axioms_on_random_samples(self):
        """Distributivity and commutativity hold exactly"""
        rng = random.Random(11)

        def sample():
            return Polynomial({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(3)}, XY)

        for _ in range(30):
            a, b, c = sample(), sample(), sample()
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual((a - a), Polynomial.zero(XY))

    def test_power(self):
        """(x + y)^3 expands binomially"""
        self.assertEqual(P("x + y") ** 3, P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"))

    def test_homogeneity(self):
        """Cusp is not homogeneous, a product of linear forms is"""
        self.assertFalse(P("x^2 - y^3").is_homogeneous())
        self.assertTrue(P("x*y*(x-y)").is_homogeneous())
        self.assertEqual(P("x*y*(x-y)").total_degree(), 3)
        self.assertEqual(Polynomial.zero(XY).total_degree(), -1)

    def test_primitive(self):
        """primitive() clears denominators and makes the leading coefficient positive"""
        self.assertEqual(P("-1/2*x^2 + 3/4*y").primitive(), P("2*x^2 - 3*y"))

    def test_in_ring_and_evaluate(self):
        """Re-embedding keeps values; evaluation is exact"""
        p = P("x^2 - y^3")
        q = p.in_ring(('t', 'y', 'x'))
        point = {'x': Fraction(3), 'y': Fraction(2), 't': 5}
        self.assertEqual(q.evaluate(point), p.evaluate(point))
        self.assertEqual(p.evaluate(point), 1)

    def test_substitute(self):
        """Replacing y by x in x - y gives zero"""
        p = P("x - y")
        self.assertTrue(p.substitute(1, P("x")).is_zero())


class TestMonomialOrders(unittest.TestCase):
    """Test cases for MonomialOrder"""

    def test_leading_terms(self):
        """Leading monomial of x*y^2 + x^2 depends on the order"""
        p = P("x*y^2 + x^2")
        self.assertEqual(p.leading_monomial(MonomialOrder('lex')), (2, 0))
        self.assertEqual(p.leading_monomial(GREVLEX), (1, 2))

    def test_grevlex_tie_break(self):
        """In grevlex, x*z < y^2 because the last variable is penalized"""
        self.assertGreater(GREVLEX.key((0, 2, 0)), GREVLEX.key((1, 0, 1)))

    def test_from_name(self):
        """Block orders are named block:k"""
        order = MonomialOrder.from_name('block:2')
        self.assertEqual((order.kind, order.elim_count), ('block', 2))
        with self.assertRaises(ValueError):
            MonomialOrder.from_name('weird')


class TestHelpers(unittest.TestCase):
    """Test cases for small helpers"""

    def test_parse_rational(self):
        """Rationals are reduced"""
        self.assertEqual(parse_rational(" -6/4 "), Fraction(-3, 2))
        with self.assertRaises(ValueError):
            parse_rational("1/0")
        with self.assertRaises(ValueError):
            parse_rational("abc")

    def test_default_variables(self):
        """Letters up to four variables, indexed names beyond"""
        self.assertEqual(default_variables(3), ('x', 'y', 'z'))
        self.assertEqual(default_variables(5), ('x0', 'x1', 'x2', 'x3', 'x4'))


if __name__ == '__main__':
    unittest.main()
