"""Tests for integer polynomials and exact root counting."""

from fractions import Fraction

import pytest
import sympy

from cospec.charpoly import charpoly_exact, double_star_charpoly
from cospec.exceptions import InvalidParameterError, ZeroPolynomialError
from cospec.graph import is_bipartite
from cospec.polynomial import (
    IntPolynomial,
    certify_roots_above,
    count_distinct_roots_above,
    count_roots_above,
    eval_sign,
    numeric_roots,
    poly_add,
    poly_mul,
    poly_scale,
    poly_shift,
    poly_sub,
    square_free_decomposition,
    square_free_part,
    sturm_sequence,
)

X = IntPolynomial.x()


def _random_poly(rng, degree):
    return IntPolynomial(int(c) for c in rng.integers(-9, 10, size=degree + 1))


class TestIntPolynomial:
    """Test the polynomial value type."""

    def test_trailing_zeros_dropped(self):
        """Test normalisation and the zero polynomial."""
        assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
        zero = IntPolynomial([0, 0])
        assert zero.is_zero()
        assert zero.degree == -1
        assert str(zero) == "0"

    def test_non_integer_coefficient(self):
        """Test floats are rejected as coefficients."""
        with pytest.raises(InvalidParameterError):
            IntPolynomial([1, 0.5])

    def test_string_form(self):
        """Test the printed form lists terms by descending power."""
        assert str(IntPolynomial([0, 0, 0, -4, 0, 1])) == "x^5 - 4*x^3"
        assert str(IntPolynomial([1, 0, -1])) == "-x^2 + 1"
        assert str(IntPolynomial([4, 0, -6, 0, 0, 0, 0, 1]).shift(0)) == "x^7 - 6*x^2 + 4"

    def test_evaluation(self):
        """Test evaluation at integers and fractions."""
        p = X * X - 1
        assert p(0) == -1
        assert p(1) == 0
        assert p(Fraction(1, 2)) == Fraction(-3, 4)

    def test_valuation_and_content(self):
        """Test the lowest power and the coefficient gcd."""
        p = IntPolynomial([0, 0, 6, 0, -4])
        assert p.valuation() == 2
        assert p.content() == 2
        assert p.primitive().coeffs == (0, 0, -3, 0, 2)
        assert (-p).primitive() == p.primitive()
        with pytest.raises(ZeroPolynomialError):
            IntPolynomial().valuation()

    def test_parity_symmetry(self):
        """Test parity symmetry of bipartite charpolys."""
        assert IntPolynomial([0, 0, 0, -4, 0, 1]).has_parity_symmetry()
        assert not IntPolynomial([-2, -3, 0, 1]).has_parity_symmetry()

    def test_parity_symmetry_matches_bipartite(self, atlas):
        """Test a charpoly is parity-symmetric exactly for bipartite graphs."""
        for g in atlas:
            if g.n > 6:
                break
            assert charpoly_exact(g).has_parity_symmetry() == (is_bipartite(g) is not None)


class TestArithmetic:
    """Test ring operations."""

    def test_multiplication(self):
        """Test small products."""
        assert poly_mul(X * X - 1, X) == IntPolynomial([0, -1, 0, 1])
        c4 = IntPolynomial([0, 0, -4, 0, 1])
        assert poly_mul(c4, X) == IntPolynomial([0, 0, 0, -4, 0, 1])

    def test_shift(self):
        """Test multiplication by powers of x."""
        assert poly_shift(IntPolynomial([1]), 3) == IntPolynomial.monomial(3)
        assert poly_shift(IntPolynomial(), 4).is_zero()
        with pytest.raises(InvalidParameterError):
            poly_shift(X, -1)

    def test_power(self):
        """Test repeated multiplication."""
        assert (X + 1) ** 3 == IntPolynomial([1, 3, 3, 1])
        assert (X + 1) ** 0 == IntPolynomial([1])

    def test_ring_axioms(self, rng):
        """Test ring laws on random polynomials of degree up to 20."""
        for _ in range(50):
            p, q, r = (_random_poly(rng, int(rng.integers(0, 21))) for _ in range(3))
            assert poly_add(p, q) == poly_add(q, p)
            assert poly_mul(p, q) == poly_mul(q, p)
            assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))
            assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
            assert poly_sub(p, p).is_zero()
            assert poly_scale(p, 3) == p + p + p

    def test_integer_operands(self):
        """Test mixing polynomials with plain integers."""
        assert 2 * X == IntPolynomial([0, 2])
        assert 1 - X == IntPolynomial([1, -1])
        assert X + 3 == IntPolynomial([3, 1])


class TestSquareFree:
    """Test square-free reduction and Yun's decomposition."""

    def test_square_free_part_strips_zero_root(self):
        """Test a high power of x collapses to x."""
        assert square_free_part(IntPolynomial([0, 0, 0, -4, 0, 1])) == IntPolynomial([0, -4, 0, 1])
        assert square_free_part(IntPolynomial([0, 0, 0, 1])) == X

    def test_square_free_part_is_primitive(self):
        """Test the result has its content removed."""
        assert square_free_part(IntPolynomial([-4, 0, 2])) == IntPolynomial([-2, 0, 1])

    def test_decomposition(self):
        """Test (x+2)(x-1)^2 x^3 decomposes by multiplicity."""
        p = IntPolynomial([2, -3, 0, 1]).shift(3)
        assert square_free_decomposition(p) == [
            (IntPolynomial([2, 1]), 1),
            (IntPolynomial([-1, 1]), 2),
            (X, 3),
        ]

    def test_decomposition_reconstructs(self, rng):
        """Test the factors multiply back to a primitive polynomial."""
        for _ in range(20):
            base = _random_poly(rng, 3)
            if base.degree < 1:
                continue
            p = base * base * (X - 2)
            product = IntPolynomial([1])
            for factor, multiplicity in square_free_decomposition(p):
                product = product * factor ** multiplicity
            assert product.primitive() == p.primitive()

    def test_zero_rejected(self):
        """Test the zero polynomial has no square-free part."""
        with pytest.raises(ZeroPolynomialError):
            square_free_part(IntPolynomial())
        with pytest.raises(ZeroPolynomialError):
            square_free_decomposition(IntPolynomial())


class TestRootCounting:
    """Test Sturm-based root counting."""

    def test_sturm_sequence_ends_in_constant(self):
        """Test the last Sturm polynomial is a nonzero constant."""
        sequence = sturm_sequence(IntPolynomial([1, 0, -3, 0, 1]))
        assert sequence[-1].degree == 0

    def test_sturm_sequence_starts_at_input(self):
        """Test the chain begins with the square-free input, sign included."""
        p4 = IntPolynomial([1, 0, -3, 0, 1])
        assert sturm_sequence(p4)[0] == p4
        assert sturm_sequence(-p4)[0] == -p4
        assert sturm_sequence(p4)[1] == p4.derivative().primitive()

    def test_agrees_with_sympy_count_roots(self, rng):
        """Test distinct counts against sympy on random square-free polynomials."""
        x = sympy.Symbol("x")
        for _ in range(40):
            p = _random_poly(rng, int(rng.integers(1, 9)))
            if p.degree < 1:
                continue
            q = square_free_part(p)
            reference = sympy.Poly(list(reversed(q.coeffs)), x)
            for t in (-2, 0, Fraction(1, 3), 1):
                t = Fraction(t)
                if q(t) == 0:
                    continue
                expected = reference.count_roots(sympy.Rational(t.numerator, t.denominator))
                assert count_distinct_roots_above(q, t) == expected

    def test_path_on_four_vertices(self):
        """Test P4 has one eigenvalue above 1 and two above 0."""
        p4 = IntPolynomial([1, 0, -3, 0, 1])
        assert count_distinct_roots_above(p4, 1) == 1
        assert count_distinct_roots_above(p4, 0) == 2
        assert count_distinct_roots_above(p4, -2) == 4

    def test_root_at_threshold_is_excluded(self):
        """Test the count is strict when t is itself a root."""
        k14 = IntPolynomial([0, 0, 0, -4, 0, 1])
        assert count_distinct_roots_above(k14, 2) == 0
        assert count_distinct_roots_above(k14, 0) == 1
        assert count_distinct_roots_above(k14, -2) == 2

    def test_multiplicity(self):
        """Test counting with multiplicity and the inclusive flag."""
        k14 = IntPolynomial([0, 0, 0, -4, 0, 1])
        assert count_roots_above(k14, 0) == 1
        assert count_roots_above(k14, 0, inclusive=True) == 4
        assert count_roots_above(k14, -3) == 5

    def test_fraction_and_string_thresholds(self):
        """Test rational thresholds in several spellings."""
        p = X * X - 2
        assert count_distinct_roots_above(p, Fraction(7, 5)) == 1
        assert count_distinct_roots_above(p, "3/2") == 0
        with pytest.raises(InvalidParameterError):
            count_distinct_roots_above(p, "one")

    def test_scaling_invariance(self, rng):
        """Test positive scaling never changes a count."""
        for _ in range(30):
            p = _random_poly(rng, int(rng.integers(1, 9)))
            if p.is_zero():
                continue
            for t in (-1, 0, Fraction(1, 3), 2):
                assert count_distinct_roots_above(poly_scale(p, 3), t) == (
                    count_distinct_roots_above(p, t)
                )

    def test_matches_numeric_roots(self, atlas):
        """Test exact counts agree with bisected roots on every charpoly up to 7 vertices."""
        for g in atlas[1:]:
            phi = charpoly_exact(g)
            distinct = sorted(set(numeric_roots(phi)))
            for t in (-1, 0, 1, Fraction(3, 2)):
                if any(abs(r - t) < 1e-6 for r in distinct):
                    continue
                expected = sum(1 for r in distinct if r > t)
                assert count_distinct_roots_above(phi, t) == expected

    @pytest.mark.parametrize("n", list(range(1, 1001, 37)) + [1000])
    def test_double_star_certificate(self, n):
        """Test P2(1,n) has exactly one eigenvalue above 1 (and it is never 1)."""
        phi = double_star_charpoly(1, n)
        assert eval_sign(phi, 1) != 0
        certificate = certify_roots_above(phi, 1)
        assert certificate.distinct_above == 1
        assert certificate.threshold == 1

    def test_full_double_star_certificate_sweep(self):
        """Test the one-eigenvalue-above-1 certificate for every n up to 1000."""
        for n in range(1, 1001):
            assert count_distinct_roots_above(double_star_charpoly(1, n), 1) == 1

    def test_zero_rejected(self):
        """Test root counting rejects the zero polynomial."""
        with pytest.raises(ZeroPolynomialError):
            count_distinct_roots_above(IntPolynomial(), 0)


class TestNumericRoots:
    """Test display roots."""

    def test_integer_roots_are_exact(self):
        """Test integer eigenvalues come back exactly."""
        assert numeric_roots(IntPolynomial([0, 0, 0, -4, 0, 1])) == [-2.0, 0.0, 0.0, 0.0, 2.0]

    def test_irrational_roots(self, tolerance):
        """Test roots of x^2 - 2 to high precision."""
        low, high = numeric_roots(X * X - 2)
        assert abs(high - 2 ** 0.5) < tolerance
        assert abs(low + 2 ** 0.5) < tolerance

    def test_eval_sign(self):
        """Test exact signs, including at a root."""
        p4 = IntPolynomial([1, 0, -3, 0, 1])
        assert eval_sign(p4, 1) == -1
        assert eval_sign(p4, 2) == 1
        assert eval_sign(X * X - 1, 1) == 0
