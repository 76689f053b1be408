"""Exact integer polynomials and real-root counting.

Every spectral decision in cospec goes through this module, so nothing here
uses floating point except ``numeric_roots``, which is display-only.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple, Union

import sympy as sp

from cospec.exceptions import InvalidParameterError, ZeroPolynomialError

Rational = Union[int, Fraction]


class IntPolynomial:
    """
    Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[k]`` is the coefficient of ``x**k``; trailing zeros are dropped,
    so the zero polynomial has an empty coefficient tuple and degree -1.

    Examples:
        >>> p = IntPolynomial([-1, 0, 1])
        >>> str(p * IntPolynomial.x())
        'x^3 - x'
        >>> p(1)
        0
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        """
        Initialize from coefficients in ascending powers.

        Args:
            coeffs: Integer coefficients, ``coeffs[k]`` for ``x**k``

        Raises:
            InvalidParameterError: If a coefficient is not an integer
        """
        values = []
        for c in coeffs:
            if not isinstance(c, numbers.Integral):
                raise InvalidParameterError("coefficient", c, "must be an integer")
            values.append(int(c))
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: Tuple[int, ...] = tuple(values)

    @classmethod
    def monomial(cls, power: int, coefficient: int = 1) -> IntPolynomial:
        """``coefficient * x**power``."""
        return cls([0] * power + [coefficient])

    @classmethod
    def x(cls) -> IntPolynomial:
        """The polynomial ``x``."""
        return cls.monomial(1)

    @classmethod
    def constant(cls, value: int) -> IntPolynomial:
        """A constant polynomial."""
        return cls([value])

    @property
    def coeffs(self) -> Tuple[int, ...]:
        """Coefficients in ascending powers."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """Highest power with a nonzero coefficient; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def leading(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else 0

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, power: int) -> int:
        """Coefficient of ``x**power`` (0 outside the stored range)."""
        return self._coeffs[power] if 0 <= power < len(self._coeffs) else 0

    def valuation(self) -> int:
        """Lowest power with a nonzero coefficient."""
        if self.is_zero():
            raise ZeroPolynomialError("valuation")
        return next(k for k, c in enumerate(self._coeffs) if c)

    def content(self) -> int:
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        return reduce(gcd, self._coeffs, 0)

    def primitive(self) -> IntPolynomial:
        """Divide out the content and make the leading coefficient positive."""
        content = self.content()
        if content == 0:
            return self
        if self.leading < 0:
            content = -content
        return IntPolynomial(c // content for c in self._coeffs)

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(k * c for k, c in enumerate(self._coeffs) if k)

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if k < 0:
            raise InvalidParameterError("k", k, "must be >= 0")
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self._coeffs)

    def has_parity_symmetry(self) -> bool:
        """
        True if every nonzero term has a power of the same parity as the degree.

        For a characteristic polynomial this is exactly spectral symmetry about
        zero, i.e. the graph is bipartite.
        """
        d = self.degree
        return all(c == 0 for k, c in enumerate(self._coeffs) if (d - k) % 2)

    def __call__(self, t: Rational) -> Rational:
        """Exact evaluation by Horner's rule."""
        value: Rational = 0
        for c in reversed(self._coeffs):
            value = value * t + c
        return value

    def __add__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        other = _coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return IntPolynomial(self.coefficient(k) + other.coefficient(k) for k in range(size))

    def __radd__(self, other: int) -> IntPolynomial:
        return self.__add__(other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self._coeffs)

    def __sub__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: Union[IntPolynomial, int]) -> IntPolynomial:
        if isinstance(other, numbers.Integral):
            return IntPolynomial(c * int(other) for c in self._coeffs)
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        product = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    product[i + j] += a * b
        return IntPolynomial(product)

    def __rmul__(self, other: int) -> IntPolynomial:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> IntPolynomial:
        if exponent < 0:
            raise InvalidParameterError("exponent", exponent, "must be >= 0")
        result = IntPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, numbers.Integral):
            return self._coeffs == IntPolynomial.constant(int(other))._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        """Render in descending powers, e.g. ``x^7 - 6*x^5 + 4*x^3``."""
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "x" if k == 1 else f"x^{k}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def _coerce(value: Union[IntPolynomial, int]) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, numbers.Integral):
        return IntPolynomial.constant(int(value))
    raise InvalidParameterError("operand", value, "must be an IntPolynomial or an integer")


def poly_add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p + q


def poly_sub(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p - q


def poly_mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return p * q


def poly_scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return p * c


def poly_shift(p: IntPolynomial, k: int) -> IntPolynomial:
    """Multiply ``p`` by ``x**k``."""
    return p.shift(k)


# sympy backs the rational algebra; results come back as IntPolynomials.

_X = sp.Symbol("x")


def _to_sympy(p: IntPolynomial, domain=sp.ZZ) -> sp.Poly:
    if p.is_zero():
        return sp.Poly(0, _X, domain=domain)
    return sp.Poly(list(reversed(p.coeffs)), _X, domain=domain)


def _from_sympy(poly: sp.Poly, keep_sign: bool = False) -> IntPolynomial:
    """Clear denominators and content; positive scaling only when ``keep_sign``."""
    if poly.is_zero:
        return IntPolynomial()
    _, cleared = poly.clear_denoms(convert=True)
    ints = IntPolynomial(int(c) for c in reversed(cleared.all_coeffs()))
    if not keep_sign:
        return ints.primitive()
    content = ints.content()
    return IntPolynomial(c // content for c in ints.coeffs)


def _sympy_rational(t: Fraction) -> sp.Rational:
    return sp.Rational(t.numerator, t.denominator)


def _as_python_fraction(value) -> Fraction:
    r = sp.Rational(value)
    return Fraction(int(r.p), int(r.q))


def _strip_zero_root(p: IntPolynomial) -> Tuple[IntPolynomial, int]:
    """Split ``p = x**v * q`` with ``q(0) != 0``."""
    v = p.valuation()
    return IntPolynomial(p.coeffs[v:]), v


def square_free_part(p: IntPolynomial) -> IntPolynomial:
    """
    ``p / gcd(p, p')`` made primitive: same distinct roots, all simple.

    Powers of ``x`` are split off first, so charpolys with a large zero
    eigenspace stay cheap.

    Raises:
        ZeroPolynomialError: If ``p`` is zero

    Examples:
        >>> str(square_free_part(IntPolynomial([0, 0, 0, -4, 0, 1])))
        'x^3 - 4*x'
    """
    if p.is_zero():
        raise ZeroPolynomialError("square_free_part")
    q, v = _strip_zero_root(p)
    result = _from_sympy(_to_sympy(q).sqf_part()) if q.degree > 0 else IntPolynomial([1])
    return result.shift(1) if v else result


def square_free_decomposition(p: IntPolynomial) -> List[Tuple[IntPolynomial, int]]:
    """
    Square-free decomposition ``p = c * prod(f_i ** i)`` with coprime ``f_i``.

    Returns:
        ``(f_i, i)`` pairs with primitive nonconstant ``f_i``, ordered by ``i``;
        a power of ``x`` dividing ``p`` is reported as ``(x, v)``

    Raises:
        ZeroPolynomialError: If ``p`` is zero
    """
    if p.is_zero():
        raise ZeroPolynomialError("square_free_decomposition")
    q, v = _strip_zero_root(p)
    factors: List[Tuple[IntPolynomial, int]] = []
    if q.degree > 0:
        _, pieces = _to_sympy(q).sqf_list()
        factors = [(_from_sympy(f), int(k)) for f, k in pieces]
    if v:
        factors.append((IntPolynomial.x(), v))
        factors.sort(key=lambda item: item[1])
    return factors


def sturm_sequence(p: IntPolynomial) -> List[IntPolynomial]:
    """
    Sturm sequence of the square-free part of ``p``.

    The chain is computed over Q and every member is rescaled by a positive
    rational to a content-free integer polynomial, so sign patterns match
    the chain that starts at ``p`` itself.
    """
    if p.is_zero():
        raise ZeroPolynomialError("sturm_sequence")
    chain = _to_sympy(p).sturm()
    flip = -1 if (chain[0].LC() < 0) != (p.leading < 0) else 1
    return [_from_sympy(s, keep_sign=True) * flip for s in chain if not s.is_zero]


def _sign(value: Rational) -> int:
    return (value > 0) - (value < 0)


def _variations(signs: Iterable[int]) -> int:
    count = 0
    previous = 0
    for s in signs:
        if s == 0:
            continue
        if previous and s != previous:
            count += 1
        previous = s
    return count


def _variations_at(sequence: Sequence[IntPolynomial], t: Fraction) -> int:
    return _variations(_sign(s(t)) for s in sequence)


def _variations_at_infinity(sequence: Sequence[IntPolynomial]) -> int:
    return _variations(_sign(s.leading) for s in sequence)


def _as_fraction(t: Union[Rational, float, str]) -> Fraction:
    try:
        return Fraction(t)
    except (TypeError, ValueError):
        raise InvalidParameterError("threshold", t, "must be a rational number") from None


def eval_sign(p: IntPolynomial, t: Union[Rational, float, str]) -> int:
    """
    Exact sign of ``p(t)`` as -1, 0 or +1.

    Examples:
        >>> eval_sign(IntPolynomial([-1, 0, 1]), 0)
        -1
    """
    return _sign(p(_as_fraction(t)))


def count_distinct_roots_above(p: IntPolynomial, t: Union[Rational, float, str]) -> int:
    """
    Exact number of distinct real roots of ``p`` strictly greater than ``t``.

    Uses the Sturm sequence of the square-free part; a root exactly at ``t``
    is divided out first so the count is strict.

    Raises:
        ZeroPolynomialError: If ``p`` is zero

    Examples:
        >>> count_distinct_roots_above(IntPolynomial([1, 0, -3, 0, 1]), 1)
        1
    """
    if p.is_zero():
        raise ZeroPolynomialError("count_distinct_roots_above")
    threshold = _as_fraction(t)
    q = square_free_part(p)
    if q(threshold) == 0:
        linear = sp.Poly([1, -_sympy_rational(threshold)], _X, domain=sp.QQ)
        q = _from_sympy(_to_sympy(q, sp.QQ).exquo(linear))
    if q.degree < 1:
        return 0
    sequence = sturm_sequence(q)
    return _variations_at(sequence, threshold) - _variations_at_infinity(sequence)


def count_roots_above(
    p: IntPolynomial, t: Union[Rational, float, str], inclusive: bool = False
) -> int:
    """
    Real roots of ``p`` above ``t`` counted with multiplicity.

    Args:
        p: Nonzero polynomial
        t: Rational threshold
        inclusive: Also count roots equal to ``t``
    """
    threshold = _as_fraction(t)
    total = 0
    for factor, multiplicity in square_free_decomposition(p):
        total += multiplicity * count_distinct_roots_above(factor, threshold)
        if inclusive and factor(threshold) == 0:
            total += multiplicity
    return total


@dataclass(frozen=True)
class RootCount:
    """Certificate: ``distinct_above`` distinct real roots lie strictly above ``threshold``."""

    distinct_above: int
    threshold: Fraction


def certify_roots_above(p: IntPolynomial, t: Union[Rational, float, str]) -> RootCount:
    """Wrap ``count_distinct_roots_above`` in a RootCount record."""
    threshold = _as_fraction(t)
    return RootCount(count_distinct_roots_above(p, threshold), threshold)


def _midpoint(p: IntPolynomial, lo: Fraction, hi: Fraction) -> float:
    # rational eigenvalues of graphs are integers; report them exactly
    k = math.floor(hi)
    if lo <= k and p(k) == 0:
        return float(k)
    return float((lo + hi) / 2)


def numeric_roots(p: IntPolynomial, tolerance: float = 1e-10) -> List[float]:
    """
    All real roots of ``p`` with multiplicity, ascending, for display.

    Each root is isolated in a rational interval of width at most
    ``tolerance`` and reported as its midpoint.

    Raises:
        ZeroPolynomialError: If ``p`` is zero

    Examples:
        >>> numeric_roots(IntPolynomial([0, 0, 0, -4, 0, 1]))
        [-2.0, 0.0, 0.0, 0.0, 2.0]
    """
    if p.is_zero():
        raise ZeroPolynomialError("numeric_roots")
    q, v = _strip_zero_root(p)
    roots = [0.0] * v
    if q.degree > 0:
        eps = _sympy_rational(Fraction(tolerance))
        for (lo, hi), multiplicity in _to_sympy(q).intervals(eps=eps):
            root = _midpoint(q, _as_python_fraction(lo), _as_python_fraction(hi))
            roots.extend([root] * int(multiplicity))
    return sorted(roots)
