#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact sparse multivariate polynomials over the rationals.

A Polynomial is an immutable map from exponent tuples to Fractions together
with the ordered list of variable names it lives over. Variables are
positional; the names are metadata used for parsing, printing and for
re-embedding a polynomial into a larger ring.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from constants import POLYNOMIAL_TOKEN_PATTERN, RATIONAL_PATTERN

logger = logging.getLogger(__name__)

MONOMIAL_ORDER_KINDS = ('lex', 'grlex', 'grevlex', 'block')


class RingMismatchError(ValueError):
    """Raised when two polynomials over different variable lists are combined."""


class PolynomialSyntaxError(ValueError):
    """Raised by parse_polynomial; ``position`` is the character offset of the problem."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _grevlex_key(exps):
    return (sum(exps), tuple(-e for e in reversed(exps)))


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order. ``key`` maps an exponent tuple to a sort key; larger keys are larger monomials.

    ``block`` compares the first ``elim_count`` variables by grevlex and breaks
    ties with grevlex on the remaining ones, so it eliminates the first block.
    """
    kind: str = 'grevlex'
    elim_count: int = 0

    def __post_init__(self):
        if self.kind not in MONOMIAL_ORDER_KINDS:
            raise ValueError(f"Unknown monomial order '{self.kind}'. Use one of {', '.join(MONOMIAL_ORDER_KINDS)}")
        if self.kind == 'block' and self.elim_count < 0:
            raise ValueError("Block order needs a non-negative elimination count")

    def key(self, exps):
        if self.kind == 'grevlex':
            return _grevlex_key(exps)
        if self.kind == 'lex':
            return tuple(exps)
        if self.kind == 'grlex':
            return (sum(exps), tuple(exps))
        k = self.elim_count
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))

    @classmethod
    def from_name(cls, name):
        """Build an order from text such as 'lex', 'grevlex' or 'block:2'."""
        if name.startswith('block'):
            _, _, count = name.partition(':')
            return cls('block', int(count or 0))
        return cls(name)

    def __str__(self):
        return f"block:{self.elim_count}" if self.kind == 'block' else self.kind


GREVLEX = MonomialOrder('grevlex')


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot use {value!r} as a rational coefficient")


class Polynomial:
    """Immutable sparse polynomial. ``terms`` must not be mutated by callers."""

    __slots__ = ('terms', 'varnames', '_hash')

    def __init__(self, terms, varnames):
        varnames = tuple(varnames)
        if len(set(varnames)) != len(varnames):
            raise ValueError(f"Duplicate variable names in {varnames}")
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(varnames):
                raise ValueError(f"Monomial {exps} does not match variables {varnames}")
            if any(e < 0 for e in exps):
                raise ValueError(f"Negative exponent in {exps}")
            coeff = _coerce(coeff)
            if coeff:
                clean[exps] = clean.get(exps, 0) + coeff
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean
        self.varnames = varnames
        self._hash = None

    @classmethod
    def _raw(cls, terms, varnames):
        # terms already clean: tuple keys, nonzero Fractions
        p = cls.__new__(cls)
        p.terms = terms
        p.varnames = varnames
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, varnames):
        return cls._raw({}, tuple(varnames))

    @classmethod
    def constant(cls, value, varnames):
        varnames = tuple(varnames)
        return cls({(0,) * len(varnames): value}, varnames)

    @classmethod
    def variable(cls, name, varnames):
        varnames = tuple(varnames)
        if name not in varnames:
            raise ValueError(f"Unknown variable '{name}' for ring {varnames}")
        exps = tuple(1 if v == name else 0 for v in varnames)
        return cls._raw({exps: Fraction(1)}, varnames)

    @classmethod
    def monomial(cls, exps, coeff, varnames):
        return cls({tuple(exps): coeff}, varnames)

    @classmethod
    def linear_form(cls, coefficients, varnames):
        """Σ a_i x_i for a coefficient vector matched positionally to ``varnames``."""
        varnames = tuple(varnames)
        n = len(varnames)
        terms = {}
        for i, a in enumerate(coefficients):
            exps = tuple(1 if j == i else 0 for j in range(n))
            terms[exps] = a
        return cls(terms, varnames)

    # basic queries

    @property
    def nvars(self):
        return len(self.varnames)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def total_degree(self):
        """Maximal total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self):
        return min((sum(e) for e in self.terms), default=-1)

    def degree_in(self, index):
        return max((e[index] for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, degree):
        return Polynomial._raw({e: c for e, c in self.terms.items() if sum(e) == degree}, self.varnames)

    def support_variables(self):
        return [v for i, v in enumerate(self.varnames) if any(e[i] for e in self.terms)]

    def sorted_terms(self, order=GREVLEX):
        """Terms in descending order."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_term(self, order=GREVLEX):
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def leading_monomial(self, order=GREVLEX):
        return self.leading_term(order)[0]

    def leading_coefficient(self, order=GREVLEX):
        return self.leading_term(order)[1]

    # arithmetic

    def _check_ring(self, other):
        if self.varnames != other.varnames:
            raise RingMismatchError(f"Variable lists differ: {self.varnames} vs {other.varnames}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check_ring(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.varnames)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = terms.get(exps, 0) + coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Polynomial._raw(terms, self.varnames)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self.terms.items()}, self.varnames)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor):
        factor = _coerce(factor)
        if not factor:
            return Polynomial.zero(self.varnames)
        return Polynomial._raw({e: c * factor for e, c in self.terms.items()}, self.varnames)

    def mul_term(self, exps, coeff):
        """Multiply by the single term coeff·x^exps."""
        coeff = _coerce(coeff)
        if not coeff:
            return Polynomial.zero(self.varnames)
        return Polynomial._raw(
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()},
            self.varnames)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exps, 0) + c1 * c2
                if value:
                    terms[exps] = value
                else:
                    terms.pop(exps, None)
        return Polynomial._raw(terms, self.varnames)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Polynomial powers need a non-negative integer exponent")
        result = Polynomial.constant(1, self.varnames)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def partial(self, index):
        if not 0 <= index < self.nvars:
            raise IndexError(f"Variable index {index} out of range for {self.nvars} variables")
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[index]:
                lowered = exps[:index] + (exps[index] - 1,) + exps[index + 1:]
                terms[lowered] = coeff * exps[index]
        return Polynomial._raw(terms, self.varnames)

    def monic(self, order=GREVLEX):
        if not self.terms:
            return self
        return self.scale(1 / self.leading_coefficient(order))

    def primitive(self, order=GREVLEX):
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        denominator = 1
        for c in self.terms.values():
            denominator = lcm(denominator, c.denominator)
        numerator = 0
        for c in self.terms.values():
            numerator = gcd(numerator, (c * denominator).numerator)
        factor = Fraction(denominator, numerator)
        if self.leading_coefficient(order) < 0:
            factor = -factor
        return self.scale(factor)

    def evaluate(self, point):
        """Evaluate at a dict name -> rational (missing names are an error)."""
        total = Fraction(0)
        values = [_coerce(point[v]) for v in self.varnames]
        for exps, coeff in self.terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term *= value ** e
            total += term
        return total

    def in_ring(self, varnames):
        """Re-embed into the ring over ``varnames``; every used variable must be present there."""
        varnames = tuple(varnames)
        if varnames == self.varnames:
            return self
        positions = {v: i for i, v in enumerate(varnames)}
        used = self.support_variables()
        missing = [v for v in used if v not in positions]
        if missing:
            raise RingMismatchError(f"Variables {missing} are not in the target ring {varnames}")
        index_map = [positions.get(v) for v in self.varnames]
        terms = {}
        for exps, coeff in self.terms.items():
            target = [0] * len(varnames)
            for i, e in enumerate(exps):
                if e:
                    target[index_map[i]] = e
            terms[tuple(target)] = coeff
        return Polynomial._raw(terms, varnames)

    def substitute(self, index, replacement):
        """Replace variable ``index`` by the polynomial ``replacement`` (same ring)."""
        self._check_ring(replacement)
        result = Polynomial.zero(self.varnames)
        powers = {}
        for exps, coeff in self.terms.items():
            k = exps[index]
            if k not in powers:
                powers[k] = replacement ** k
            stripped = exps[:index] + (0,) + exps[index + 1:]
            result = result + powers[k].mul_term(stripped, coeff)
        return result

    # comparison and printing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.varnames == other.varnames and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.varnames, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial('{format_polynomial(self)}', {list(self.varnames)})"


def poly_add(a, b):
    a._check_ring(b)
    return a + b


def poly_mul(a, b):
    a._check_ring(b)
    return a * b


def partial_derivative(p, index):
    return p.partial(index)


def leading_term(p, order=GREVLEX):
    return p.leading_term(order)


def parse_rational(text):
    """Parse "p/q" or an integer string into a reduced Fraction."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = re.match(RATIONAL_PATTERN, str(text))
    if not match:
        raise ValueError(f"Not a rational number: '{text}'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in '{text}'")
    return Fraction(numerator, denominator)


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _format_monomial(exps, varnames):
    factors = []
    for name, e in zip(varnames, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return '*'.join(factors)


def format_polynomial(p, order=GREVLEX):
    """Canonical text: terms in descending order, signs folded into the joins."""
    if p.is_zero():
        return '0'
    pieces = []
    for i, (exps, coeff) in enumerate(p.sorted_terms(order)):
        magnitude = abs(coeff)
        monomial = _format_monomial(exps, p.varnames)
        if not monomial:
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{format_rational(magnitude)}*{monomial}"
        if i == 0:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
    return ''.join(pieces)


def _tokenize(text):
    tokens = []
    pattern = re.compile(POLYNOMIAL_TOKEN_PATTERN)
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = pattern.match(text, position)
        if not match:
            raise PolynomialSyntaxError(f"Unexpected character '{text[position]}'", position)
        number, name, op = match.groups()
        if number is not None:
            tokens.append(('num', number, position))
        elif name is not None:
            tokens.append(('var', name, position))
        else:
            tokens.append(('op', op, position))
        position = match.end()
    tokens.append(('end', '', len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := power ('*' power)*
    power  := atom ['^' INT]
    atom   := INT ['/' INT] | VAR | '(' expr ')'
    """

    def __init__(self, text, varnames):
        self.tokens = _tokenize(text)
        self.index = 0
        self.varnames = tuple(varnames)

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect_op(self, op):
        kind, value, position = self.advance()
        if kind != 'op' or value != op:
            raise PolynomialSyntaxError(f"Expected '{op}'", position)

    def parse(self):
        result = self.expr()
        kind, value, position = self.peek()
        if kind != 'end':
            if kind in ('num', 'var') or value == '(':
                raise PolynomialSyntaxError("Implicit multiplication is not allowed, use '*'", position)
            raise PolynomialSyntaxError(f"Unexpected '{value}'", position)
        return result

    def expr(self):
        sign = 1
        kind, value, _ = self.peek()
        if kind == 'op' and value in '+-':
            self.advance()
            sign = -1 if value == '-' else 1
        result = self.term().scale(sign)
        while True:
            kind, value, _ = self.peek()
            if kind == 'op' and value in '+-':
                self.advance()
                rhs = self.term()
                result = result + rhs if value == '+' else result - rhs
            else:
                return result

    def term(self):
        result = self.power()
        while True:
            kind, value, _ = self.peek()
            if kind == 'op' and value == '*':
                self.advance()
                result = result * self.power()
            else:
                return result

    def power(self):
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == 'op' and value == '^':
            self.advance()
            kind, value, position = self.advance()
            if kind != 'num':
                raise PolynomialSyntaxError("Exponent must be a positive integer", position)
            exponent = int(value)
            if exponent < 1:
                raise PolynomialSyntaxError("Exponent must be a positive integer", position)
            return base ** exponent
        return base

    def atom(self):
        kind, value, position = self.advance()
        if kind == 'num':
            numerator = int(value)
            nkind, nvalue, _ = self.peek()
            if nkind == 'op' and nvalue == '/':
                self.advance()
                dkind, dvalue, dposition = self.advance()
                if dkind != 'num':
                    raise PolynomialSyntaxError("'/' is only allowed inside a rational literal", dposition)
                if int(dvalue) == 0:
                    raise PolynomialSyntaxError("Zero denominator", dposition)
                return Polynomial.constant(Fraction(numerator, int(dvalue)), self.varnames)
            return Polynomial.constant(numerator, self.varnames)
        if kind == 'var':
            if value not in self.varnames:
                raise PolynomialSyntaxError(f"Unknown variable '{value}'", position)
            return Polynomial.variable(value, self.varnames)
        if kind == 'op' and value == '(':
            inner = self.expr()
            self.expect_op(')')
            return inner
        if kind == 'end':
            raise PolynomialSyntaxError("Unexpected end of input", position)
        raise PolynomialSyntaxError(f"Unexpected '{value}'", position)


def parse_polynomial(text, varnames):
    """Parse ``text`` over the variable list ``varnames``.

    Raises PolynomialSyntaxError (with ``position``) on malformed input or unknown variables.
    """
    if not isinstance(text, str):
        raise PolynomialSyntaxError(f"Expected a string, got {type(text).__name__}", 0)
    return _Parser(text, varnames).parse()


def default_variables(count):
    """x, y, z, w for up to four variables, x0..x{count-1} beyond that."""
    if count <= 4:
        return ('x', 'y', 'z', 'w')[:count]
    return tuple(f"x{i}" for i in range(count))
