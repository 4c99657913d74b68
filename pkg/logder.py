#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Logarithmic derivations along a divisor h = 0.

A derivation θ = Σ p_i ∂_i is logarithmic when θ(h) ∈ (h). The graded solver
finds all such θ with homogeneous coefficients of a fixed degree by solving the
exact linear system θ(h) - q·h = 0; every solution is re-checked by exact
division before it is returned. Freeness is decided with Saito's criterion:
m logarithmic derivations form a basis iff the determinant of their
coefficient matrix is a nonzero scalar multiple of h.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from arrangements import characteristic_polynomial, factor_over_integers
from chow import chern_power_class
from groebner import StepBudget, divide_reduce, polynomial_gcd
from linear_algebra import EchelonSpan, nullspace
from polynomials import GREVLEX, Polynomial, RingMismatchError, parse_polynomial

logger = logging.getLogger(__name__)


class NonLogarithmicDerivationError(ValueError):
    """A derivation handed to saito_test does not satisfy θ(h) ∈ (h)."""

    def __init__(self, derivation, h):
        super().__init__(f"{derivation} is not logarithmic along {h}")
        self.witness = derivation


class SquarefreeError(ValueError):
    """The divisor equation has a repeated factor."""


def _partial_symbol(name):
    return f"∂{name}"


@dataclass(frozen=True)
class Derivation:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if not coeffs:
            raise ValueError("A derivation needs at least one coefficient")
        if any(c.varnames != coeffs[0].varnames for c in coeffs):
            raise RingMismatchError("Derivation coefficients live in different rings")
        if len(coeffs) != coeffs[0].nvars:
            raise ValueError(f"Expected {coeffs[0].nvars} coefficients, got {len(coeffs)}")
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def varnames(self):
        return self.coeffs[0].varnames

    @classmethod
    def from_strings(cls, strings, varnames):
        return cls(tuple(parse_polynomial(s, varnames) for s in strings))

    @classmethod
    def partial(cls, index, varnames):
        varnames = tuple(varnames)
        return cls(tuple(Polynomial.constant(1 if i == index else 0, varnames) for i in range(len(varnames))))

    @classmethod
    def euler(cls, varnames):
        return cls(tuple(Polynomial.variable(v, varnames) for v in varnames))

    def to_strings(self):
        return [str(c) for c in self.coeffs]

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def degree(self):
        return max(c.total_degree() for c in self.coeffs)

    def is_homogeneous(self):
        degrees = {sum(e) for c in self.coeffs for e in c.terms}
        return len(degrees) <= 1

    def apply(self, p):
        if p.varnames != self.varnames:
            raise RingMismatchError(f"{p} and the derivation live in different rings")
        result = Polynomial.zero(self.varnames)
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                result = result + c * p.partial(i)
        return result

    def __add__(self, other):
        return Derivation(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, factor):
        return Derivation(tuple(c.scale(factor) for c in self.coeffs))

    def multiply(self, p):
        return Derivation(tuple(c * p for c in self.coeffs))

    def mul_monomial(self, exps):
        return Derivation(tuple(c.mul_term(exps, 1) for c in self.coeffs))

    def to_vector(self):
        return {(i, exps): coeff for i, c in enumerate(self.coeffs) for exps, coeff in c.terms.items()}

    def sort_key(self):
        return tuple(sorted((i, tuple(-e for e in exps), -coeff) for (i, exps), coeff in self.to_vector().items()))

    def primitive(self):
        """Scale to integer coefficients with gcd 1; the leading term of the first nonzero coefficient is positive."""
        values = [v for c in self.coeffs for v in c.terms.values()]
        if not values:
            return self
        denominator = 1
        for v in values:
            denominator = lcm(denominator, v.denominator)
        numerator = 0
        for v in values:
            numerator = gcd(numerator, (v * denominator).numerator)
        factor = Fraction(denominator, numerator)
        first = next(c for c in self.coeffs if not c.is_zero())
        if first.leading_coefficient() < 0:
            factor = -factor
        return self.scale(factor)

    def __str__(self):
        pieces = []
        for name, c in zip(self.varnames, self.coeffs):
            if c.is_zero():
                continue
            text = str(c)
            if len(c.terms) > 1:
                text = f"({text})"
            elif text == '1':
                text = ''
            elif text == '-1':
                text = '-'
            else:
                text = f"{text}*"
            pieces.append(f"{text}{_partial_symbol(name)}")
        return ' + '.join(pieces).replace('+ -', '- ') or '0'


@dataclass(frozen=True)
class GradedDerivationSpace:
    h: Polynomial
    degree: int
    basis: tuple

    @property
    def dimension(self):
        return len(self.basis)


@dataclass(frozen=True)
class Exponents:
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, 'values', tuple(sorted(self.values)))

    @property
    def total(self):
        return sum(self.values)

    def to_list(self):
        return list(self.values)


@dataclass(frozen=True)
class SaitoCertificate:
    h: Polynomial
    basis: tuple
    determinant: Polynomial
    unit: Fraction

    @property
    def exponents(self):
        return Exponents(tuple(max(theta.degree(), 0) for theta in self.basis))

    def to_dict(self):
        return {
            'basis': [theta.to_strings() for theta in self.basis],
            'determinant': str(self.determinant),
            'unit': str(self.unit),
            'exponents': self.exponents.to_list(),
        }


@dataclass(frozen=True)
class TeraoVerdict:
    certified_non_free: bool
    integer_roots: tuple
    residual: tuple
    discriminant: object = None

    def to_dict(self):
        return {'certified_non_free': self.certified_non_free, 'integer_roots': list(self.integer_roots),
                'residual': list(self.residual), 'discriminant': self.discriminant}


@dataclass(frozen=True)
class FreenessVerdict:
    """status is 'free', 'non-free' or 'inconclusive'."""
    status: str
    certificate: SaitoCertificate = None
    reason: str = ''
    terao: TeraoVerdict = None
    degrees_searched: int = -1
    generator_degrees: tuple = field(default=())

    @property
    def exponents(self):
        return self.certificate.exponents if self.certificate else None

    def to_dict(self):
        result = {'status': self.status, 'reason': self.reason, 'degrees_searched': self.degrees_searched}
        if self.certificate:
            result['certificate'] = self.certificate.to_dict()
            result['exponents'] = self.exponents.to_list()
        if self.terao:
            result['terao'] = self.terao.to_dict()
        return result


def apply_derivation(theta, p):
    return theta.apply(p)


def monomials_of_degree(nvars, degree):
    """Exponent tuples of total degree ``degree``, descending in grevlex."""
    if degree < 0:
        return []
    result = []
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        result.append(tuple(exps))
    return sorted(result, key=GREVLEX.key, reverse=True)


def monomials_up_to(nvars, degree):
    return [m for d in range(degree, -1, -1) for m in monomials_of_degree(nvars, d)]


def is_logarithmic(theta, h):
    if h.is_constant():
        return True
    _, remainder = divide_reduce(theta.apply(h), [h])
    return remainder.is_zero()


def _solve_log_system(h, p_monomials, q_monomials):
    """Nullspace of θ(h) - q·h = 0 with the q unknowns first; returns the θ parts."""
    m = h.nvars
    columns = [('q', exps) for exps in q_monomials]
    columns += [(i, exps) for i in range(m) for exps in p_monomials]
    partials = [h.partial(i) for i in range(m)]
    rows = {}
    for col, (which, exps) in enumerate(columns):
        if which == 'q':
            contribution = h.mul_term(exps, -1)
        else:
            contribution = partials[which].mul_term(exps, 1)
        for monomial, coeff in contribution.terms.items():
            rows.setdefault(monomial, {})[col] = coeff
    solutions = nullspace(list(rows.values()), len(columns))
    derivations = []
    for vector in solutions:
        coeffs = [dict() for _ in range(m)]
        for value, (which, exps) in zip(vector, columns):
            if value and which != 'q':
                coeffs[which][exps] = value
        theta = Derivation(tuple(Polynomial(c, h.varnames) for c in coeffs))
        if theta.is_zero():
            continue
        if not is_logarithmic(theta, h):
            raise RuntimeError(f"Solver returned {theta}, which is not logarithmic along {h}")
        derivations.append(theta)
    return derivations


def graded_log_derivations(h, d):
    """Basis of the logarithmic derivations whose coefficients are homogeneous of degree d."""
    if h.is_constant():
        raise ValueError("graded_log_derivations needs a nonconstant polynomial")
    if not h.is_homogeneous():
        raise ValueError(f"{h} is not homogeneous; use bounded_log_derivations")
    if d < 0:
        raise ValueError("Degree must be non-negative")
    basis = _solve_log_system(h, monomials_of_degree(h.nvars, d), monomials_of_degree(h.nvars, d - 1))
    logger.debug(f"Degree {d} logarithmic derivations of {h}: dimension {len(basis)}")
    return GradedDerivationSpace(h, d, tuple(basis))


def bounded_log_derivations(h, bound):
    """Vector-space basis of all logarithmic θ with coefficient degree <= bound."""
    if h.is_constant():
        raise ValueError("bounded_log_derivations needs a nonconstant polynomial")
    if bound < 0:
        raise ValueError("Bound must be non-negative")
    return _solve_log_system(h, monomials_up_to(h.nvars, bound), monomials_up_to(h.nvars, bound - 1))


def polynomial_determinant(matrix):
    """Leibniz expansion; the matrices here are at most a handful of rows."""
    size = len(matrix)
    varnames = matrix[0][0].varnames
    total = Polynomial.zero(varnames)
    for perm in itertools.permutations(range(size)):
        inversions = sum(1 for i in range(size) for j in range(i + 1, size) if perm[i] > perm[j])
        term = Polynomial.constant(-1 if inversions % 2 else 1, varnames)
        for row, col in enumerate(perm):
            entry = matrix[row][col]
            if entry.is_zero():
                term = None
                break
            term = term * entry
        if term is not None:
            total = total + term
    return total


def saito_test(h, basis):
    """SaitoCertificate when det(coefficients) = c·h with c a nonzero scalar, else None."""
    basis = tuple(basis)
    if len(basis) != h.nvars:
        raise ValueError(f"Saito's criterion needs {h.nvars} derivations, got {len(basis)}")
    for theta in basis:
        if theta.varnames != h.varnames:
            raise RingMismatchError("Derivation and divisor live in different rings")
        if not is_logarithmic(theta, h):
            raise NonLogarithmicDerivationError(theta, h)
    determinant = polynomial_determinant([theta.coeffs for theta in basis])
    if determinant.is_zero():
        logger.debug("Saito determinant vanishes")
        return None
    unit = determinant.leading_coefficient() / h.leading_coefficient()
    if determinant != h.scale(unit):
        logger.debug(f"Saito determinant {determinant} is not a scalar multiple of {h}")
        return None
    return SaitoCertificate(h, basis, determinant, unit)


def terao_factorization_check(arrangement, lattice=None):
    """A free arrangement has χ(t) = Π (t - e_i) with non-negative integers e_i.

    Integer roots are peeled off with candidates from the divisors of the constant
    term; anything left over has a non-integer root and certifies non-freeness.
    """
    chi = characteristic_polynomial(arrangement, lattice)
    roots, coefficients = factor_over_integers(chi)
    discriminant = None
    if len(coefficients) == 3:
        a, b, c = coefficients
        discriminant = b * b - 4 * a * c
    certified = len(coefficients) > 1 or any(r < 0 for r in roots)
    if certified:
        logger.info(f"Characteristic polynomial {chi} does not split over the non-negative integers")
    return TeraoVerdict(certified, roots, coefficients, discriminant)


def is_squarefree(h, budget=None):
    """No repeated factor: gcd(h, ∂_1 h, ..., ∂_m h) is a constant (characteristic 0)."""
    if h.is_constant():
        return True
    common = h
    for i in range(h.nvars):
        p = h.partial(i)
        if p.is_zero():
            continue
        common = polynomial_gcd(common, p, budget)
        if common.is_constant():
            return True
    return common.is_constant()


def _trivial_certificate(h):
    basis = tuple(Derivation.partial(i, h.varnames) for i in range(h.nvars))
    determinant = Polynomial.constant(1, h.varnames)
    return SaitoCertificate(h, basis, determinant, 1 / h.constant_value())


def find_free_basis(h, degree_bound=None, arrangement=None, check_squarefree=True, budget=None):
    """Search for a homogeneous Saito basis degree by degree.

    In each degree the new minimal generators of Der(-log h) are the solutions
    independent of the monomial multiples of earlier picks. More than m of them,
    or degrees adding up past deg h, certify non-freeness; so does exhausting all
    degrees up to deg h without a certificate.
    """
    if h.is_zero():
        raise ValueError("The zero polynomial does not define a divisor")
    if h.is_constant():
        return FreenessVerdict('free', _trivial_certificate(h), 'empty divisor', degrees_searched=0)
    if arrangement is None and check_squarefree and not is_squarefree(h, budget or StepBudget()):
        raise SquarefreeError(f"{h} has a repeated factor; pass its reduced equation")
    if not h.is_homogeneous():
        return find_saito_basis_bounded(h, degree_bound if degree_bound is not None else 3)
    terao = None
    if arrangement is not None:
        terao = terao_factorization_check(arrangement)
        if terao.certified_non_free:
            return FreenessVerdict('non-free', None, 'characteristic polynomial does not factor over '
                                   'the non-negative integers', terao, 0)
    m = h.nvars
    deg_h = h.total_degree()
    limit = deg_h if degree_bound is None else min(degree_bound, deg_h)
    picks = []
    span = EchelonSpan()
    for d in range(limit + 1):
        for theta in picks:
            for exps in monomials_of_degree(m, d - theta.degree()):
                span.add(theta.mul_monomial(exps).to_vector())
        space = graded_log_derivations(h, d)
        for theta in sorted(space.basis, key=Derivation.sort_key):
            if span.add(theta.to_vector()):
                picks.append(theta.primitive())
        degrees = tuple(theta.degree() for theta in picks)
        if len(picks) > m:
            return FreenessVerdict('non-free', None, f"{len(picks)} minimal generators exceed the rank {m}",
                                   terao, d, degrees)
        if sum(degrees) > deg_h:
            return FreenessVerdict('non-free', None, f"generator degrees {list(degrees)} sum past deg h = {deg_h}",
                                   terao, d, degrees)
        if len(picks) == m:
            certificate = saito_test(h, picks)
            if certificate is not None:
                logger.info(f"Free with exponents {certificate.exponents.to_list()}")
                return FreenessVerdict('free', certificate, "Saito's criterion", terao, d, degrees)
    degrees = tuple(theta.degree() for theta in picks)
    if limit >= deg_h:
        return FreenessVerdict('non-free', None, f"no Saito basis among generators of degree <= {deg_h}",
                               terao, limit, degrees)
    return FreenessVerdict('inconclusive', None, f"search stopped at degree bound {limit}", terao, limit, degrees)


def find_saito_basis_bounded(h, bound):
    """Filtered search for non-homogeneous h; finds a basis or reports inconclusive."""
    m = h.nvars
    picks = []
    span = EchelonSpan()
    for d in range(bound + 1):
        for theta in picks:
            for exps in monomials_up_to(m, d - theta.degree()):
                span.add(theta.mul_monomial(exps).to_vector())
        for theta in sorted(bounded_log_derivations(h, d), key=Derivation.sort_key):
            if span.add(theta.to_vector()):
                picks.append(theta.primitive())
        if len(picks) >= m:
            for combo in itertools.combinations(picks, m):
                certificate = saito_test(h, combo)
                if certificate is not None:
                    logger.info(f"Saito basis found for {h} at degree bound {d}")
                    return FreenessVerdict('free', certificate, "Saito's criterion (bounded search)",
                                           None, d, tuple(t.degree() for t in picks))
    return FreenessVerdict('inconclusive', None, f"no Saito basis with coefficient degree <= {bound}",
                           None, bound, tuple(t.degree() for t in picks))


def chern_log_sheaf(exponents, n):
    """c(Der_{Pⁿ}(-log D)) from the exponents (1, e_1, ..., e_n) of the cone: Π (1 + (1 - e_i) h)."""
    values = list(exponents.values if isinstance(exponents, Exponents) else exponents)
    if len(values) != n + 1:
        raise ValueError(f"Expected {n + 1} exponents for P^{n}, got {values}")
    if 1 in values:
        values.remove(1)
    elif any(values):
        raise ValueError(f"Exponents {sorted(values)} contain no 1 (Euler derivation); "
                         f"the projective convention does not apply")
    return chern_power_class(n, [1 - e for e in values])
