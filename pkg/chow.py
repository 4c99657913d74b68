#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Chow-ring calculus for projective space and for formal projective bundles.

Two kinds of base rings are used:

* the concrete ring Z[h]/(h^{n+1}) of Pⁿ, wrapped by ChowClass, where a class
  is the integer vector (a_0, ..., a_n) of coefficients of h^k, i.e. of [P^{n-k}];
* a formal ring of Chern symbols, each symbol weighted by its degree and every
  monomial of weighted degree above the base dimension set to zero.

Both are TruncatedRing instances. A ProjBundleClass is a polynomial in the
hyperplane class H of P(E) with base-ring coefficients; the Grothendieck relation
H^r = -Σ c_i(E) H^{r-i} brings it to canonical form (H-degree below the rank) and
the pushforward sends H^k to the Segre class s_{k-r+1}(E).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from polynomials import Polynomial, format_polynomial

logger = logging.getLogger(__name__)

HYPERPLANE_VARIABLE = 'h'


class ChowError(ValueError):
    """Raised on truncation mismatches, non-unit inversions and rank violations."""


class TruncatedRing:
    """Polynomial ring over Q modulo all monomials of weighted degree above ``bound``."""

    def __init__(self, varnames, weights, bound):
        self.varnames = tuple(varnames)
        self.weights = tuple(weights)
        self.bound = bound
        if len(self.weights) != len(self.varnames):
            raise ChowError("Every ring variable needs a weight")
        if any(w < 1 for w in self.weights):
            raise ChowError("Weights must be positive")

    def __eq__(self, other):
        return (isinstance(other, TruncatedRing) and self.varnames == other.varnames
                and self.weights == other.weights and self.bound == other.bound)

    def __hash__(self):
        return hash((self.varnames, self.weights, self.bound))

    def __repr__(self):
        return f"TruncatedRing({list(self.varnames)}, weights={list(self.weights)}, bound={self.bound})"

    def weighted_degree(self, exps):
        return sum(e * w for e, w in zip(exps, self.weights))

    def element(self, value):
        if isinstance(value, Polynomial):
            if value.varnames != self.varnames:
                raise ChowError(f"{value} is not an element of {self}")
            return self.truncate(value)
        return Polynomial.constant(value, self.varnames)

    def one(self):
        return Polynomial.constant(1, self.varnames)

    def zero(self):
        return Polynomial.zero(self.varnames)

    def var(self, name):
        return Polynomial.variable(name, self.varnames)

    def truncate(self, p):
        return Polynomial._raw({e: c for e, c in p.terms.items() if self.weighted_degree(e) <= self.bound},
                               self.varnames)

    def mul(self, a, b):
        terms = {}
        for e1, c1 in a.terms.items():
            d1 = self.weighted_degree(e1)
            for e2, c2 in b.terms.items():
                if d1 + self.weighted_degree(e2) > self.bound:
                    continue
                exps = tuple(x + y for x, y in zip(e1, e2))
                value = terms.get(exps, 0) + c1 * c2
                if value:
                    terms[exps] = value
                else:
                    terms.pop(exps, None)
        return Polynomial._raw(terms, self.varnames)

    def product(self, factors):
        result = self.one()
        for f in factors:
            result = self.mul(result, f)
        return result

    def power(self, a, k):
        result = self.one()
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def graded_part(self, p, degree):
        return Polynomial._raw({e: c for e, c in p.terms.items() if self.weighted_degree(e) == degree},
                               self.varnames)

    def inverse(self, a):
        """Inverse of a class with constant term 1 (geometric series in the nilpotent part)."""
        if a.constant_value() != 1:
            raise ChowError(f"{format_polynomial(a)} is not invertible: constant term must be 1")
        nilpotent = self.one() - a
        result = self.one()
        term = self.one()
        for _ in range(self.bound):
            term = self.mul(term, nilpotent)
            if term.is_zero():
                break
            result = result + term
        return result


def projective_space_ring(n):
    return TruncatedRing((HYPERPLANE_VARIABLE,), (1,), n)


@dataclass(frozen=True)
class ChowClass:
    """Class in A_*(Pⁿ); coeffs[k] is the coefficient of h^k = [P^{n-k}]."""
    n: int
    coeffs: tuple

    def __post_init__(self):
        if self.n < 0:
            raise ChowError("Ambient dimension must be non-negative")
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.n + 1:
            raise ChowError(f"A class on P^{self.n} needs {self.n + 1} coefficients, got {len(coeffs)}")
        clean = []
        for c in coeffs:
            value = Fraction(c)
            if value.denominator != 1:
                raise ChowError(f"Chow coefficients are integers, got {c}")
            clean.append(int(value))
        object.__setattr__(self, 'coeffs', tuple(clean))

    @classmethod
    def from_list(cls, values):
        return cls(len(values) - 1, tuple(values))

    @classmethod
    def fundamental(cls, n):
        return cls(n, (1,) + (0,) * n)

    @classmethod
    def from_polynomial(cls, n, p):
        coeffs = [0] * (n + 1)
        for (k,), c in p.terms.items():
            if k <= n:
                coeffs[k] = c
        return cls(n, tuple(coeffs))

    def to_polynomial(self):
        return Polynomial({(k,): c for k, c in enumerate(self.coeffs)}, (HYPERPLANE_VARIABLE,))

    def to_list(self):
        return list(self.coeffs)

    def _check(self, other):
        if not isinstance(other, ChowClass):
            raise ChowError(f"Expected a ChowClass, got {type(other).__name__}")
        if other.n != self.n:
            raise ChowError(f"Truncation mismatch: P^{self.n} vs P^{other.n}")

    def __add__(self, other):
        self._check(other)
        return ChowClass(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return ChowClass(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ChowClass(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.n, tuple(other * a for a in self.coeffs))
        self._check(other)
        coeffs = [0] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[:self.n + 1 - i]):
                    coeffs[i + j] += a * b
        return ChowClass(self.n, tuple(coeffs))

    __rmul__ = __mul__

    @property
    def degree_zero(self):
        """Coefficient of [P⁰]."""
        return self.coeffs[self.n]

    def to_text(self):
        pieces = []
        for k, a in enumerate(self.coeffs):
            if not a:
                continue
            magnitude = abs(a)
            if k == 0:
                body = str(magnitude)
            else:
                power = 'h' if k == 1 else f"h^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not pieces:
                pieces.append(f"-{body}" if a < 0 else body)
            else:
                pieces.append(f" - {body}" if a < 0 else f" + {body}")
        return ''.join(pieces) or '0'

    def __str__(self):
        return self.to_text()


def whitney_product(classes):
    """Product of total Chern classes in Z[h]/(h^{n+1})."""
    classes = list(classes)
    if not classes:
        raise ChowError("whitney_product needs at least one class")
    result = ChowClass.fundamental(classes[0].n)
    for c in classes:
        result = result * c
    return result


def segre_of_bundle(c):
    """Multiplicative inverse of a total Chern class (constant term must be 1)."""
    if c.coeffs[0] != 1:
        raise ChowError(f"Segre class needs a unit total Chern class, got {c.to_text()}")
    ring = projective_space_ring(c.n)
    return ChowClass.from_polynomial(c.n, ring.inverse(c.to_polynomial()))


def dual_class(gamma):
    """Multiply the i-dimensional component by (-1)^i."""
    n = gamma.n
    return ChowClass(n, tuple(a if (n - k) % 2 == 0 else -a for k, a in enumerate(gamma.coeffs)))


def csm_projective_subspace(d, n):
    """Pushforward to Pⁿ of c(TP^d) ∩ [P^d]."""
    if not 0 <= d <= n:
        raise ChowError(f"Need 0 <= d <= n, got d={d}, n={n}")
    coeffs = [0] * (n + 1)
    for k in range(d + 1):
        coeffs[n - d + k] = comb(d + 1, k)
    return ChowClass(n, tuple(coeffs))


def chern_power_class(n, factors):
    """Π (1 + a h) over ``factors`` truncated to P^n."""
    result = ChowClass.fundamental(n)
    for a in factors:
        coeffs = [1] + [0] * n
        if n >= 1:
            coeffs[1] = a
        result = result * ChowClass(n, tuple(coeffs))
    return result


@dataclass(frozen=True)
class BundleModel:
    rank: int
    chern: tuple
    ring: TruncatedRing

    def __post_init__(self):
        if self.rank < 1:
            raise ChowError("Bundles of rank 0 have no projectivization")
        chern = [self.ring.element(c) for c in self.chern]
        if len(chern) > self.rank:
            if any(not c.is_zero() for c in chern[self.rank:]):
                raise ChowError(f"Chern classes above the rank {self.rank} must vanish")
            chern = chern[:self.rank]
        chern += [self.ring.zero()] * (self.rank - len(chern))
        object.__setattr__(self, 'chern', tuple(chern))

    @classmethod
    def from_chow_class(cls, rank, total):
        """Concrete bundle on P^n with total Chern class ``total``."""
        ring = projective_space_ring(total.n)
        if total.coeffs[0] != 1:
            raise ChowError(f"Total Chern class must start with 1, got {total.to_text()}")
        chern = [Polynomial({(k,): total.coeffs[k]}, ring.varnames) if k <= total.n else ring.zero()
                 for k in range(1, rank + 1)]
        if any(total.coeffs[k] for k in range(rank + 1, total.n + 1)):
            raise ChowError(f"{total.to_text()} has classes above rank {rank}")
        return cls(rank, tuple(chern), ring)

    def chern_class(self, i):
        if i == 0:
            return self.ring.one()
        if 1 <= i <= self.rank:
            return self.chern[i - 1]
        return self.ring.zero()

    def total_chern(self):
        total = self.ring.one()
        for c in self.chern:
            total = total + c
        return total

    def segre(self):
        return self.ring.inverse(self.total_chern())

    def segre_class(self, j):
        if j < 0:
            return self.ring.zero()
        return self.ring.graded_part(self.segre(), j)


def reduce_grothendieck(terms, bundle, pick=None):
    """Rewrite H-powers >= rank with H^r = -Σ c_i H^{r-i}; ``pick`` chooses which power to rewrite next."""
    ring = bundle.ring
    r = bundle.rank
    terms = {k: v for k, v in terms.items() if not v.is_zero()}
    while True:
        high = [k for k in terms if k >= r]
        if not high:
            return terms
        k = pick(sorted(high)) if pick else max(high)
        coeff = terms.pop(k)
        for i in range(1, r + 1):
            c = bundle.chern[i - 1]
            if c.is_zero():
                continue
            value = terms.get(k - i, ring.zero()) - ring.mul(coeff, c)
            if value.is_zero():
                terms.pop(k - i, None)
            else:
                terms[k - i] = value


@dataclass(frozen=True)
class ProjBundleClass:
    """Σ terms[k]·H^k ∩ [P(E)] with coefficients in the base ring of ``bundle``."""
    terms: dict = field(hash=False)
    bundle: BundleModel

    def __post_init__(self):
        ring = self.bundle.ring
        clean = {}
        for k, v in self.terms.items():
            if k < 0:
                raise ChowError("Negative power of H")
            v = ring.element(v)
            if not v.is_zero():
                clean[k] = v
        object.__setattr__(self, 'terms', clean)

    @classmethod
    def fundamental(cls, bundle):
        return cls({0: bundle.ring.one()}, bundle)

    def is_canonical(self):
        return all(k < self.bundle.rank for k in self.terms)

    def reduced(self, pick=None):
        return ProjBundleClass(reduce_grothendieck(dict(self.terms), self.bundle, pick), self.bundle)

    def __add__(self, other):
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, self.bundle.ring.zero()) + v
        return ProjBundleClass(terms, self.bundle)

    def scale(self, base_element):
        ring = self.bundle.ring
        return ProjBundleClass({k: ring.mul(v, base_element) for k, v in self.terms.items()}, self.bundle)

    def times_hyperplane(self, power):
        return ProjBundleClass({k + power: v for k, v in self.terms.items()}, self.bundle)

    def __eq__(self, other):
        if not isinstance(other, ProjBundleClass):
            return NotImplemented
        return self.bundle == other.bundle and self.reduced().terms == other.reduced().terms

    def to_text(self):
        if not self.terms:
            return '0'
        parts = []
        for k in sorted(self.terms, reverse=True):
            power = '1' if k == 0 else ('H' if k == 1 else f"H^{k}")
            parts.append(f"({format_polynomial(self.terms[k])})*{power}")
        return ' + '.join(parts)


def pb_pushforward(alpha, bundle=None):
    """Push a class of P(E) to the base: H^k goes to s_{k-r+1}(E)."""
    bundle = bundle or alpha.bundle
    ring = bundle.ring
    segre = bundle.segre()
    result = ring.zero()
    for k, coeff in alpha.terms.items():
        j = k - bundle.rank + 1
        if j < 0:
            continue
        result = result + ring.mul(coeff, ring.graded_part(segre, j))
    return result


def top_chern_twist(F, n, E):
    """c_n(r*F ⊗ O(1)) = Σ_j c_j(F) H^{n-j} on P(E)."""
    if F.rank != n:
        raise ChowError(f"Twisted top Chern class needs a rank {n} bundle, got rank {F.rank}")
    if F.ring != E.ring:
        raise ChowError("Both bundles must live over the same base ring")
    return ProjBundleClass({n - j: F.chern_class(j) for j in range(n + 1)}, E)


def shadow(alpha, bundle=None):
    """π_*(c(ζ) ∩ α) with c(ζ) = c(π*E)·(1 - H)^{-1}."""
    bundle = bundle or alpha.bundle
    ring = bundle.ring
    top = ring.bound + bundle.rank - 1
    expanded = ProjBundleClass({}, bundle)
    for i in range(top + 1):
        expanded = expanded + alpha.times_hyperplane(i)
    return ring.mul(bundle.total_chern(), pb_pushforward(expanded, bundle))


def cotangent_bundle(n):
    """T*Pⁿ: rank n, c = (1 - h)^{n+1} truncated."""
    total = ChowClass(n, tuple((-1) ** k * comb(n + 1, k) for k in range(n + 1)))
    return BundleModel.from_chow_class(n, total)


def dual_chern(total):
    """c(E^∨) from c(E): c_k picks up (-1)^k."""
    return ChowClass(total.n, tuple((-1) ** k * a for k, a in enumerate(total.coeffs)))


def dual_form_check(lhs, rhs):
    """c(T*Pⁿ) - c(Ω(log D)) = (-1)^n · dual(c_SM(1_D)) with c_SM(1_D) = c_SM(1_{Pⁿ}) - lhs."""
    n = lhs.n
    divisor_class = csm_projective_subspace(n, n) - lhs
    cotangent = ChowClass(n, tuple((-1) ** k * comb(n + 1, k) for k in range(n + 1)))
    difference = cotangent - dual_chern(rhs)
    expected = dual_class(divisor_class) * ((-1) ** n)
    return difference == expected


def shadow_check(lhs, rhs):
    """shadow([P(C)]) = (-1)^{n-1} · dual(c_SM(1_D)) on P(T*Pⁿ), with [P(C)] = c_n(r*F ⊗ O(1))."""
    n = lhs.n
    if n < 1:
        return True
    E = cotangent_bundle(n)
    F = BundleModel.from_chow_class(n, dual_chern(rhs))
    value = ChowClass.from_polynomial(n, shadow(top_chern_twist(F, n, E), E))
    divisor_class = csm_projective_subspace(n, n) - lhs
    return value == dual_class(divisor_class) * ((-1) ** (n - 1))


@dataclass(frozen=True)
class ProofChainResult:
    n: int
    ok: bool
    transcript: tuple
    failed_step: object = None

    def to_dict(self):
        return {'n': self.n, 'ok': self.ok, 'failed_step': self.failed_step,
                'transcript': [dict(entry) for entry in self.transcript]}


PROOF_CHAIN_STEPS = (
    'shadow expansion',
    'substitute the zero-section class',
    'expand the twisted top Chern class',
    'projection formula',
    'Segre rule',
    'reindex',
    'telescope',
    'final form',
)


def formal_bundles(n):
    """Bundles E, F of rank n with symbolic Chern classes e_i, f_i over a dimension-n base."""
    names = tuple(f"e{i}" for i in range(1, n + 1)) + tuple(f"f{i}" for i in range(1, n + 1))
    weights = tuple(range(1, n + 1)) * 2
    ring = TruncatedRing(names, weights, n)
    E = BundleModel(n, tuple(ring.var(f"e{i}") for i in range(1, n + 1)), ring)
    F = BundleModel(n, tuple(ring.var(f"f{i}") for i in range(1, n + 1)), ring)
    return ring, E, F


def proof_chain_check(n, max_rank=6):
    """Symbolically verify -π_*((1-H)^{-1} c_n(r*F⊗O(1)) ∩ [P(E)]) = [X] - c(F)s(E) ∩ [X].

    Each step is computed independently; consecutive steps must agree exactly.
    """
    if not 1 <= n <= max_rank:
        raise ValueError(f"proof_chain_check needs 1 <= n <= {max_rank}, got {n}")
    ring, E, F = formal_bundles(n)
    top = 2 * n - 1
    s_E = E.segre()
    c_F = F.total_chern()
    zero_section = top_chern_twist(F, n, E)

    def push_power(k):
        return pb_pushforward(ProjBundleClass({k: ring.one()}, E).reduced(), E)

    values = []
    values.append(-ring.mul(s_E, shadow(zero_section, E)))

    canonical = zero_section.reduced()
    series = ProjBundleClass({}, E)
    for i in range(top + 1):
        series = series + canonical.times_hyperplane(i)
    values.append(-pb_pushforward(series, E))

    expanded = {}
    for i in range(top + 1):
        for j in range(n + 1):
            k = n - j + i
            expanded[k] = expanded.get(k, ring.zero()) + F.chern_class(j)
    values.append(-pb_pushforward(ProjBundleClass(reduce_grothendieck(expanded, E), E), E))

    projected = ring.zero()
    for j in range(n + 1):
        inner = ring.zero()
        for i in range(top + 1):
            inner = inner + push_power(n - j + i)
        projected = projected + ring.mul(F.chern_class(j), inner)
    values.append(-projected)

    segre_rule = ring.zero()
    for j in range(n + 1):
        inner = ring.zero()
        for i in range(top + 1):
            inner = inner + E.segre_class(i - j + 1)
        segre_rule = segre_rule + ring.mul(F.chern_class(j), inner)
    values.append(-segre_rule)

    reindexed = ring.zero()
    for i in range(top + 1):
        for j in range(min(i + 1, n) + 1):
            reindexed = reindexed + ring.mul(F.chern_class(j), E.segre_class(i + 1 - j))
    values.append(-reindexed)
    values.append(-(ring.mul(c_F, s_E) - ring.one()))
    values.append(ring.one() - ring.mul(c_F, s_E))

    transcript = []
    failed = None
    for index, (name, value) in enumerate(zip(PROOF_CHAIN_STEPS, values), start=1):
        transcript.append({'step': index, 'name': name, 'value': format_polynomial(value)})
        if failed is None and index > 1 and value != values[index - 2]:
            failed = index
    ok = failed is None
    if ok:
        logger.info(f"Proof chain verified for rank {n}")
    else:
        logger.warning(f"Proof chain for rank {n} breaks at step {failed} ({PROOF_CHAIN_STEPS[failed - 1]})")
    return ProofChainResult(n, ok, tuple(transcript), failed)
