#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Central hyperplane arrangements over the rationals.

An arrangement in Pⁿ is a list of pairwise non-proportional normal vectors in
Q^{n+1}. Its intersection lattice is enumerated by closing subfamilies under
linear span; flats are identified by their closed index sets. The Möbius
values of the lattice drive the characteristic polynomial and the CSM class
of the complement:

    1_U = Σ_x μ(0̂, x) · 1_{P(x)}   so   c_SM(1_U) = Σ_x μ(0̂, x) · c_SM(1_{P(x)}).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from chow import ChowClass, csm_projective_subspace
from linear_algebra import EchelonSpan, dense_to_sparse, kernel_basis, row_space_basis
from polynomials import Polynomial, default_variables, parse_rational

logger = logging.getLogger(__name__)


class ArrangementError(ValueError):
    """Raised for malformed arrangements (wrong lengths, zero or repeated hyperplanes)."""


def _normalized(vector):
    pivot = next(v for v in vector if v)
    return tuple(v / pivot for v in vector)


@dataclass(frozen=True)
class Arrangement:
    n: int
    hyperplanes: tuple
    variables: tuple = None
    name: str = ''

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ArrangementError(f"Projective dimension must be a positive integer, got {self.n!r}")
        rows = []
        seen = {}
        for index, row in enumerate(self.hyperplanes):
            try:
                row = tuple(parse_rational(v) if isinstance(v, str) else Fraction(v) for v in row)
            except (TypeError, ValueError) as e:
                raise ArrangementError(f"Hyperplane {index}: {e}") from e
            if len(row) != self.n + 1:
                raise ArrangementError(f"Hyperplane {index} has {len(row)} coefficients, expected {self.n + 1}")
            if not any(row):
                raise ArrangementError(f"Hyperplane {index} is the zero vector")
            key = _normalized(row)
            if key in seen:
                raise ArrangementError(f"Hyperplanes {seen[key]} and {index} are proportional; "
                                       f"the divisor must be reduced")
            seen[key] = index
            rows.append(row)
        variables = tuple(self.variables) if self.variables else default_variables(self.n + 1)
        if not all(isinstance(v, str) and v for v in variables) or len(set(variables)) != len(variables):
            raise ArrangementError(f"Variable names must be distinct non-empty strings, got {list(variables)}")
        if len(variables) != self.n + 1:
            raise ArrangementError(f"Need {self.n + 1} variable names, got {list(variables)}")
        object.__setattr__(self, 'hyperplanes', tuple(rows))
        object.__setattr__(self, 'variables', variables)

    @classmethod
    def from_dict(cls, data, name=''):
        """Build from {"n": int, "hyperplanes": [[rational strings]], "variables": [..]}."""
        if not isinstance(data, dict):
            raise ArrangementError("An arrangement must be a JSON object")
        if 'n' not in data or 'hyperplanes' not in data:
            raise ArrangementError("An arrangement needs the keys 'n' and 'hyperplanes'")
        if not isinstance(data['hyperplanes'], list) or not all(isinstance(r, list) for r in data['hyperplanes']):
            raise ArrangementError("'hyperplanes' must be a list of coefficient lists")
        variables = data.get('variables')
        if variables is not None and not isinstance(variables, list):
            raise ArrangementError(f"'variables' must be a list of names, got {variables!r}")
        name = data.get('name', name)
        if not isinstance(name, str):
            raise ArrangementError(f"'name' must be a string, got {name!r}")
        return cls(data['n'], tuple(tuple(r) for r in data['hyperplanes']),
                   tuple(variables) if variables else None, name)

    def to_dict(self):
        return {'n': self.n,
                'hyperplanes': [[str(v) for v in row] for row in self.hyperplanes],
                'variables': list(self.variables)}

    def __len__(self):
        return len(self.hyperplanes)

    def linear_forms(self):
        return [Polynomial.linear_form(row, self.variables) for row in self.hyperplanes]

    def defining_polynomial(self):
        """Q = product of the linear forms (1 for the empty arrangement)."""
        result = Polynomial.constant(1, self.variables)
        for form in self.linear_forms():
            result = result * form
        return result

    def rank(self):
        return len(row_space_basis(list(self.hyperplanes)))

    def is_essential(self):
        return self.rank() == self.n + 1


@dataclass(frozen=True)
class Flat:
    """An intersection of hyperplanes; ``closed_set`` lists every hyperplane containing it."""
    closed_set: tuple
    rank: int
    normals: tuple = field(compare=False)
    subspace: tuple = field(compare=False)

    @property
    def dimension(self):
        return len(self.subspace)


@dataclass(frozen=True)
class IntersectionLattice:
    ambient_dimension: int
    flats: tuple
    mobius: dict = field(hash=False)

    @property
    def bottom(self):
        return self.flats[0]

    @property
    def rank(self):
        return max(f.rank for f in self.flats)

    def flats_of_rank(self, rank):
        return [f for f in self.flats if f.rank == rank]

    def below(self, flat):
        """Flats y ≤ flat (inclusive)."""
        members = set(flat.closed_set)
        return [f for f in self.flats if set(f.closed_set) <= members]

    def mobius_of(self, flat):
        return self.mobius[flat.closed_set]


def _make_flat(arrangement, indices):
    vectors = [arrangement.hyperplanes[j] for j in indices]
    normals = row_space_basis(vectors)
    span = EchelonSpan()
    for row in normals:
        span.add(dense_to_sparse(row))
    closed = tuple(j for j, h in enumerate(arrangement.hyperplanes) if span.contains(dense_to_sparse(h)))
    return Flat(closed, len(normals), normals, kernel_basis(normals, arrangement.n + 1))


def build_lattice(arrangement):
    """Enumerate all flats rank by rank; each new flat is the closure of a flat plus one hyperplane."""
    bottom = _make_flat(arrangement, ())
    seen = {bottom.closed_set: bottom}
    current = [bottom]
    while current:
        following = {}
        for flat in current:
            for i in range(len(arrangement)):
                if i in flat.closed_set:
                    continue
                candidate = tuple(sorted(set(flat.closed_set) | {i}))
                new = _make_flat(arrangement, candidate)
                if new.closed_set not in seen:
                    seen[new.closed_set] = new
                    following[new.closed_set] = new
        current = [following[key] for key in sorted(following)]
    flats = tuple(sorted(seen.values(), key=lambda f: (f.rank, f.closed_set)))
    lattice = IntersectionLattice(arrangement.n + 1, flats, {})
    object.__setattr__(lattice, 'mobius', mobius_values(lattice))
    logger.debug(f"Lattice of {len(arrangement)} hyperplanes in P^{arrangement.n}: {len(flats)} flats")
    return lattice


def mobius_values(lattice):
    """μ(0̂, x) by μ(0̂) = 1 and Σ_{y ≤ x} μ(0̂, y) = 0 for x > 0̂."""
    values = {}
    for flat in lattice.flats:
        if flat.rank == 0:
            values[flat.closed_set] = 1
            continue
        members = set(flat.closed_set)
        values[flat.closed_set] = -sum(values[other.closed_set] for other in lattice.flats
                                       if other.rank < flat.rank and set(other.closed_set) < members)
    return values


def mobius_sum_rule_holds(lattice):
    for flat in lattice.flats:
        if flat.rank == 0:
            continue
        if sum(lattice.mobius_of(y) for y in lattice.below(flat)) != 0:
            return False
    return lattice.mobius_of(lattice.bottom) == 1


@dataclass(frozen=True)
class CharPoly:
    """χ(t) with coefficients in t-descending order."""
    coefficients: tuple

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def evaluate(self, t):
        value = 0
        for c in self.coefficients:
            value = value * t + c
        return value

    def to_list(self):
        return list(self.coefficients)

    def to_text(self, variable='t'):
        pieces = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            k = self.degree - i
            magnitude = abs(c)
            power = '' if k == 0 else (variable if k == 1 else f"{variable}^{k}")
            if not power:
                body = str(magnitude)
            else:
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return ''.join(pieces) or '0'

    def __str__(self):
        return self.to_text()


def characteristic_polynomial(arrangement, lattice=None):
    """χ(t) = Σ_x μ(0̂, x) t^{dim x}, of degree n + 1."""
    lattice = lattice or build_lattice(arrangement)
    size = arrangement.n + 1
    coefficients = [0] * (size + 1)
    for flat in lattice.flats:
        coefficients[flat.rank] += lattice.mobius_of(flat)
    return CharPoly(tuple(coefficients))


def poincare_polynomial(arrangement, lattice=None):
    """π(t) = Σ_x μ(0̂, x) (-t)^{rank x}, coefficients in ascending order."""
    lattice = lattice or build_lattice(arrangement)
    coefficients = [0] * (arrangement.n + 2)
    for flat in lattice.flats:
        coefficients[flat.rank] += (-1) ** flat.rank * lattice.mobius_of(flat)
    return tuple(coefficients)


def csm_complement(arrangement, lattice=None):
    """c_SM(1_{Pⁿ ∖ A}) = Σ_x μ(0̂, x) · c_SM(P(x)); flats of vector dimension 0 are empty."""
    lattice = lattice or build_lattice(arrangement)
    n = arrangement.n
    total = ChowClass(n, (0,) * (n + 1))
    for flat in lattice.flats:
        if flat.dimension == 0:
            continue
        total = total + csm_projective_subspace(flat.dimension - 1, n) * lattice.mobius_of(flat)
    return total


def csm_divisor(arrangement, lattice=None):
    """c_SM(1_D) for the union D of the hyperplanes, by additivity."""
    n = arrangement.n
    return csm_projective_subspace(n, n) - csm_complement(arrangement, lattice)


def euler_characteristic_complement(arrangement, lattice=None):
    """Σ_x μ(0̂, x) · χ(P(x)) = Σ_x μ(0̂, x) · dim x."""
    lattice = lattice or build_lattice(arrangement)
    return sum(lattice.mobius_of(flat) * flat.dimension for flat in lattice.flats)


def _deflate(coefficients, root):
    result = [coefficients[0]]
    for c in coefficients[1:-1]:
        result.append(c + result[-1] * root)
    return result


def factor_over_integers(chi):
    """Split χ as Π (t - r_i) · residual with integer r_i.

    Candidate roots are the divisors of the constant term (rational root theorem
    for a monic integer polynomial). Returns (roots ascending, residual coefficients).
    """
    coefficients = list(chi.coefficients if isinstance(chi, CharPoly) else chi)
    roots = []
    while len(coefficients) > 1:
        constant = coefficients[-1]
        if constant == 0:
            roots.append(0)
            coefficients.pop()
            continue
        candidates = sorted({d for k in range(1, abs(constant) + 1) if constant % k == 0 for d in (k, -k)},
                            key=lambda v: (abs(v), v))
        root = next((r for r in candidates if CharPoly(tuple(coefficients)).evaluate(r) == 0), None)
        if root is None:
            break
        roots.append(root)
        coefficients = _deflate(coefficients, root)
    return tuple(sorted(roots)), tuple(coefficients)


def integer_roots(chi):
    return factor_over_integers(chi)[0]
