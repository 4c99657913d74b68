#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Buchberger-based ideal arithmetic over the rationals.

The engine works on plain term dicts and only wraps results back into
Polynomial objects at the API boundary. Every reduction step is charged to a
StepBudget; exceeding it raises ResourceLimitExceeded instead of running on.

Besides reduction, Groebner bases, membership and elimination, this module
builds the presentation ideals of the symmetric and Rees algebras of an ideal
(f_1, ..., f_k) in the ring of the f_i extended by T_1, ..., T_k and decides
whether the ideal is of linear type, i.e. whether both presentations agree.
"""

import functools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from constants import DEFAULT_STEP_CAP, PRESENTATION_PREFIX, REES_VARIABLE
from polynomials import GREVLEX, MonomialOrder, Polynomial, RingMismatchError

logger = logging.getLogger(__name__)


class ResourceLimitExceeded(RuntimeError):
    """The configured number of reduction steps was used up."""

    def __init__(self, steps, cap):
        super().__init__(f"Groebner step cap of {cap} reductions exceeded")
        self.steps = steps
        self.cap = cap


class StepBudget:
    """Counts reduction steps; one budget may be shared by a chain of computations."""

    def __init__(self, cap=DEFAULT_STEP_CAP):
        self.cap = cap
        self.steps = 0

    def tick(self, count=1):
        self.steps += count
        if self.cap is not None and self.steps > self.cap:
            raise ResourceLimitExceeded(self.steps, self.cap)


@dataclass(frozen=True)
class Ideal:
    generators: tuple
    varnames: tuple
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        varnames = tuple(self.varnames)
        generators = []
        for g in self.generators:
            if g.varnames != varnames:
                raise RingMismatchError(f"Generator {g} is not in the ring {varnames}")
            if not g.is_zero():
                generators.append(g)
        object.__setattr__(self, 'varnames', varnames)
        object.__setattr__(self, 'generators', tuple(generators))

    @classmethod
    def from_polynomials(cls, polynomials, varnames=None, order=GREVLEX):
        polynomials = list(polynomials)
        if varnames is None:
            if not polynomials:
                raise ValueError("Cannot infer the ring of an empty generator list")
            varnames = polynomials[0].varnames
        return cls(tuple(polynomials), tuple(varnames), order)

    def is_zero(self):
        return not self.generators

    def contains(self, p, budget=None):
        return ideal_membership(p, self, budget)

    def __str__(self):
        return '(' + ', '.join(str(g) for g in self.generators) + ')'


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner bases are sorted by ascending leading monomial and monic."""
    elements: tuple
    varnames: tuple
    order: MonomialOrder = GREVLEX
    reduced: bool = True

    def reduce(self, p, budget=None):
        if p.varnames != self.varnames:
            raise RingMismatchError(f"{p} is not in the ring {self.varnames}")
        key = _cached_key(self.order)
        basis = [_entry(g.terms, key) for g in self.elements]
        remainder, _ = _reduce_terms(p.terms, basis, key, budget or StepBudget())
        return Polynomial._raw(remainder, self.varnames)

    def contains(self, p, budget=None):
        return self.reduce(p, budget).is_zero()

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.elements]

    def ideal(self):
        return Ideal(self.elements, self.varnames, self.order)

    def __str__(self):
        return '{' + ', '.join(str(g) for g in self.elements) + '}'


@dataclass(frozen=True)
class SyzygyModule:
    """Relations (a_1..a_m) with Σ a_i f_i = 0, each with integer primitive coefficients."""
    generators: tuple
    relations: tuple

    def is_zero(self):
        return not self.relations

    def to_strings(self):
        return [[str(a) for a in relation] for relation in self.relations]


@dataclass(frozen=True)
class PresentationIdeal:
    """Ideal in the ring base_vars + presentation_vars, homogeneous in the T-grading."""
    base_vars: tuple
    presentation_vars: tuple
    generators: tuple = field(default=())

    @property
    def varnames(self):
        return self.base_vars + self.presentation_vars

    def ideal(self):
        return Ideal(self.generators, self.varnames)

    def is_zero(self):
        return not self.generators

    def to_strings(self):
        return [str(g) for g in self.generators]


@dataclass(frozen=True)
class LinearTypeResult:
    linear_type: bool
    witness: object
    sym: PresentationIdeal
    rees: PresentationIdeal

    def __iter__(self):
        return iter((self.linear_type, self.witness))


# term-dict engine

def _cached_key(order):
    return functools.lru_cache(maxsize=None)(order.key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monomial_quotient(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _entry(terms, key):
    lm = max(terms, key=key)
    return lm, terms[lm], terms


def _add_scaled(target, source, factor, shift):
    """target += factor * x^shift * source (in place)."""
    for exps, coeff in source.items():
        moved = tuple(a + b for a, b in zip(exps, shift))
        value = target.get(moved, 0) + factor * coeff
        if value:
            target[moved] = value
        else:
            target.pop(moved, None)


def _reduce_terms(terms, basis, key, budget, track=False):
    """Full reduction of ``terms`` by ``basis`` [(lm, lc, terms)]; returns (remainder, quotients)."""
    p = dict(terms)
    remainder = {}
    quotients = [{} for _ in basis] if track else None
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, lc, g) in enumerate(basis):
            if _divides(lm, m):
                shift = _monomial_quotient(m, lm)
                factor = c / lc
                _add_scaled(p, g, -factor, shift)
                if track:
                    q = quotients[i]
                    value = q.get(shift, 0) + factor
                    if value:
                        q[shift] = value
                    else:
                        q.pop(shift, None)
                budget.tick()
                break
        else:
            remainder[m] = c
            del p[m]
    return remainder, quotients


def _spoly_terms(f, g, key):
    lm_f, lc_f, tf = f
    lm_g, lc_g, tg = g
    m = _monomial_lcm(lm_f, lm_g)
    s = {}
    _add_scaled(s, tf, 1 / lc_f, _monomial_quotient(m, lm_f))
    _add_scaled(s, tg, -1 / lc_g, _monomial_quotient(m, lm_g))
    return s


def _update(G, P, f, key):
    """Add f to the basis G and prune the pair set with the Gebauer-Moeller criteria."""
    lmf = f[0]
    lmG = [g[0] for g in G]
    P = {p for p in P if (not _divides(lmf, _monomial_lcm(lmG[p[0]], lmG[p[1]])) or
                          _monomial_lcm(lmG[p[0]], lmG[p[1]]) == _monomial_lcm(lmG[p[0]], lmf) or
                          _monomial_lcm(lmG[p[0]], lmG[p[1]]) == _monomial_lcm(lmG[p[1]], lmf))}
    lcm_dict = {}
    for i in range(len(G)):
        lcm_dict.setdefault(_monomial_lcm(lmG[i], lmf), []).append(i)
    minimalized = []
    for L in sorted(lcm_dict, key=key):
        if all(not _divides(L_, L) for L_ in minimalized):
            minimalized.append(L)
    new_pairs = set()
    for L in minimalized:
        coprime = any(L == tuple(a + b for a, b in zip(lmG[i], lmf)) for i in lcm_dict[L])
        if not coprime:
            new_pairs.add((min(lcm_dict[L]), len(G)))
    return G + [f], P | new_pairs


def _minimalize(G, key):
    kept = []
    for g in sorted(G, key=lambda e: key(e[0])):
        if all(not _divides(k[0], g[0]) for k in kept):
            kept.append(g)
    return kept


def _interreduce(G, key, budget):
    result = []
    for i, g in enumerate(G):
        others = [h for j, h in enumerate(G) if j != i]
        remainder, _ = _reduce_terms(g[2], others, key, budget)
        lc = remainder[g[0]]
        monic = {e: c / lc for e, c in remainder.items()}
        result.append((g[0], Fraction(1), monic))
    return result


def _groebner_terms(polys, key, budget, basis=()):
    """Buchberger with the normal selection strategy.

    Inputs wait in a queue and are reduced when their leading monomial comes up,
    so homogeneous input is processed degree by degree. ``basis`` must already be
    a Groebner basis; pairs among its elements are not formed.
    """
    G, P = list(basis), set()
    pending = sorted((_entry(terms, key) for terms in polys if terms), key=lambda e: key(e[0]), reverse=True)
    while P or pending:
        pair = min(P, key=lambda p: (key(_monomial_lcm(G[p[0]][0], G[p[1]][0])), p)) if P else None
        if pending and (pair is None or
                        key(pending[-1][0]) <= key(_monomial_lcm(G[pair[0]][0], G[pair[1]][0]))):
            terms = pending.pop()[2]
        else:
            P.remove(pair)
            terms = _spoly_terms(G[pair[0]], G[pair[1]], key)
        remainder, _ = _reduce_terms(terms, G, key, budget)
        if remainder:
            G, P = _update(G, P, _entry(remainder, key), key)
    logger.debug(f"Buchberger finished with {len(G)} elements after {budget.steps} steps")
    G = _interreduce(_minimalize(G, key), key, budget)
    return sorted(G, key=lambda e: key(e[0]))


# public operations

def divide_reduce(p, divisors, order=GREVLEX, budget=None):
    """Multivariate division: returns (quotients, remainder) with p = Σ q_i d_i + r."""
    divisors = list(divisors)
    for d in divisors:
        if d.varnames != p.varnames:
            raise RingMismatchError(f"Divisor {d} is not in the ring {p.varnames}")
        if d.is_zero():
            raise ValueError("Cannot divide by the zero polynomial")
    key = _cached_key(order)
    basis = [_entry(d.terms, key) for d in divisors]
    remainder, quotients = _reduce_terms(p.terms, basis, key, budget or StepBudget(), track=True)
    return ([Polynomial._raw(q, p.varnames) for q in quotients],
            Polynomial._raw(remainder, p.varnames))


def s_polynomial(f, g, order=GREVLEX):
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    f._check_ring(g)
    key = _cached_key(order)
    return Polynomial._raw(_spoly_terms(_entry(f.terms, key), _entry(g.terms, key), key), f.varnames)


def buchberger(ideal, budget=None):
    """Reduced Groebner basis of a nonzero ideal."""
    if ideal.is_zero():
        raise ValueError("The zero ideal has no nonempty Groebner basis")
    budget = budget or StepBudget()
    key = _cached_key(ideal.order)
    logger.debug(f"Buchberger on {len(ideal.generators)} generators in {len(ideal.varnames)} variables, "
                 f"order {ideal.order}")
    G = _groebner_terms([g.terms for g in ideal.generators], key, budget)
    elements = tuple(Polynomial._raw(terms, ideal.varnames) for _, _, terms in G)
    return GroebnerBasis(elements, ideal.varnames, ideal.order, True)


def ideal_membership(p, ideal, budget=None):
    if p.varnames != ideal.varnames:
        raise RingMismatchError(f"{p} is not in the ring {ideal.varnames}")
    if p.is_zero():
        return True
    if ideal.is_zero():
        return False
    return buchberger(ideal, budget).contains(p, budget)


def ideal_equal(first, second, budget=None):
    """Mutual containment of two ideals in the same ring."""
    if first.varnames != second.varnames:
        raise RingMismatchError("Ideals live in different rings")
    return (all(ideal_membership(g, second, budget) for g in first.generators) and
            all(ideal_membership(g, first, budget) for g in second.generators))


def eliminate(ideal, drop_vars, budget=None):
    """Generators of the ideal intersected with the subring without ``drop_vars``.

    The result lives in the remaining variables (original relative order), graded
    reverse lexicographic.
    """
    drop = [v for v in ideal.varnames if v in set(drop_vars)]
    unknown = set(drop_vars) - set(ideal.varnames)
    if unknown:
        raise ValueError(f"Cannot eliminate {sorted(unknown)}: not ring variables of {ideal.varnames}")
    keep = tuple(v for v in ideal.varnames if v not in drop)
    if ideal.is_zero():
        return Ideal((), keep)
    work_vars = tuple(drop) + keep
    order = MonomialOrder('block', len(drop))
    work = Ideal(tuple(g.in_ring(work_vars) for g in ideal.generators), work_vars, order)
    basis = buchberger(work, budget)
    k = len(drop)
    kept = [g for g in basis.elements if all(not any(e[:k]) for e in g.terms)]
    result = tuple(Polynomial._raw({e[k:]: c for e, c in g.terms.items()}, keep) for g in kept)
    logger.debug(f"Eliminated {drop}: {len(result)} of {len(basis.elements)} basis elements survive")
    return Ideal(result, keep)


def _normalize_relation(relation):
    denominator = 1
    numerator = 0
    for a in relation:
        for c in a.terms.values():
            denominator = lcm(denominator, c.denominator)
    for a in relation:
        for c in a.terms.values():
            numerator = gcd(numerator, (c * denominator).numerator)
    factor = Fraction(denominator, numerator)
    first = next(a for a in relation if not a.is_zero())
    if first.leading_coefficient() < 0:
        factor = -factor
    return tuple(a.scale(factor) for a in relation)


def _chain_redundant(G, i, j, done):
    """Buchberger's chain criterion: some g_k with lm_k | lcm(lm_i, lm_j) has both pairs settled."""
    L = _monomial_lcm(G[i][0], G[j][0])
    for k in range(len(G)):
        if k in (i, j) or not _divides(G[k][0], L):
            continue
        if (min(i, k), max(i, k)) in done and (min(j, k), max(j, k)) in done:
            return True
    return False


def syzygies(f, budget=None):
    """Generators of the module of relations among ``f``.

    Runs Buchberger on f with cofactor tracking. Pairs are taken by lowest lcm and
    skipped only under the chain criterion, whose relations follow from the others. Pairs whose
    S-polynomial reduces to zero (and coprime pairs, via the Koszul relation) give
    relations among the basis elements; substituting the cofactors maps them onto
    relations among f, and these generate all of them because f is part of the basis.
    """
    f = list(f)
    if not f:
        raise ValueError("syzygies needs a nonempty generator list")
    varnames = f[0].varnames
    for g in f:
        if g.varnames != varnames:
            raise RingMismatchError("Generators live in different rings")
    budget = budget or StepBudget()
    key = _cached_key(GREVLEX)
    m = len(f)
    zero = (0,) * len(varnames)
    raw = []
    G, reps = [], []
    for i, g in enumerate(f):
        unit = [{} for _ in range(m)]
        unit[i] = {zero: Fraction(1)}
        if g.is_zero():
            raw.append(unit)
            continue
        G.append(_entry(g.terms, key))
        reps.append(unit)
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    done = set()
    while pairs:
        i, j = min(pairs, key=lambda p: (key(_monomial_lcm(G[p[0]][0], G[p[1]][0])), p))
        pairs.remove((i, j))
        done.add((i, j))
        lm_i, lc_i, g_i = G[i]
        lm_j, lc_j, g_j = G[j]
        if _chain_redundant(G, i, j, done):
            continue
        combined = [{} for _ in range(m)]
        if _monomial_lcm(lm_i, lm_j) == tuple(a + b for a, b in zip(lm_i, lm_j)):
            # Koszul relation g_j e_i - g_i e_j
            for k in range(m):
                for exps, coeff in g_j.items():
                    _add_scaled(combined[k], reps[i][k], coeff, exps)
                for exps, coeff in g_i.items():
                    _add_scaled(combined[k], reps[j][k], -coeff, exps)
            raw.append(combined)
            continue
        L = _monomial_lcm(lm_i, lm_j)
        s = _spoly_terms(G[i], G[j], key)
        remainder, quotients = _reduce_terms(s, G, key, budget, track=True)
        for k in range(m):
            _add_scaled(combined[k], reps[i][k], 1 / lc_i, _monomial_quotient(L, lm_i))
            _add_scaled(combined[k], reps[j][k], -1 / lc_j, _monomial_quotient(L, lm_j))
            for q, rep in zip(quotients, reps):
                for exps, coeff in q.items():
                    _add_scaled(combined[k], rep[k], -coeff, exps)
        if remainder:
            G.append(_entry(remainder, key))
            reps.append(combined)
            pairs.update((i, len(G) - 1) for i in range(len(G) - 1))
        else:
            raw.append(combined)
    relations = []
    seen = set()
    for vector in raw:
        relation = tuple(Polynomial._raw(terms, varnames) for terms in vector)
        if all(a.is_zero() for a in relation):
            continue
        relation = _normalize_relation(relation)
        if relation in seen:
            continue
        total = Polynomial.zero(varnames)
        for a, g in zip(relation, f):
            total = total + a * g
        if not total.is_zero():
            raise RuntimeError(f"Computed relation {[str(a) for a in relation]} does not annihilate the generators")
        seen.add(relation)
        relations.append(relation)
    logger.debug(f"syzygies: {len(relations)} relations among {m} generators")
    return SyzygyModule(tuple(f), tuple(relations))


def jacobian_ideal(h):
    """(h, ∂_1 h, ..., ∂_m h) in the ring of h."""
    if h.is_constant():
        raise ValueError(f"The Jacobian ideal needs a nonconstant polynomial, got {h}")
    generators = [h] + [h.partial(i) for i in range(h.nvars)]
    return Ideal(tuple(generators), h.varnames)


def jacobian_generators(h):
    """Generators of the Jacobian ideal; for homogeneous h the nonzero partials suffice (Euler)."""
    partials = [p for p in (h.partial(i) for i in range(h.nvars)) if not p.is_zero()]
    if h.is_homogeneous() and partials:
        return partials
    return [h] + partials


def presentation_variables(varnames, count):
    prefix = PRESENTATION_PREFIX
    while any(v.startswith(prefix) for v in varnames):
        prefix += '_'
    return tuple(f"{prefix}{i + 1}" for i in range(count))


def _aux_variable(varnames):
    name = REES_VARIABLE
    while name in varnames:
        name += '_'
    return name


def _check_generators(f):
    f = [g for g in f if not g.is_zero()]
    if not f:
        raise ValueError("Presentation ideals need at least one nonzero generator")
    varnames = f[0].varnames
    if any(g.varnames != varnames for g in f):
        raise RingMismatchError("Generators live in different rings")
    return f, varnames


def sym_ideal(f, budget=None):
    """Presentation of Sym(I): the linear forms Σ a_i T_i over the relations (a_i) among f."""
    f, base = _check_generators(f)
    tvars = presentation_variables(base, len(f))
    ring = base + tvars
    module = syzygies(f, budget)
    generators = []
    for relation in module.relations:
        form = Polynomial.zero(ring)
        for a, t in zip(relation, tvars):
            form = form + a.in_ring(ring) * Polynomial.variable(t, ring)
        generators.append(form)
    return PresentationIdeal(base, tvars, tuple(generators))


def rees_ideal(f, budget=None):
    """Presentation of the Rees algebra: kernel of T_i -> t f_i, by eliminating t."""
    f, base = _check_generators(f)
    tvars = presentation_variables(base, len(f))
    t = _aux_variable(base + tvars)
    ring = (t,) + base + tvars
    tt = Polynomial.variable(t, ring)
    generators = [Polynomial.variable(T, ring) - tt * g.in_ring(ring) for T, g in zip(tvars, f)]
    eliminated = eliminate(Ideal(tuple(generators), ring), [t], budget)
    return PresentationIdeal(base, tvars, eliminated.generators)


def _weighted_degree(exps, weights):
    return sum(e * w for e, w in zip(exps, weights))


def _minimal_monomials(monomials):
    kept = []
    for m in sorted(set(monomials), key=sum):
        if not any(_divides(k, m) for k in kept):
            kept.append(m)
    return kept


def _series_mul(a, b):
    result = {}
    for da, ca in a.items():
        for db, cb in b.items():
            result[da + db] = result.get(da + db, 0) + ca * cb
    return {d: c for d, c in result.items() if c}


def _numerator(gens, weights, budget):
    """K-polynomial of a minimal monomial ideal by pivoting on its most shared variable."""
    budget.tick()
    if not gens:
        return {0: 1}
    if any(not any(m) for m in gens):
        return {}
    counts = Counter(i for m in gens for i, e in enumerate(m) if e)
    shared = [i for i, c in counts.items() if c > 1]
    if not shared:
        result = {0: 1}
        for m in gens:
            result = _series_mul(result, {0: 1, _weighted_degree(m, weights): -1})
        return result
    v = max(shared, key=lambda i: (counts[i], -i))
    e = min(m[v] for m in gens if m[v])
    pivot = tuple(e if i == v else 0 for i in range(len(weights)))
    # K(I) = K(I + (p)) + t^deg(p) K(I : p)
    plus = [m for m in gens if not m[v]] + [pivot]
    colon = _minimal_monomials(tuple(max(a - b, 0) for a, b in zip(m, pivot)) for m in gens)
    result = dict(_numerator(plus, weights, budget))
    shift = e * weights[v]
    for d, c in _numerator(colon, weights, budget).items():
        result[d + shift] = result.get(d + shift, 0) + c
    return {d: c for d, c in result.items() if c}


def hilbert_numerator(monomials, weights, budget=None):
    """
    Numerator K(t) of the Hilbert series K(t) / Π(1 - t^w_i) of S / (monomials).

    Args:
        monomials: Exponent tuples generating a monomial ideal
        weights: Positive degree of each variable
        budget: Optional StepBudget, charged once per pivot

    Returns:
        list: Coefficients of 1, t, t^2, ...
    """
    if any(w <= 0 for w in weights):
        raise ValueError(f"Variable weights must be positive, got {tuple(weights)}")
    series = _numerator(_minimal_monomials(tuple(m) for m in monomials), tuple(weights), budget or StepBudget(None))
    if not series:
        return [0]
    return [series.get(d, 0) for d in range(max(series) + 1)]


def _presentation_weights(f, sym):
    """Degrees making f and the symmetric ideal graded (x_i -> 1, T_i -> deg f_i), or None."""
    if any(g.is_constant() or not g.is_homogeneous() for g in f):
        return None
    weights = (1,) * len(sym.base_vars) + tuple(g.total_degree() for g in f)
    for form in sym.generators:
        if len({_weighted_degree(e, weights) for e in form.terms}) > 1:
            return None
    return weights


def _regular_on_sym(f, sym, weights, budget):
    """Whether a generator g of I is a nonzerodivisor modulo the symmetric ideal L.

    The Rees ideal is L : g^∞, so this holds exactly when I is of linear type.
    For graded L and g it is read off the Hilbert series:
    HS(S/(L + g)) = (1 - t^deg g) HS(S/L).
    """
    if sym.is_zero():
        return True
    g = min(f, key=lambda p: (len(p.terms), p.total_degree()))
    key = _cached_key(GREVLEX)
    basis = _groebner_terms([p.terms for p in sym.generators], key, budget)
    before = _numerator(_minimal_monomials(e[0] for e in basis), weights, budget)
    extended = _groebner_terms([g.in_ring(sym.varnames).terms], key, budget, basis)
    after = _numerator(_minimal_monomials(e[0] for e in extended), weights, budget)
    logger.debug(f"Hilbert numerators: L {before}, L + ({g}) {after}")
    return after == _series_mul(before, {0: 1, g.total_degree(): -1})


def is_linear_type(f, budget=None):
    """Decide Rees(I) = Sym(I) for I = (f).

    Graded input is decided by the Hilbert series test of _regular_on_sym. A negative
    answer, and input that is not graded, fall back to the Rees ideal: Sym is
    always contained in it, so it is enough to test every Rees generator for
    membership in the Sym ideal. The witness is the first Rees generator outside
    it, or None.
    """
    budget = budget or StepBudget()
    f, _ = _check_generators(f)
    sym = sym_ideal(f, budget)
    weights = _presentation_weights(f, sym)
    graded_verdict = None
    if weights is not None:
        graded_verdict = _regular_on_sym(f, sym, weights, budget)
        if graded_verdict:
            logger.info(f"Linear type confirmed by Hilbert series after {budget.steps} reduction steps")
            return LinearTypeResult(True, None, sym, sym)
        logger.debug("Symmetric algebra has torsion; eliminating for a witness")
    try:
        rees = rees_ideal(f, budget)
        sym_basis = None if sym.is_zero() else buchberger(sym.ideal(), budget)
        for g in rees.generators:
            member = sym_basis.contains(g, budget) if sym_basis is not None else g.is_zero()
            if not member:
                logger.info(f"Not of linear type: {g} is a Rees relation outside the symmetric algebra ideal")
                return LinearTypeResult(False, g, sym, rees)
    except ResourceLimitExceeded:
        if graded_verdict is None:
            raise
        logger.info("Not of linear type; no witness within the step cap")
        return LinearTypeResult(False, None, sym, None)
    logger.info(f"Linear type confirmed after {budget.steps} reduction steps")
    return LinearTypeResult(True, None, sym, rees)


def polynomial_gcd(a, b, budget=None):
    """Greatest common divisor (monic) via (a) ∩ (b) = (lcm(a, b))."""
    a._check_ring(b)
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    varnames = a.varnames
    t = _aux_variable(varnames)
    ring = (t,) + varnames
    tt = Polynomial.variable(t, ring)
    generators = (tt * a.in_ring(ring), (1 - tt) * b.in_ring(ring))
    intersection = eliminate(Ideal(generators, ring), [t], budget)
    common = min(intersection.generators, key=lambda g: g.total_degree())
    quotients, remainder = divide_reduce(a * b, [common], budget=budget)
    if not remainder.is_zero():
        raise RuntimeError("Inexact division while computing a polynomial gcd")
    return quotients[0].monic()
