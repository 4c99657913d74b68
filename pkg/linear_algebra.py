#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact linear algebra over the rationals.

Rows are sparse dicts column -> Fraction. Elimination keeps the pivot rows
fully reduced (Gauss-Jordan), so the pivot set and the reduced rows do not
depend on the order rows are fed in. Used by the arrangement lattice (flats)
and by the logarithmic derivation solvers.
"""

import logging
from fractions import Fraction

logger = logging.getLogger(__name__)


def _reduce_row(row, pivots):
    for column in [c for c in row if c in pivots]:
        factor = row.get(column)
        if not factor:
            continue
        for c, v in pivots[column].items():
            value = row.get(c, 0) - factor * v
            if value:
                row[c] = value
            else:
                row.pop(c, None)
    return row


class EchelonSpan:
    """Incrementally maintained reduced echelon basis of a span of sparse vectors.

    ``key`` orders the columns; the smallest column of a new row becomes its pivot.
    """

    def __init__(self, key=None):
        self.key = key
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vector):
        row = {c: Fraction(v) for c, v in vector.items() if v}
        return _reduce_row(row, self.pivots)

    def contains(self, vector):
        return not self.reduce(vector)

    def add(self, vector):
        """Add ``vector``; returns False when it already lies in the span."""
        row = self.reduce(vector)
        if not row:
            return False
        column = min(row, key=self.key) if self.key else min(row)
        scale = row[column]
        row = {c: v / scale for c, v in row.items()}
        for other in self.pivots.values():
            factor = other.get(column)
            if factor:
                for c, v in row.items():
                    value = other.get(c, 0) - factor * v
                    if value:
                        other[c] = value
                    else:
                        other.pop(c, None)
        self.pivots[column] = row
        return True

    def rows(self):
        ordered = sorted(self.pivots, key=self.key) if self.key else sorted(self.pivots)
        return [(c, dict(self.pivots[c])) for c in ordered]


def rref(rows):
    """Reduced row echelon form of sparse rows; returns (pivot rows in column order, pivot columns)."""
    span = EchelonSpan()
    for row in rows:
        span.add(row)
    ordered = span.rows()
    return [r for _, r in ordered], [c for c, _ in ordered]


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {v : row·v = 0 for every row}, one vector per free column (ascending).

    Each vector has a 1 in its free column and is returned as a dense list of Fractions.
    """
    reduced, pivot_columns = rref(rows)
    pivot_rows = dict(zip(pivot_columns, reduced))
    basis = []
    for free in range(ncols):
        if free in pivot_rows:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for column, row in pivot_rows.items():
            value = row.get(free)
            if value:
                vector[column] = -value
        basis.append(vector)
    logger.debug(f"nullspace: {len(rows)} equations, {ncols} unknowns, dimension {len(basis)}")
    return basis


def dense_to_sparse(vector):
    return {i: Fraction(v) for i, v in enumerate(vector) if v}


def row_space_basis(vectors):
    """Canonical RREF basis (tuples of Fractions) of the span of dense vectors."""
    if not vectors:
        return ()
    ncols = len(vectors[0])
    reduced, _ = rref([dense_to_sparse(v) for v in vectors])
    return tuple(tuple(row.get(i, Fraction(0)) for i in range(ncols)) for row in reduced)


def in_row_space(vector, basis):
    span = EchelonSpan()
    for row in basis:
        span.add(dense_to_sparse(row))
    return span.contains(dense_to_sparse(vector))


def kernel_basis(vectors, ncols):
    """Dense basis of the common zero set of the linear forms ``vectors`` in ``ncols`` unknowns."""
    return tuple(tuple(v) for v in nullspace([dense_to_sparse(v) for v in vectors], ncols))


def determinant(matrix):
    """Determinant of a square matrix of Fractions by exact elimination."""
    size = len(matrix)
    work = [[Fraction(v) for v in row] for row in matrix]
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if work[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        result *= work[col][col]
        for r in range(col + 1, size):
            factor = work[r][col] / work[col][col]
            if factor:
                for c in range(col, size):
                    work[r][c] -= factor * work[col][c]
    return result
