"""Bit-packed linear algebra over the two-element field.

Vectors are Python ints (bit i = coordinate i); a matrix is the list of
its column vectors.  Elimination keeps a basis keyed by leading bit, so
rank and membership queries are incremental and deterministic.
"""

from __future__ import annotations


class Gf2Basis:
    """Row-echelon basis of a span of bit-vectors."""

    def __init__(self):
        self.pivots = {}  # leading bit position -> reduced vector

    def reduce(self, vec):
        """Reduce vec against the basis; returns the remainder."""
        while vec:
            lead = vec.bit_length() - 1
            piv = self.pivots.get(lead)
            if piv is None:
                return vec
            vec ^= piv
        return 0

    def add(self, vec):
        """Insert vec; returns True if it enlarged the span."""
        vec = self.reduce(vec)
        if vec == 0:
            return False
        self.pivots[vec.bit_length() - 1] = vec
        return True

    def contains(self, vec):
        return self.reduce(vec) == 0

    @property
    def rank(self):
        return len(self.pivots)


def rank(columns):
    """Rank of the matrix with the given column vectors."""
    basis = Gf2Basis()
    for c in columns:
        basis.add(c)
    return basis.rank


def in_span(columns, target):
    """Whether target lies in the span of the columns."""
    basis = Gf2Basis()
    for c in columns:
        basis.add(c)
    return basis.contains(target)


def matvec(columns, x_bits):
    """Product of the matrix (given by columns) with the 0/1 vector x."""
    out = 0
    x = x_bits
    i = 0
    while x:
        if x & 1:
            out ^= columns[i]
        x >>= 1
        i += 1
    return out
