"""Exact computational toolkit for triangle-point groups.

A triangle-point group is a finite group generated by three involutions
a, b, c such that ab is also an involution and every product of two
elements from the union of the conjugacy classes of a, b, c and ab has
order at most 6.  This package rebuilds the classification of such
groups from scratch: the eleven maximal groups, their normal-subgroup
and quotient tables, the nine dihedral axial algebras used to test
embeddability, and the obstruction proofs that exclude ten quotient
types; the classification report reconciles the computed list of
admissible groups against the stated headline counts.

All arithmetic is exact (arbitrary-precision rationals); no floating
point is used anywhere.
"""

__version__ = "0.1.0"
