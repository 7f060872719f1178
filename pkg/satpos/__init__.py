"""
Exact lattice-point, quasi-polynomial and representation-theoretic multiplicity toolkit.
"""
