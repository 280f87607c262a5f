"""Exact computations in models of the theory of centripetal precontraction
groups with a discrete contraction image: elements and the contraction map,
terms and formulas, chi-functions, piecewise decompositions, definable sets
and model extensions, each checked against a brute-force window oracle.
"""
