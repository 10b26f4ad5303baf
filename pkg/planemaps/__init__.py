"""
planemaps: singularity census of polynomial plane maps F = (f, g).

Closed-form counts of cusps, nodes and the critical-curve topology, the
cusp count computed from quotient dimensions, effective genericity tests,
generalized cusp indices and the delta invariant at infinity.
"""
__version__ = '0.1.0'
