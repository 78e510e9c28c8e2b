"""Exact quantum-group combinatorics and verification toolkit.

Root and Weyl group combinatorics, exact Q(q) arithmetic, quantized
enveloping algebra normal forms, parabolic Verma modules, resolutions of
finite-dimensional modules, induced-module double complexes, and the
rank-one quantum-sphere differential calculus.
"""

__version__ = "0.1.0"
