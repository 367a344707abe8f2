"""Quandle cocycle invariants of oriented knots and links.

Subpackages by layer: algebra (quandles, modules, coefficients),
cohomology (two-term distributive complexes), diagram (rotation-system
link diagrams), coloring (arc and region colorings), invariants (weight
multisets in all flavors), cli (the qci command).
"""

__version__ = "0.1.0"
