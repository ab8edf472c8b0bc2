"""
Momentcone Package
Exact-arithmetic toolkit for truncated moment problems: moment curves and maps,
atomic decompositions, facial invariants of the moment cone on finite ground sets,
Carathéodory-number bounds and maximal masses.
"""

__version__ = "0.1.0"
