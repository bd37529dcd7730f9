"""
Microcausal - Numerical Toolkit for Microcausality and No-Signalling

Finite-dimensional no-signalling checks, constructive factorization of
bipartite unitaries, a Lüders-measurement signalling simulator and a
truncated free-field model of the spin-statistics bracket table.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
