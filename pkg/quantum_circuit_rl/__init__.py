"""
Quantum Circuit RL

This package synthesizes small (2-3 qubit) quantum circuits with tabular Q-learning
and a from-scratch deep Q-network, searching over three MDP formulations of the
circuit: the accumulated unitary, the reversed unitary walk back to identity, and the
evolving state vector.
It ships its own gate-algebra simulator built on NumPy.
"""

from __future__ import annotations

__version__ = "0.1.0"
