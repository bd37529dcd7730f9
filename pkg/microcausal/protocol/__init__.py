"""
Microcausal Protocol Layer

Alice/Bob signalling protocol: exact marginals, Monte Carlo shots and
shot-count bounds.
"""

from microcausal.protocol.schemas import ProtocolFile, ShotsBound, SignalReport
from microcausal.protocol.signal import (
    ProtocolSpec,
    bob_marginal_distributions,
    coarse_grain,
    shots_for_error,
    simulate_protocol,
    total_variation,
)

__all__ = [
    "ProtocolFile",
    "ShotsBound",
    "SignalReport",
    "ProtocolSpec",
    "bob_marginal_distributions",
    "coarse_grain",
    "shots_for_error",
    "simulate_protocol",
    "total_variation",
]
