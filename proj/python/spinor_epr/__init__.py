"""Dirac-spinor entanglement toolkit.

Spin-spin coupling from tree-level one-photon exchange, EPR-state generation
by exchange-interaction evolution, and Lorentz invariance of the degree of
entanglement.
"""

from ._core import (
    PhysicsError,
    boost_epr,
    coupling_j,
    epr_report,
    epr_spin_amplitudes,
    evolve_spin_amplitudes,
    extraction_deviation,
    gordon_deviation,
    invariance_scan,
    maximal_entanglement_time,
    tree_amplitude,
)

__all__ = [
    "PhysicsError",
    "boost_epr",
    "coupling_j",
    "epr_report",
    "epr_spin_amplitudes",
    "evolve_spin_amplitudes",
    "extraction_deviation",
    "gordon_deviation",
    "invariance_scan",
    "maximal_entanglement_time",
    "tree_amplitude",
]
