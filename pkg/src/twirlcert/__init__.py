"""Twirling-based certification of Clifford gates.

Plan certification experiments for an n-qubit Clifford target, run them on
a dense density-matrix simulator under configurable noise (or ingest lab
records), and estimate the average gate fidelity with Bayesian uncertainty.
Includes single-qubit randomized benchmarking for the local-gate quality
check the protocol relies on.
"""

from .pauli import SignedPauli, sample_random_pauli
from .tableau import (
    Circuit,
    CliffordTableau,
    CircuitParseError,
    prep_clifford_for,
    meas_basis_change,
)

__version__ = "0.1.0"

__all__ = [
    "SignedPauli",
    "sample_random_pauli",
    "Circuit",
    "CliffordTableau",
    "CircuitParseError",
    "prep_clifford_for",
    "meas_basis_change",
    "__version__",
]
