"""Fidelity versus mutual information as figures of merit for error correction.

Submodules:

* :mod:`qecfom.numerics`   dense Hermitian linear algebra and entropy helpers
* :mod:`qecfom.classical`  4-bit repetition code on a binary symmetric channel
* :mod:`qecfom.fivequbit`  five-qubit code, bit-flip channel, syndrome recovery
* :mod:`qecfom.fom`        quantum mutual information and average fidelity
* :mod:`qecfom.sweep`      figure-data sweeps; :mod:`qecfom.cli` wraps them
"""

from qecfom.classical import (
    ChannelParams,
    ClassicalChannelMatrix,
    mutual_info_strategy1,
    mutual_info_strategy2,
    repetition4_channel,
    shannon_example,
)
from qecfom.fivequbit import LogicalState, joint_state, joint_states
from qecfom.fom import FomResult, average_fidelity, evaluate, quantum_mutual_info

__version__ = "0.1.0"

__all__ = [
    "ChannelParams",
    "ClassicalChannelMatrix",
    "FomResult",
    "LogicalState",
    "average_fidelity",
    "evaluate",
    "joint_state",
    "joint_states",
    "mutual_info_strategy1",
    "mutual_info_strategy2",
    "quantum_mutual_info",
    "repetition4_channel",
    "shannon_example",
]
