"""Local-unitary invariants and entanglement tests for two-qubit states."""
from .bloch import BlochForm, bloch_power, bloch_product, commutator_bloch, decompose, reconstruct
from .entanglement import (
    EntanglementVerdict,
    bell_diagonal_entangled,
    bisect_werner,
    is_entangled_bargmann,
    is_entangled_makhlin,
    is_entangled_ppt,
    positivity_check,
    werner_threshold,
)
from .invariants import (
    BargmannVector,
    MakhlinVector,
    L_from_B,
    bargmann_direct,
    bargmann_from_L,
    char_coeffs,
    makhlin_I,
    makhlin_L,
)
from .luequiv import PermutationTuple, Verdict, lu_equivalent, permutation_trace
from .states import StateParams, params_from_state, random_density, state_from_params, werner

__version__ = "0.1.0"

__all__ = [
    "BlochForm",
    "bloch_power",
    "bloch_product",
    "commutator_bloch",
    "decompose",
    "reconstruct",
    "EntanglementVerdict",
    "bell_diagonal_entangled",
    "bisect_werner",
    "is_entangled_bargmann",
    "is_entangled_makhlin",
    "is_entangled_ppt",
    "positivity_check",
    "werner_threshold",
    "BargmannVector",
    "MakhlinVector",
    "L_from_B",
    "bargmann_direct",
    "bargmann_from_L",
    "char_coeffs",
    "makhlin_I",
    "makhlin_L",
    "PermutationTuple",
    "Verdict",
    "lu_equivalent",
    "permutation_trace",
    "StateParams",
    "params_from_state",
    "random_density",
    "state_from_params",
    "werner",
]
