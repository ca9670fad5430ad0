"""
Coxeter - root systems, Catalan and Shi deformations, and conjecture checkers
"""

from hyperfree.coxeter.conjectures import (
    ConjectureCheck,
    ConjectureResult,
    conjecture_fe,
    conjecture_hshift,
    conjecture_rh,
    conjecture_sweep,
    run_check,
    window_charpoly,
)
from hyperfree.coxeter.deformations import (
    DeformationCheck,
    DeformationKind,
    DeformationSpec,
    MultiplicityCheck,
    coxeter_multi_check,
    coxeter_shift_check,
    deformation,
    er_verify,
    expected_charpoly,
    expected_exponents,
    parse_window,
    window_to_pair,
)
from hyperfree.coxeter.rootsystems import (
    SUPPORTED_RANKS,
    RootFamily,
    RootSystem,
    coxeter_arrangement,
    positive_roots,
    verify_root_table,
)

__all__ = [
    "SUPPORTED_RANKS",
    "ConjectureCheck",
    "ConjectureResult",
    "DeformationCheck",
    "DeformationKind",
    "DeformationSpec",
    "MultiplicityCheck",
    "RootFamily",
    "RootSystem",
    "conjecture_fe",
    "conjecture_hshift",
    "conjecture_rh",
    "conjecture_sweep",
    "coxeter_arrangement",
    "coxeter_multi_check",
    "coxeter_shift_check",
    "deformation",
    "er_verify",
    "expected_charpoly",
    "expected_exponents",
    "parse_window",
    "positive_roots",
    "run_check",
    "verify_root_table",
    "window_charpoly",
    "window_to_pair",
]
