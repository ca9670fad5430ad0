"""
Analysis - randomized exponent sweeps, the t-family experiment and batch jobs
"""

from hyperfree.analysis.jobs import OPERATIONS, Job, jobs_from_glob, load_manifest, run_jobs
from hyperfree.analysis.sweeps import (
    DeltaSweep,
    SweepResult,
    TypicalCase,
    abe_bound_sweep,
    delta_sweep,
    generic_delta_sweep,
    random_balanced,
    random_multiplicity,
    t_family,
    typical_exponents,
    typical_sweep,
)

__all__ = [
    "OPERATIONS",
    "DeltaSweep",
    "Job",
    "SweepResult",
    "TypicalCase",
    "abe_bound_sweep",
    "delta_sweep",
    "generic_delta_sweep",
    "jobs_from_glob",
    "load_manifest",
    "random_balanced",
    "random_multiplicity",
    "run_jobs",
    "t_family",
    "typical_exponents",
    "typical_sweep",
]
