"""Gel'fand-Tseitlin representations, gradings and graded contractions of sl(n)."""

from ._gradedrep import (
    Grading,
    LieAlgebra,
    Report,
    Representation,
    SimulationMatrix,
    build_representation,
    check_compatibility,
    classify_two_part,
    contract_algebra,
    contract_rep,
    decompose_rep_space,
    doubled_rep,
    enumerate_binary_epsilon,
    enumerate_binary_psi,
    enumerate_patterns,
    grading_from_automorphism,
    is_self_contragredient,
    j_matrix,
    simulation_inner,
    sl_algebra,
    verify_epsilon,
    verify_grading,
    verify_psi,
    weyl_dim,
)

__all__ = [name for name in dir() if not name.startswith("_")]
