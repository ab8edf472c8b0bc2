"""Faces, core varieties and maximal masses over finite ground sets."""

from momentcone.facial.faces import (
    CoreVariety,
    FaceReport,
    ZeroSet,
    atom_set,
    core_variety,
    face_dimension,
    face_report,
    gamma_space,
    v_set,
)
from momentcone.facial.functionals import EvaluationSpace, tangency_rows
from momentcone.facial.max_mass import MaxMassReport, SeparationResult, max_mass, positivity_witness, psp_check

__all__ = [
    "CoreVariety",
    "EvaluationSpace",
    "FaceReport",
    "MaxMassReport",
    "SeparationResult",
    "ZeroSet",
    "atom_set",
    "core_variety",
    "face_dimension",
    "face_report",
    "gamma_space",
    "max_mass",
    "positivity_witness",
    "psp_check",
    "tangency_rows",
    "v_set",
]
