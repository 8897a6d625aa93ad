"""Orlicz-Lorentz function and sequence spaces: norms, duals, witnesses."""

from .errors import (OlkError, DomainError, ValidationError, NotInSpaceError,
                     ConvergenceError, UndecidedError,
                     InfeasibleParameterError)
from .orlicz import (OrliczFunction, PowerOrlicz, ExpOrlicz, LogOrlicz,
                     FlatZeroOrlicz, TabulatedOrlicz, NumericConjugate,
                     young_gap, delta2_classify)
from .rearrange import (StepFunction, FiniteSequence, LogTailProfile,
                        PowerTailProfile, BandRestriction, BandComplement,
                        PowerSeqTail, LogSeqTail, ShiftedSeqTail, StepWeight,
                        PowerWeight, ConstantSeqWeight, HarmonicSeqWeight,
                        PowerSeqWeight, ExplicitSeqWeight, distribution,
                        decreasing_rearrangement, equimeasurable,
                        cumulative_weight, disjoint_sum, element_setting)
from .level import (LevelInterval, LevelDecomposition, level_function,
                    level_sequence, evaluate_level)
from .norms import (KInterval, rho_modular, luxemburg_norm,
                    orlicz_norm_amemiya, k_interval,
                    orlicz_norm_dual_sup_oracle, truncate,
                    truncation_remainder, theta, amemiya_pairing_report)
from .duality import (YoungWitness, FunctionalNormReport, P_modular,
                      P_modular_oracle, dual_luxemburg_norm,
                      dual_orlicz_norm, young_witness, rearranged_pairing,
                      functional_norm_luxemburg_side,
                      functional_norm_orlicz_side, functional_norm_report,
                      non_m_ideal_witness, holder_check)
from .specio import SpaceSpec, parse_space, parse_element
from .verify import verify_suite

__version__ = "0.1.0"

__all__ = [
    "OlkError", "DomainError", "ValidationError", "NotInSpaceError",
    "ConvergenceError", "UndecidedError", "InfeasibleParameterError",
    "OrliczFunction", "PowerOrlicz", "ExpOrlicz", "LogOrlicz",
    "FlatZeroOrlicz", "TabulatedOrlicz", "NumericConjugate", "young_gap",
    "delta2_classify",
    "StepFunction", "FiniteSequence", "LogTailProfile", "PowerTailProfile",
    "BandRestriction", "BandComplement", "PowerSeqTail", "LogSeqTail",
    "ShiftedSeqTail", "StepWeight", "PowerWeight", "ConstantSeqWeight",
    "HarmonicSeqWeight", "PowerSeqWeight", "ExplicitSeqWeight",
    "distribution", "decreasing_rearrangement", "equimeasurable",
    "cumulative_weight", "disjoint_sum", "element_setting",
    "LevelInterval", "LevelDecomposition", "level_function",
    "level_sequence", "evaluate_level",
    "KInterval", "rho_modular", "luxemburg_norm", "orlicz_norm_amemiya",
    "k_interval", "orlicz_norm_dual_sup_oracle", "truncate",
    "truncation_remainder", "theta", "amemiya_pairing_report",
    "YoungWitness", "FunctionalNormReport", "P_modular", "P_modular_oracle",
    "dual_luxemburg_norm", "dual_orlicz_norm", "young_witness",
    "rearranged_pairing", "functional_norm_luxemburg_side",
    "functional_norm_orlicz_side", "functional_norm_report",
    "non_m_ideal_witness", "holder_check",
    "SpaceSpec", "parse_space", "parse_element",
    "verify_suite",
    "__version__",
]
