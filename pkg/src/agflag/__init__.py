"""Flags of algebraic-geometry codes on Kummer curves y^m = f(x) over F_q."""

from .codes import AGCode, build_code, code_dimension, designed_distance, dual_code, min_distance_exhaustive
from .errors import AgflagError
from .gf import F16, FieldElement, FieldSpec
from .isodual import (
    FlagReport,
    Verdict,
    build_flag,
    check_canonical_route,
    check_kummer_criterion,
    check_ramified_none,
    find_isometry_vector,
    flag_report,
    hstar_via_A,
    hstar_via_duality,
    verify_isometry,
)
from .kummer import CurveDivisor, Infinity, KummerCurve, Ramified, Split, build_curve, rr_basis, rr_dim, standard_D
from .semigroups import JumpSet, PMode, ghat_membership, hstar_closed, jump_set, lub, reduce_beta

__all__ = [
    "AGCode", "AgflagError", "CurveDivisor", "F16", "FieldElement", "FieldSpec", "FlagReport", "Infinity",
    "JumpSet", "KummerCurve", "PMode", "Ramified", "Split", "Verdict", "build_code", "build_curve", "build_flag",
    "check_canonical_route", "check_kummer_criterion", "check_ramified_none", "code_dimension",
    "designed_distance", "dual_code", "find_isometry_vector", "flag_report", "ghat_membership", "hstar_closed",
    "hstar_via_A", "hstar_via_duality", "jump_set", "lub", "min_distance_exhaustive", "reduce_beta", "rr_basis",
    "rr_dim", "standard_D", "verify_isometry",
]
