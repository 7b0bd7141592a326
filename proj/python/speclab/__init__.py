"""Python face of the spectral laboratory core.

Everything is implemented in the C++ extension; this package re-exports the
surface so `import speclab` works both from an installed wheel and from a
CMake build tree placed on PYTHONPATH.
"""

from ._core import (  # noqa: F401
    Basis,
    CayleyMap,
    CliffordRep,
    DetSetup,
    DiracDiscMap,
    DiscFunction,
    FreeOperatorModel,
    Grid,
    PotentialField,
    SpectrumModel,
    TheoremWeight,
    WeightId,
    anticommutation_residual,
    build_clifford,
    ceil_index,
    check_ratio,
    default_tau,
    det_br_core,
    det_rs_check,
    dft_matrix,
    discrete_spectrum,
    find_b_star,
    fit_envelope,
    free_dense,
    gen_constant_antiherm,
    gen_gaussian_bump,
    gen_random_complex,
    lp_norm,
    lt_sum,
    parse_weight_id,
    perturbed,
    potential_dense,
    read_potential,
    reg_det,
    regime_classify,
    resolvent_lp_radial,
    scaling_exponent,
    schatten_norm,
    synth_blaschke,
    weight,
    write_potential,
    zero_sum,
)

__all__ = [
    "Basis",
    "CayleyMap",
    "CliffordRep",
    "DetSetup",
    "DiracDiscMap",
    "DiscFunction",
    "FreeOperatorModel",
    "Grid",
    "PotentialField",
    "SpectrumModel",
    "TheoremWeight",
    "WeightId",
    "anticommutation_residual",
    "build_clifford",
    "ceil_index",
    "check_ratio",
    "default_tau",
    "det_br_core",
    "det_rs_check",
    "dft_matrix",
    "discrete_spectrum",
    "find_b_star",
    "fit_envelope",
    "free_dense",
    "gen_constant_antiherm",
    "gen_gaussian_bump",
    "gen_random_complex",
    "lp_norm",
    "lt_sum",
    "parse_weight_id",
    "perturbed",
    "potential_dense",
    "read_potential",
    "reg_det",
    "regime_classify",
    "resolvent_lp_radial",
    "scaling_exponent",
    "schatten_norm",
    "synth_blaschke",
    "weight",
    "write_potential",
    "zero_sum",
]
