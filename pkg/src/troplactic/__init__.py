"""Max-plus matrix kernel, Young/configuration tableaux, and tropical word
representations, with equivalence deciders and property sweeps."""

from .trop_core import (
    BOTTOM,
    GeneratorSet,
    TropMatrix,
    TropScalar,
    co_gen_A,
    co_mirror_M,
    flat_corner,
    gen_A,
    gen_F,
    is_nonsingular,
    is_synoptic,
    layout_E,
    mat_add,
    mat_min,
    mat_mul,
    mtrace,
    nonsingular_witness,
    permanent,
    rank,
    structure_map,
    tadd,
    tmin,
    tmul,
    trace,
    transpose,
)
from .words import (
    ConvexRange,
    Identity,
    Word,
    build_identity,
    clk_equiv_oracle,
    co_mirror,
    is_npower_word,
    is_uniform,
    iterate_co_mirror,
    lnds_oracle,
    refine_identity,
    reverse,
    verify_identity,
)
from .tableaux import (
    ConfigTableau,
    Shape,
    YoungTableau,
    bump_insert,
    c_mat,
    c_mat_co,
    ctab,
    ctab_to_tab,
    delete_bottom_row,
    delete_last_diagonal,
    encode_letter,
    eta,
    is_standard,
    nu,
    reading_word,
    right_inject,
    sn_realization,
    tab,
    tab_product,
    tab_to_ctab,
    transpose_standard,
)
from .reps import (
    PlacticImage,
    RepContext,
    chi_plus,
    chi_times,
    clk_equiv,
    coclk_equiv,
    mho,
    mho_fast,
    omega,
    omega_kappa,
    recover_nondecreasing,
    wp,
)

__version__ = "0.1.0"

__all__ = [
    "BOTTOM",
    "ConfigTableau",
    "ConvexRange",
    "GeneratorSet",
    "Identity",
    "PlacticImage",
    "RepContext",
    "Shape",
    "TropMatrix",
    "TropScalar",
    "Word",
    "YoungTableau",
    "bump_insert",
    "build_identity",
    "c_mat",
    "c_mat_co",
    "chi_plus",
    "chi_times",
    "clk_equiv",
    "clk_equiv_oracle",
    "co_gen_A",
    "co_mirror",
    "co_mirror_M",
    "coclk_equiv",
    "ctab",
    "ctab_to_tab",
    "delete_bottom_row",
    "delete_last_diagonal",
    "encode_letter",
    "eta",
    "flat_corner",
    "gen_A",
    "gen_F",
    "is_nonsingular",
    "is_npower_word",
    "is_standard",
    "is_synoptic",
    "is_uniform",
    "iterate_co_mirror",
    "layout_E",
    "lnds_oracle",
    "mat_add",
    "mat_min",
    "mat_mul",
    "mho",
    "mho_fast",
    "mtrace",
    "nonsingular_witness",
    "nu",
    "omega",
    "omega_kappa",
    "permanent",
    "rank",
    "reading_word",
    "recover_nondecreasing",
    "refine_identity",
    "reverse",
    "right_inject",
    "sn_realization",
    "structure_map",
    "tab",
    "tab_product",
    "tab_to_ctab",
    "tadd",
    "tmin",
    "tmul",
    "trace",
    "transpose",
    "transpose_standard",
    "verify_identity",
    "wp",
]
