"""Linear Nakayama algebras, their derived categories, and certificates of
non-piecewise-heredity."""
from .algebra import (
    KupischSeries,
    NakayamaAlgebra,
    Relation,
    catalan,
    enumerate_algebras,
    from_kupisch,
    from_relations,
    parse_algebra,
    rad_power_algebra,
)
from .complexes import PerfectComplex, minimize, render, stalk
from .coxeter import coxeter, coxeter_matrix
from .derived import are_isomorphic, hom_dim, resolve_complex, tau, tau_orbit
from .moves import apply_chain, apply_move
from .obstructions import (
    battery,
    certificate_from_json,
    coarse_fine_radical_lengths,
    coarse_fine_sequences,
    hs_derivation,
    tau_orbit_test,
)

__version__ = "0.1.0"
