"""Pointed matroids with strong maps, at desk scale.

Finite pointed matroids are presented by circuits or by closure tables;
on top sit minors, the lattice of flats, strong maps with their admissible
mono and epi classes, probe-verified proto-exact structure, symbolic
countable matroids with finitization and window colimits, and
rank-corank classes with the deletion-contraction collapse derivation.
"""

from .core import (
    STAR,
    AxiomCheck,
    AxiomReport,
    ClosureTable,
    FiniteMatroid,
    catalog,
    check_circuit_axioms,
    check_closure_axioms,
    circuits_from_closure,
    closure_table,
    free_matroid,
    make_matroid,
    one_point_matroid,
    pointed,
    subsets_of,
    uniform_matroid,
)
from .errors import MatroidError
from .fileformats import (
    NamedMatroid,
    emit_map,
    emit_matroid,
    parse_map_file,
    parse_map_text,
    parse_matroid_file,
    parse_matroid_text,
)
from .finitary import (
    OMEGA,
    Cocone,
    CoUniform,
    Explicit,
    Free,
    SymbolicMatroid,
    Uniform,
    UniversalityReport,
    WindowedMatroid,
    WitnessReport,
    cocone_from_map,
    colimit_check,
    descriptor_str,
    finitely_presented_witness,
    finitize,
    finitize_is_strong,
    induce_fin_map,
    materialize,
    restrict_window,
    window_closure,
    window_ground,
)
from .grothendieck import (
    ZERO,
    Derivation,
    FiniteClass,
    FormalSum,
    KClass,
    UniformOmega,
    check_additivity,
    delete_contract_step,
    derive_collapse,
    finite_label,
    k0_class,
)
from .lattices import FlatLattice, flats, induced_lattice_map
from .minors import contract, delete, minor, restrict
from .protoexact import (
    ProbeReport,
    Square,
    cartesian_report,
    check_proto_exact_axioms,
    cocartesian_report,
    complete_square_from_cospan,
    complete_square_from_span,
    is_bicartesian,
    is_cartesian,
    is_cocartesian,
)
from .strongmaps import (
    PointedMap,
    StrongMap,
    contraction_map,
    enumerate_strong_maps,
    identity_map,
    identity_pointed,
    is_admissible_epi,
    is_admissible_mono,
    is_epic,
    is_isomorphism,
    is_monic,
    is_strong,
    restriction_map,
    strong_map,
    transport_circuits,
)

__version__ = "0.1.0"
