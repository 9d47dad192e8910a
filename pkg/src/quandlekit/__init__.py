"""Quandle and G-family invariants of knotted trivalent graphs."""

from .finite_algebra import (
    AxiomError,
    AxiomReport,
    FileFormatError,
    FiniteGroup,
    FiniteQuandle,
    TableFormatError,
    alexander_quandle,
    are_isomorphic,
    conjugation_quandle,
    cyclic_group,
    dihedral_quandle,
    group_from_text,
    group_to_text,
    is_kei,
    orbit_decomposition,
    quandle_from_text,
    quandle_to_text,
    parse_table_text,
    standard_quandle,
    subquandle_closure,
    symmetric_group,
    table_to_text,
    trivial_quandle,
    validate_group,
    validate_quandle,
)
from .polynomial import (
    GroupRingPoly,
    PolyMultiset,
    PolyParseError,
    TwoVarPoly,
    cr_counts,
    gfamily_polynomial,
    gsubfamily_polynomial,
    parse_multiset,
    parse_poly,
    quandle_polynomial,
    serialize_multiset,
    serialize_poly,
    subquandle_polynomial,
)
from .gfamily import (
    FAMILY_NAMES,
    AssociatedQuandle,
    GFamily,
    Subfamily,
    associated_quandle,
    builtin_family,
    family_from_text,
    family_to_text,
    is_subfamily,
    kei_to_z2_family,
    parse_family_blocks,
    subfamily_closure,
    validate_gfamily,
)
from .diagram import (
    DIAGRAM_NAMES,
    Crossing,
    DiagramStructureError,
    DiagramSyntaxError,
    R1Kink,
    R2Poke,
    TrivalentDiagram,
    Vertex,
    apply_move,
    builtin,
    diagram_to_text,
    parse_diagram,
)
from .coloring import (
    Coloring,
    InvariantSummary,
    all_invariants,
    counting_invariant,
    enhancement_associated,
    enhancement_gfamily,
    enumerate_colorings,
    image_subfamily,
    used_pairs,
)
from .census import (
    CensusEntry,
    ClassificationReport,
    canonical_form,
    enumerate_quandles,
    enumerate_quandles_naive,
    polynomial_classification,
    write_census,
)

__version__ = "0.1.0"
