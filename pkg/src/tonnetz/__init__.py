"""Generalised tonnetzes: pitch-class labellings of triangulated surfaces."""

from .coherence import (
    CoherenceWitness,
    Infeasibility,
    Tonnetz,
    TonnetzKind,
    VerificationError,
    VerificationReport,
    assemble_from_bijections,
    constant_tonnetz,
    extend_from_faces,
    find_transposition_symmetry,
    from_edge_map,
    from_vertex_map,
    kind,
    transpose_tonnetz,
    transposition_symmetries,
    verify,
)
from .complex import (
    ComplexAutomorphism,
    SimplexId,
    SimplicialSurface,
    ValidationReport,
    euler_characteristic,
    find_automorphisms,
    tetrahedron,
    validate,
    valency,
)
from .pitch import (
    ChordQuality,
    Interval,
    NoteParseError,
    PitchClass,
    PitchMultiset,
    Quality,
    classify,
    note_name,
    parse_note,
    transpose,
)

__version__ = "0.1.0"
