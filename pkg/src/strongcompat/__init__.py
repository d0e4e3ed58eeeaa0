"""Strong compatibility graphs of G-posets, their colorings and the
combinatorial constructions built on them."""

from .algebra import (
    FiniteGroup,
    GPoset,
    Orbit,
    cyclic_group,
    dimension,
    group_from_table,
    is_free,
    ladder_poset,
    make_gposet,
    orbits,
    tucker_domain,
)
from .chromatic import (
    ChromaticResult,
    EquivariantLabeling,
    chain_length_coloring,
    chromatic_number_exact,
    equivariant_map_from_coloring,
    find_noncomparable_image_pair,
    greedy_coloring,
    verify_coloring,
)
from .compat import Graph, compatibility_graph, is_triangle_free, lemma19_criterion, strong_compatibility_graph
from .complexes import SimplicialComplex, crosspolytope_boundary, face_poset, is_free_complex_action, make_complex

__version__ = "0.1.0"
