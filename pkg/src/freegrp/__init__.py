"""Free-group toolkit: words, Whitehead moves, graphs, minimization and
endomorphism checks.
"""

from .words import (
    CyclicDecomposition,
    RankMismatchError,
    Word,
    WordParseError,
    concat,
    cyclic_reduce,
    empty_word,
    free_reduce,
    graphically_equal,
    invert,
    parse_word,
    render_word,
    word,
)
from .autos import (
    Cut,
    Endomorphism,
    InnerAut,
    KillMap,
    Perm,
    WhiteheadDescriptor,
    apply,
    apply_endo,
    apply_letter,
    as_endo,
    compose,
    enumerate_whitehead,
    format_descriptor,
    identity_endo,
    inverse_descriptor,
    parse_descriptor,
)
from .graphs import (
    ComponentPartition,
    WhiteheadGraph,
    component_of,
    components,
    generalized_graph,
    standard_graph,
)
from .minimize import (
    MinimizationTrace,
    is_primitive,
    minimize,
    orbit_min_bfs,
    primitives_up_to,
)
from .endo import (
    PreservationReport,
    SweepReport,
    WitnessSpec,
    check_preserves_primitivity,
    find_appenders,
    is_automorphism,
    make_witness,
    minimal_witness_bounds,
    nielsen_reduce,
    theorem_sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
