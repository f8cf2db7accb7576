"""Perfect star packings (efficient dominating sets) in fullerene graphs."""

from . import fixtures
from .errors import StarpackError, TheoremViolation
from .forbidden import ForbiddenKind, ForbiddenMatch, precludes_p0, scan_forbidden
from .fullerene_io import (
    dodecahedron,
    export_json,
    read_planar_code,
    spiral_to_graph,
    write_planar_code,
)
from .graph_core import (
    CycleSides,
    Face,
    Fullerene,
    RotationSystem,
    build_graph,
    cycle_sides,
    is_induced_cycle,
    trace_faces,
    validate_fullerene,
)
from .packing_solver import (
    PackingCheck,
    StarPacking,
    brute_force_packings,
    enumerate_packings,
    find_p0_packing,
    find_packing,
    verify_packing,
)
from .spectral import det_shifted_adjacency, has_minus_one_eigenvalue
from .structure_analysis import (
    CenterLocalType,
    ComplementCycle,
    PackingReport,
    analyze_nonfacial_cycle,
    classify_center,
    complement_cycles,
    packing_from_decomposition,
    packing_report,
    three_neighbor_check,
)
from .transforms import ChamferResult, canonical_chamfer_packing, chamfer

__version__ = "0.1.0"
