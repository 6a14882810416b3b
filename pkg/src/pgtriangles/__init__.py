"""pgtriangles: a laboratory for iterated absolute-difference triangles.

Triangle geometry and streaming statistics (seqcore), the GF(2) Pascal
transform family (pascal2), helicoid layer dynamics (helix), square-prime
arithmetic with Pell-backed gap certificates (spnum), triangle bordering
(border), experiment drivers (bench), builtin generators (generators),
and deterministic SVG rendering (viz).
"""

from . import bench, border, generators, helix, pascal2, seqcore, spnum, viz
from .border import BorderStep, border_pair, border_single, build_prescribed_west
from .helix import (
    ChampionSet,
    Orbit,
    OrbitBudgetError,
    champions,
    circle_of_differences,
    orbit_analysis,
    upsilon_pow,
)
from .pascal2 import F2Poly, binom_parity, hockey_stick_check, t_fast, t_naive, t_rational
from .seqcore import (
    RayStats,
    TriangleView,
    anti_diagonal,
    eastern_edge,
    left_edge,
    next_row,
    ray,
    ray_stats,
    triangle_rows,
)
from .spnum import (
    GapCertificate,
    PellSolution,
    ScanBudgetError,
    SpSieve,
    find_sp_pairs_with_gap,
    gap_representation,
    is_sp,
    nth_sp,
    pell_fundamental,
    sp_sieve,
    sp_twins,
)

__version__ = "0.1.0"
