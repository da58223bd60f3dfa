"""Interactive graph-cut segmentation for grayscale images.

A circular template of radial rays is centered on a seed point (the cursor),
a small s-t graph is built from seed-contrast statistics, and an exact
min-cut gives a closed lesion contour in real time. Includes a synthetic
phantom generator, an evaluation harness, a CLI, and an HTTP API for the
interactive viewer.
"""

from ._core import BACKEND
from .contour import Contour, area_mm2, cut_to_contour, dice, max_diameter_mm, rasterize
from .errors import (
    ConfigError,
    DomainError,
    FormatError,
    GraphConstructionError,
    PgmFormatError,
    PhantomSpecError,
    UscutError,
)
from .evaluation import (
    MANUAL_DIAMETERS_MM,
    USCUT_DIAMETERS_MM,
    EvalCase,
    compute_stats,
    default_suite,
    deviation_stats,
    run_eval,
)
from .graph_builder import (
    NodeGrid,
    WeightModel,
    build_graph,
    build_graph_from_costs,
    dump_dimacs,
    sample_nodes,
    terminal_weights,
)
from .image import (
    EPSILON_TAU,
    GrayImage,
    SeedStats,
    load_image,
    pgm_bytes,
    sample_bilinear,
    save_pgm,
    seed_stats,
)
from .maxflow import (
    BruteForceResult,
    CutResult,
    FlowNetwork,
    brute_force_cut,
    cut_capacity,
    max_flow,
    parse_dimacs,
)
from .phantom import ECHO_CLASSES, PhantomSpec, class_defaults, generate_phantom, save_phantom
from .session import SegmentationResult, SweepItem, segment_at, sweep
from .template import DEFAULT_CONFIG, TemplateConfig

__version__ = "0.1.0"
