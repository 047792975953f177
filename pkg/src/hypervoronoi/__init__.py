"""Poisson-Voronoi percolation on the hyperbolic plane.

A numpy/scipy library with four layers: exact Poincare-disk geometry
(`geometry`), marked Poisson sampling (`ppp`), Delaunay/Voronoi adjacency and
percolation experiments (`delaunay`, `percolation`), and the branching-process
instrumentation used to bracket the critical probability (`exploration`,
`pseudopath`).  `render` rasterizes tessellations; `cli` drives everything
from the command line.
"""

from .geometry import (
    ORIGIN,
    DoubleDisk,
    EDisk,
    HDisk,
    Isometry,
    Point,
    Sector,
    ahd_disks,
    angle,
    angle_upper_bound,
    ball_area,
    dist,
    double_disk,
    gabriel_disk,
    gabriel_side,
    isometry_to_origin,
    law_of_cosines_side,
    orthocircle_radius,
    sector_contains,
    to_euclidean,
)
from .ppp import Sample, SimConfig, color_points, sample_ball
from .errors import (
    BudgetExceeded,
    ConfigError,
    DegenerateInput,
    GeometryError,
    Inconclusive,
    PrecisionError,
    UncertifiedBoundary,
)

__version__ = "0.1.0"
