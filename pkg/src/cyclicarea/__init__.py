"""Areas of convex cyclic polygons from the incircle tangent lengths of a fan triangulation."""
from .area import (FactorPair, brahmagupta_area, cyclic_area, factor_exchange, heron_area,
                   heron_area_sides, inradius_chain_product, pair_area_product,
                   reconstruct_internal, right_triangle_area_product)
from .construction import (PolygonSpec, circumradius_from_sides, from_central_angles,
                           from_vertices, polygon_from_sides, random_cyclic_polygon)
from .errors import (ConvergenceError, CyclicAreaError, DegeneracyError, DomainError,
                     InconsistentBoundaryError, InfeasibleSidesError, InvalidInputError,
                     InvalidSpecError, NumericError)
from .fan import (EdgePartition, FanDecomposition, TriangleSplit, edge_partition,
                  fan_decompose, tangent_split)
from .geometry import Circle, CyclicPolygon, Point2, shoelace_area, side_lengths, vertices
from .verify import FuzzConfig, VerificationReport, fuzz, verify_polygon

__version__ = "0.1.0"
