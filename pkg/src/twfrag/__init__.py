"""Approximation schemes for distance-bounded maximization problems on
fractionally treewidth-fragile graph classes.

Hot distance kernels are numba-compiled; set ``TWFRAG_NO_NUMBA=1`` before
import to use the pure-numpy fallback path.
"""

from ._kernels import USING_NUMBA
from .augment import (AugmentationSequence, LengthAugmentation, fraternal_augment,
                      fraternal_step, initial_orientation)
from .decompose import (FragilityCover, TreeDecomposition, baker_cover, tree_decompose,
                        trivial_cover, validate_decomposition)
from .errors import (ConfigError, InputError, InternalConsistencyError, ParseError,
                     ResourceRefusal, TwfragError)
from .generators import GeneratorSpec, SplitMix64, generate
from .graph import OVER, Graph, VertexSet, parse_graph, serialize_graph, truncated_bfs
from .oracle import brute_force_opt, naive_enumeration
from .orient import (DistanceOrientation, SuperAugmentation, back_propagate_step,
                     build_distance_orientation, out_ball, truncated_distance,
                     verify_representation)
from .scheme import (SchemeConfig, SchemeOutcome, blocked_set, check_avoidance_bound,
                     check_deletion_admissibility, inflation_factor, run_scheme,
                     witness_shadow)
from .solvers import (ProblemDef, SolveResult, forest_problem, frmatch_problem,
                      mis_problem, problem_by_name, ris_problem, solve_fr_matching_bruteforce,
                      solve_induced_forest, solve_mis, solve_scattered,
                      witness_system_frmatching, witness_system_monotone)

__version__ = "0.1.0"

__all__ = [
    "USING_NUMBA", "OVER", "Graph", "VertexSet", "parse_graph", "serialize_graph",
    "truncated_bfs", "LengthAugmentation", "AugmentationSequence", "initial_orientation",
    "fraternal_step", "fraternal_augment", "DistanceOrientation", "SuperAugmentation",
    "back_propagate_step", "build_distance_orientation", "out_ball", "truncated_distance",
    "verify_representation", "TreeDecomposition", "FragilityCover", "baker_cover",
    "trivial_cover", "tree_decompose", "validate_decomposition", "ProblemDef",
    "SolveResult", "solve_mis", "solve_scattered", "solve_induced_forest",
    "solve_fr_matching_bruteforce", "witness_system_monotone", "witness_system_frmatching",
    "mis_problem", "ris_problem", "forest_problem", "frmatch_problem", "problem_by_name",
    "SchemeConfig", "SchemeOutcome", "inflation_factor", "blocked_set", "witness_shadow",
    "run_scheme", "check_avoidance_bound", "check_deletion_admissibility",
    "brute_force_opt", "naive_enumeration", "GeneratorSpec", "SplitMix64", "generate",
    "TwfragError", "InputError", "ParseError", "ResourceRefusal", "ConfigError",
    "InternalConsistencyError",
]
