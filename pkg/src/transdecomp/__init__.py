"""Transitive decompositions of graphs: verification, quotient lifting,
partial linear spaces and a five-colouring of the dodecahedron."""

from .decomposition import (EdgePartition, VerificationReport, is_one_decomposition, lift,
                            part_action, petersen_Qa_partition, verify)
from .errors import (HypothesisError, InputError, InvarianceError, PartSplitError,
                     PipelineError, ResourceError, TransDecompError)
from .graph import (BlockSystem, Graph, antipodal_blocks_gp10_2, automorphism_group,
                    complete_graph, generalized_petersen, is_automorphism, isomorphism,
                    kneser_petersen, quotient)
from .origami import Coloring, build_dodecahedron_coloring, export_coloring
from .permgroup import (Action, Permutation, PermGroup, compose, derived_subgroup, generate,
                        induced_action_on_blocks, inverse, is_transitive, orbit)
from .pls import (PartialLinearSpace, from_decomposition, is_line_transitive,
                  is_partial_linear_space, to_decomposition)

__version__ = "0.1.0"

__all__ = [
    "EdgePartition", "VerificationReport", "is_one_decomposition", "lift", "part_action",
    "petersen_Qa_partition", "verify", "HypothesisError", "InputError", "InvarianceError",
    "PartSplitError", "PipelineError", "ResourceError", "TransDecompError", "BlockSystem",
    "Graph", "antipodal_blocks_gp10_2", "automorphism_group", "complete_graph",
    "generalized_petersen", "is_automorphism", "isomorphism", "kneser_petersen", "quotient",
    "Coloring", "build_dodecahedron_coloring", "export_coloring", "Action", "Permutation",
    "PermGroup", "compose", "derived_subgroup", "generate", "induced_action_on_blocks",
    "inverse", "is_transitive", "orbit", "PartialLinearSpace", "from_decomposition",
    "is_line_transitive", "is_partial_linear_space", "to_decomposition",
]
