"""Exact tools for Kronecker coefficients, contingency tables and additive matrices."""

__version__ = "0.1.0"

from .errors import CapExceeded, HypothesisNotMet, NotInPolytope, SizeMismatch
from .partitions import (Majorization, Partition, add, conjugate, depth, dominates, majorize_cmp,
                         parse_partition, partitions_of, pi_sort, scale)
from .characters import (InnerMethod, character, character_row, class_size, kron,
                         perm_inner, permutation_character)
from .kostka import GTPattern, enumerate_gt, kostka, kostka_sequence
from .exactlp import LinearSystem, feasible
from .tables import (BinaryTensor3, IntMatrix, complement, count_binary3, count_tables,
                     enumerate_tables, graph, is_plane_partition, marginals3, s3_act, t_orbit)
from .tomography import (AdditiveTriple, check_perturbation, derive_triples, family, is_additive,
                         is_additive3, is_minimal, is_pi_unique)
from .stability import (StabilityReport, kostka_upper_bound, lattice_sequence, stability_sequence,
                        stembridge_condition)
