"""effectalg: finite effect algebras with internal states, exactly.

Core objects: validated partial sum tables (FiniteEffectAlgebra), catalog
constructions, exact state polytopes with extremal-state enumeration,
endomorphism classification (state-operators and their strong / join-preserving
variants), interval algebras over concrete po-groups, and the finite
state-space / affine-function duality with its round-trip laws.
"""

from .catalog import (CatalogSpec, build_boolean, build_catalog, build_chain,
                      build_even_subsets, build_product, horizontal_sum,
                      small_catalog)
from .core import (AxiomViolation, EffectAlgebraError, FiniteEffectAlgebra,
                   GuardExceeded, derive_order, is_isomorphic, validate_axioms)
from .duality import (AffineFunctionAlgebra, FiniteSimplex, PullbackOperator,
                      VertexMap, affine_functor, check_simplex_morphism,
                      check_state_morphism, embedding_intertwines, evaluation_map,
                      round_trip_check, state_functor)
from .mv import MvStructure, mv_operations, mv_state_axioms
from .operators import (InducedStateMap, OperatorProfile, check_esp,
                        classify_operator, coordinate_repeat_maps,
                        coordinate_swap_map, enumerate_endomorphisms,
                        induced_state_map, is_endomorphism, minimal_potency,
                        mv_operator_agreement, operator_law_report,
                        scan_mv_operator_agreement)
from .pogroup import (ExtensionReport, IntervalAlgebra, PoGroupSpec,
                      extend_endomorphism, extremal_states, group_leq,
                      interval_contains, materialize)
from .states import (EvaluationImage, OrderingReport, StatePolytope,
                     clan_closure_witness, compute_states, discrete_profile,
                     evaluation_image, is_order_determining, is_state,
                     sampled_order_report)
from .structure import (StructureReport, check_interpolation, check_rdp,
                        classify_lattice, enumerate_ideals, structure_report)

__version__ = "0.1.0"
