"""Exact symbolic verification for Lie algebroids, matched pairs, double
vector bundles, Lie bialgebroids and linear Poisson structures."""

from .poly import Polynomial, RationalMatrix, poly, random_polynomial, ZERO, ONE
from .report import CheckReport, Witness
from .algebroid import (LieAlgebroid, MultiSection, action_algebroid,
                        apply_anchor, bracket_sections, check_action,
                        check_axioms, differential, interior, lie_derivative,
                        schouten)
from .matched_pair import (MatchedPair, Representation, VacantDouble,
                           build_double_sum, build_vacant_double,
                           check_matched_pair, check_representation,
                           check_vacant_conditions, dualize_representation,
                           extract_matched_pair, vacant_representations)
from .bialgebroid import (LieBialgebroid, ManinDouble, base_poisson,
                          base_poisson_bracket, bialgebroid_from_matched_pair,
                          check_bialgebroid, check_lied_lemma, check_manin,
                          manin_double, semidirect_E, semidirect_Estar)
from .poisson import (PoissonAlgebra, PolyMap, check_jacobi_poisson,
                      check_poisson_map, cotangent_algebroid,
                      linear_dual_poisson, poisson_bracket,
                      tangent_lift_poisson)
from .dvb import (DecomposedDVB, CotangentModel, DVBElement, DualElementH,
                  DualElementV, ZMaps, build_Z_maps, canonical_pairing_h,
                  canonical_pairing_v, check_interchange,
                  check_pairing_nondegenerate, check_zmaps, cotangent_model,
                  dvb_add, dvb_scale, dual_project, pair_duals)
from .modelfile import ModelError, ModelFile, parse_model, print_model

__version__ = "0.1.0"
