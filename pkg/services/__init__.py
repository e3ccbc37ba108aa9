"""Services package for liequiver."""

from .rootdata import (
    RootSystem, root_system, cartan_matrix, positive_roots, simple_coords, eps, phi,
    weyl_dimension, is_extremal, is_extremal_combinatorial, extremal_witness,
    enumerate_extremal, psi_c, is_regular, h_form, h_value, parse_psi, psi_from_json,
)
from .quiver import QuiverService
from .families import (
    gamma_t, xi, xi_a, xi_count, gamma_amn, gamma_amn_opposite, quiver_isomorphic,
    xi_canonical_class, xi_op_isomorphic,
)
from .matrices import MatrixLieAlgebra, build_algebra
from .adapted import (
    sigma_set, f_sigma, standard_monomials, lambda_standard, is_lambda_standard,
    x_minus_eval, x_plus_eval, u_eval, above, z_norm, pi_adapted,
)
from .relations import (
    pi_closed_form, relation_space, is_generic, n_eta, koszul_dual_space,
    gamma_parameters, xi_parameters, gamma_relations, xi_relations, family_relations, to_lattice,
)
from .oracle import (
    HWModule, irreducible_module, fundamental_module, weight_space_dim, invariant_vectors,
    p_map, pi_oracle, relation_space_oracle, verify_adapted, e_action_identity,
)
from .pathalg import (
    graded_dims, quadratic_dual, numerical_koszulity, projective_dimensions, global_dimension,
    interval_algebra, down_set_algebra, up_set_algebra, component_algebra, path_algebra, perturb,
)
from .export import to_dot, to_json, component_dots

__all__ = [
    "RootSystem", "root_system", "cartan_matrix", "positive_roots", "simple_coords", "eps", "phi",
    "weyl_dimension", "is_extremal", "is_extremal_combinatorial", "extremal_witness",
    "enumerate_extremal", "psi_c", "is_regular", "h_form", "h_value", "parse_psi", "psi_from_json",
    "QuiverService",
    "gamma_t", "xi", "xi_a", "xi_count", "gamma_amn", "gamma_amn_opposite", "quiver_isomorphic",
    "xi_canonical_class", "xi_op_isomorphic",
    "MatrixLieAlgebra", "build_algebra",
    "sigma_set", "f_sigma", "standard_monomials", "lambda_standard", "is_lambda_standard",
    "x_minus_eval", "x_plus_eval", "u_eval", "above", "z_norm", "pi_adapted",
    "pi_closed_form", "relation_space", "is_generic", "n_eta", "koszul_dual_space",
    "gamma_parameters", "xi_parameters", "gamma_relations", "xi_relations", "family_relations", "to_lattice",
    "HWModule", "irreducible_module", "fundamental_module", "weight_space_dim", "invariant_vectors",
    "p_map", "pi_oracle", "relation_space_oracle", "verify_adapted", "e_action_identity",
    "graded_dims", "quadratic_dual", "numerical_koszulity", "projective_dimensions", "global_dimension",
    "interval_algebra", "down_set_algebra", "up_set_algebra", "component_algebra", "path_algebra", "perturb",
    "to_dot", "to_json", "component_dots",
]
