//! Exact pseudo-determinants and coefficient-level Cauchy-Binet identities.
//!
//! The pseudo-determinant of a square matrix is the product of its nonzero
//! eigenvalues, with value 1 on nilpotent matrices. It is computable without
//! eigenvalues: up to a sign it is the first nonzero coefficient of the
//! characteristic polynomial det(A - x). For any two n x m matrices F, G,
//! every coefficient of the characteristic polynomial of F^T G is a sum of
//! products of matching k x k minors of F and G, which specializes to the
//! classical Cauchy-Binet formula, to a Pythagorean identity for squared
//! minors, and, applied to graph incidence matrices, to spanning-tree and
//! rooted-forest counts.
//!
//! Everything on the exact side is arbitrary-precision rational arithmetic;
//! the small [`numeric`] module holds the floating-point spectral checks.

pub mod charpoly;
pub mod complex;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod minors;
pub mod numeric;
pub mod reduction;
pub mod scalar;
pub mod verify;

pub use charpoly::{char_poly, is_nilpotent, pseudo_det, spectral_count, Polynomial};
pub use complex::{
    betti_numbers, boundary_operator, clique_complex, dirac_operator,
    euler_characteristic_check, form_laplacian, graph_skeleton, simplex_graph, BettiNumbers,
    SimplicialComplex, DEFAULT_SIMPLEX_BUDGET,
};
pub use error::{Error, Result};
pub use graph::{
    brute_force_rooted_forest_count, brute_force_tree_count, rooted_forest_count,
    spanning_tree_count, Graph,
};
pub use matrix::{mat_mul, transpose, Matrix};
pub use minors::{
    append_combination_rows, append_parallel_rows, cauchy_binet_coeffs,
    cauchy_binet_coeffs_budgeted, classical_det, diag_minor_trace, exterior_power, minor_det,
    minor_pair_sum, minor_pair_sum_budgeted, pseudo_det_via_minors, pythagoras_sum, subsets,
    MinorPattern, DEFAULT_PATTERN_BUDGET,
};
pub use numeric::{
    log_trace_check, pseudo_pfaffian_abs, symmetric_eigenvalues, volume_check, FloatSpectrum,
};
pub use reduction::{
    inverse, kernel_basis, pseudo_inverse, rank, rank_factorization, rref, RankFactorization,
    Rref,
};
pub use scalar::Scalar;
