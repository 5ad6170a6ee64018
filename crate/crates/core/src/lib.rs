//! Equiangular tight frames from finite groups.
//!
//! Subsets of a finite group give Seidel matrices through the regular
//! representation. This crate verifies when such a matrix has exactly two
//! eigenvalues (and so describes an equiangular tight frame), searches small
//! groups for every such subset, builds the prime-field families, and turns
//! a certified matrix into explicit frame vectors.
//!
//! ```
//! use frameforge::{verify_signature_set, GroupTable};
//!
//! let g = GroupTable::from_descriptor("C4xC4").unwrap();
//! let s = g.parse_subset("(1,0),(2,0),(3,0),(0,1),(0,2),(0,3)").unwrap();
//! let v = verify_signature_set(&g, &s).unwrap();
//! assert_eq!((v.params.n, v.params.k, v.witness_mu), (16, 6, 2));
//! ```

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod counting;
pub mod cube;
pub mod diffset;
pub mod eisenstein;
pub mod error;
pub mod export;
pub mod generators;
pub mod group;
pub mod matrix;
pub mod numeric;
pub mod params;
pub mod search;
pub mod signature;
pub mod subset;

pub use counting::{count_pair, inverse_set, is_inverse_closed};
pub use cube::{
    build_cube_matrix, cube_necessary_conditions, nmu_excluded, unique_square_root, verify_quasi_signature_pair,
    verify_signature_pair, CubeContext, CubePartition,
};
pub use diffset::{diffset_to_signature, verify_difference_set, DifferenceSetReport};
pub use eisenstein::EisensteinInt;
pub use error::{Error, Result};
pub use generators::{generate_thm511, generate_thm59, order_of_two, Algorithm, GeneratorHit};
pub use group::{ElementIndex, GroupTable};
pub use matrix::{
    border_standard, certify_two_eigenvalue, switch, to_standard_form, Representation, SeidelMatrix, SquareMatrix,
    TwoEigenvalueCertificate,
};
pub use numeric::{factor_gram, gram_from_certificate, verify_frame, FrameReport, FrameVectors};
pub use params::{feasible_mu_values, mu_from_k, params_from_mu, FrameParams, MuContext};
pub use search::{search, SearchHit, SearchSpec};
pub use signature::{
    complement_set, verify_quasi_signature_set, verify_signature_set, Rejection, SignatureKind, SignatureVerdict,
};
pub use subset::SubsetMask;
