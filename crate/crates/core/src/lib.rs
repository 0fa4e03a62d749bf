//! Nonbinary quantum stabilizer codes over `F_{p^m}`.
//!
//! The pipeline runs from finite-field arithmetic through classical codes in
//! `F_{p^m}^{2n}` to the generalized Pauli group and its stabilizer codes:
//!
//! 1. [`finite_field`] builds `F_{p^m}` with its trace, Gram matrix and the
//!    coordinate map `φ`.
//! 2. [`symplectic_code`] holds F_p-linear codes, the three inner products,
//!    duals, exhaustive distance computation and a seeded code search.
//! 3. [`pauli_algebra`] implements `ξ^k E_{a,b}` symbolically.
//! 4. [`stabilizer_core`] turns a selforthogonal code into a commuting
//!    generator set, enumerates characters and classifies errors.
//! 5. [`dense_verifier`] cross-checks all of the above with explicit complex
//!    matrices on small instances.
//!
//! ```
//! use std::sync::Arc;
//! use nbstab::finite_field::FieldCtx;
//! use nbstab::stabilizer_core::StabilizerGroup;
//! use nbstab::symplectic_code::{search_selforthogonal, SearchOptions};
//!
//! let f2 = Arc::new(FieldCtx::new(2, 1, None).unwrap());
//! let code = search_selforthogonal(f2, 5, 4, 3, 1, &SearchOptions::default()).unwrap();
//! let s = StabilizerGroup::from_code(&code).unwrap();
//! let (params, _) = s.params(1 << 20);
//! assert_eq!(params.to_string(), "[[5,1,3]]_2");
//! ```

pub mod cli;
pub mod dense_verifier;
pub mod error;
pub mod finite_field;
pub mod gf_linalg;
pub mod pauli_algebra;
pub mod stabilizer_core;
pub mod symplectic_code;

pub use error::{Error, Result};
pub use finite_field::{FieldCtx, FieldElement, FieldSpec};
pub use pauli_algebra::PauliOperator;
pub use stabilizer_core::{Character, DetectClass, QuantumCodeParams, StabilizerGroup};
pub use symplectic_code::{ClassicalCode, Distance, InnerProductKind, SymplecticVector};
