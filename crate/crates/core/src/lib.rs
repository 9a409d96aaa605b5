//! Symplectic subspace algebra for quantum error-correcting codes over prime
//! fields.
//!
//! A code is an `F_q`-linear subspace `C ≤ V^n` of the symplectic space
//! `V^n`, `V = span{e, f}`. The crate provides:
//!
//! - exact linear algebra over `F_q` ([`linalg`]),
//! - the symplectic form, complements, radicals and orthogonal splittings
//!   ([`symplectic`]),
//! - code parameters and the stabilizer / subsystem constructions ([`codes`]),
//! - anticodes, puncturing, shortening and the cleaning duality ([`anticodes`]),
//! - anticode invariants, generalized weights and bound checks ([`invariants`]),
//! - weight distributions, binomial moments and enumerators ([`enumerators`]),
//! - definitional brute-force references for all of the above ([`oracle`]),
//! - seeded verification suites that tie everything together ([`verify`]).
//!
//! ```
//! use qsymp::{codes::fixtures, Budget};
//!
//! let shor = fixtures::shor();
//! let p = shor.params(Budget::default()).unwrap();
//! assert_eq!((p.n, p.k, p.d), (9, 1, Some(3)));
//! ```

pub mod anticodes;
pub mod budget;
pub mod codes;
pub mod enumerators;
pub mod error;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod symplectic;
pub mod verify;

pub use anticodes::{Anticode, Support};
pub use budget::{Budget, DEFAULT_BUDGET};
pub use codes::{Code, Params, SubsystemCode};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use linalg::Matrix;
pub use report::{Check, Report};
pub use symplectic::{SplitDecomposition, Subspace, SympVector};
