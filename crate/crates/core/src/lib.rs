//! Exact irreducible characters of the Lie superalgebra `gl(m|1)`.
//!
//! Characters are Laurent polynomials in `x1..xm` (even weights) and `y`
//! (the odd weight). The crate computes them three ways and checks that the
//! answers coincide:
//!
//! * closed typical/atypical formulas in Schur functions ([`characters::char_special`]),
//! * the alternating Weyl-group sum with the odd-root product
//!   ([`characters::suzhang_oracle`]),
//! * a Jacobi-Trudi type determinant in super complete functions and their
//!   duals, indexed by composite partitions
//!   ([`superschur::composite_super_schur`]).
//!
//! ```
//! use superjt::characters::char_full;
//! use superjt::weights::SuperWeight;
//!
//! let w = SuperWeight::parse("1,0;0", 2).unwrap();
//! assert_eq!(char_full(&w).unwrap().value.to_text(), "x1 + x2 + y");
//! ```

pub mod characters;
pub mod cli;
pub mod composite;
pub mod error;
pub mod partitions;
pub mod ring;
pub mod superschur;
pub mod sweep;
pub mod symfun;
pub mod weights;

mod perm;

pub use error::{Error, Result};
