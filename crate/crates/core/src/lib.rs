//! Frequency-hopping sequence sets with exact Hamming-correlation analysis.
//!
//! The crate builds the sequence-set families in [`constructions`], computes
//! every periodic Hamming correlation of a set ([`correlation`]), classifies
//! its symbol distribution ([`distribution`]) and checks the attained maximum
//! and average correlations against the classical lower bounds ([`bounds`]).
//! All statistics are integers or exact rationals.
//!
//! ```
//! use fhsets::{bounds, constructions, correlation};
//!
//! let set = constructions::cyclotomic_a(13, 4).unwrap();
//! let report = correlation::full_report(&set);
//! assert_eq!((report.h_a().unwrap(), report.h_c().unwrap()), (3, 5));
//! assert_eq!(report.a_a().unwrap().to_string(), "5/2");
//! assert_eq!(bounds::mhc_verdict(&report).verdict, bounds::Verdict::NearOptimal);
//! assert_eq!(bounds::ahc_verdict(&report).verdict, bounds::Verdict::Optimal);
//! ```

pub mod algebra;
pub mod bounds;
pub mod constructions;
pub mod correlation;
pub mod cyclotomy;
pub mod distribution;
pub mod error;
pub mod rational;
pub mod report;
pub mod sequence;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use rational::Rational;
pub use sequence::{Fhs, FhsSet, Provenance};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/correlation.md")]
    mod correlation {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/interleaving.md")]
    mod interleaving {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
