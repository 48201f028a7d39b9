//! Exact counting, enumeration, ranking and bijections for compositions whose
//! parts of size `n` carry one of `C(n+d-1, d)` colors.
//!
//! * [`bellcore`]: partial Bell polynomials, the invert transform and general
//!   `w`-color counts.
//! * [`closedform`]: binomial-sum counts for `p(d)`-color compositions and the
//!   three restricted families.
//! * [`compgen`]: lazy exhaustive enumeration, the brute-force ground truth.
//! * [`codec`]: rank/unrank of fixed-weight binary words and the bijections
//!   built on it.
//! * [`verify`]: cross-check harness pitting all of the above against each
//!   other.
//! * [`cli`]: the command-line front end behind the `polycomp` binary.
//!
//! ```
//! use polycomp::{closedform, codec, ColoredComposition, FamilyMap};
//!
//! assert_eq!(closedform::count_pd(3, 2).unwrap().to_string(), "13");
//! let alpha = ColoredComposition::parse("2^3,1^1", 2).unwrap();
//! assert_eq!(codec::to_binary(&alpha).unwrap().to_string(), "110111");
//! assert_eq!(FamilyMap::Ge.apply(&alpha).unwrap().to_string(), "5,6");
//! ```

pub mod arith;
pub mod bellcore;
pub mod cli;
pub mod closedform;
pub mod codec;
pub mod compgen;
pub mod composition;
pub mod error;
pub mod verify;

pub use arith::Count;
pub use bellcore::WeightSeq;
pub use closedform::{FamilyId, FamilyKind};
pub use codec::{BinaryWord, FamilyMap};
pub use composition::{ColoredComposition, ColoredPart, Composition};
pub use error::{Error, Result};
