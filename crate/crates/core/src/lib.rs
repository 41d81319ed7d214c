//! Permutation patterns and their avoidance classes.
//!
//! The crate covers seven pattern formalisms (classical, bivincular, mesh,
//! marked mesh, barred, Bruhat-restricted and interval), a backtracking
//! matcher for each, translations of the others into mesh patterns, the
//! Grassmannian corner machinery and classifiers for a number of
//! permutation classes from Schubert calculus and enumerative combinatorics.
//!
//! Permutations are written in one-line notation and are 1-based throughout:
//!
//! ```
//! use permpat::{matcher, Pattern, Permutation};
//!
//! let pat: Pattern = "cl:123".parse().unwrap();
//! let perm: Permutation = "32415".parse().unwrap();
//! let found: Vec<_> = matcher::occurrences(&pat, &perm).iter().map(|o| o.positions().to_vec()).collect();
//! assert_eq!(found, vec![vec![1, 3, 5], vec![2, 3, 5]]);
//! ```

pub mod enumerate;
pub mod families;
pub mod grassmann;
pub mod matcher;
pub mod notation;
pub mod pattern;
pub mod perm;
pub mod report;
pub mod schubert;
pub mod translate;
pub mod verify;

pub use matcher::Occurrence;
pub use notation::ParseError;
pub use pattern::{
    BarredPattern, BivincularPattern, BruhatRestrictedPattern, Cell, Comparison, IntervalPattern, MarkedMeshPattern,
    MarkedRegion, MeshPattern, Pattern, PatternError, PatternKind,
};
pub use perm::{PermError, Permutation, Symmetry, Transposition};

/// Any error the crate can produce.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Translate(#[from] translate::TranslateError),
    #[error(transparent)]
    Grassmann(#[from] grassmann::GrassmannError),
}
