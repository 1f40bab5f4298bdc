//! Exact computations in the Artin braid groups, aimed at certifying lower
//! bounds on the number of generators of centralizers.
//!
//! The pieces, bottom up:
//! - [`word`]: braid words, permutations, exponent sums.
//! - [`word_problem`]: triviality and equality, decided independently by the
//!   lamination coordinate action ([`dynnikov`]) and the Garside normal form
//!   ([`garside`]); [`burau`] is a faithful oracle on three strands.
//! - [`pure`] and [`rank`]: linking numbers of pure braids and exact integer
//!   rank.
//! - [`blocks`]: block structures, cabling, block twists and linkings, and
//!   the block profile homomorphism.
//! - [`examples`] and [`certify`]: the counterexample braids and their
//!   generator lower-bound certificates.

pub mod blocks;
pub mod burau;
pub mod certify;
pub mod dynnikov;
pub mod error;
pub mod examples;
pub mod exec;
pub mod garside;
pub mod perm;
pub mod pure;
pub mod rank;
pub mod word;
pub mod word_problem;

pub use blocks::{BlockProfile, BlockStructure, TubeToken, TubeWord};
pub use certify::{Candidate, CertificateReport};
pub use error::{BraidError, Result};
pub use examples::{ExampleInstance, ExampleSpec, Variant};
pub use exec::Execution;
pub use garside::GarsideNormalForm;
pub use perm::Permutation;
pub use pure::LinkingMatrix;
pub use word::BraidWord;
pub use word_problem::Engine;
