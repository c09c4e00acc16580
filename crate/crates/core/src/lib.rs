//! Exact computations around exceptional collections on projective space.
//!
//! The crate works entirely at the level of the Grothendieck group: an
//! exceptional collection is reduced to its Euler-form Gram matrix together
//! with the K-theory classes of its members, and mutations act on that data
//! by unimodular basis changes. On top of this sit
//!
//! * [`braid`]: braid words and a Garside normal form deciding the word problem,
//! * [`collections`]: numerical collections, left/right mutations and the Serre matrix,
//! * [`markov`]: the six-tuple invariants on P³, the group `G` acting on them and
//!   bounded orbit / stabilizer exploration,
//! * [`regions`]: strict linear phase inequalities and exact feasibility,
//! * [`pn`]: line-bundle cohomology and Beilinson collections on Pⁿ,
//! * [`verify`]: invariant suites shared by the CLI.

pub mod braid;
pub mod collections;
mod error;
pub mod markov;
pub mod matrix;
pub mod pn;
pub mod regions;
pub mod verify;

pub use error::{Error, Result};
