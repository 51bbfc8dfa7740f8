//! Descent-preserving bijections between cyclic permutations of `[n+1]` and
//! permutations of `[n]`, the derived maps on marked cycle words, and a
//! cycle-type-preserving transfer between descent classes built from
//! necklaces. Exhaustive verification suites live in [`verify`].

pub mod counting;
pub mod error;
pub mod marked;
pub mod necklace;
pub mod perm;
pub mod phi;
pub mod verify;

pub use counting::{alpha, beta, DescentDistribution, Family};
pub use error::{Error, Result};
pub use marked::{MarkKind, MarkedWord};
pub use necklace::{gr_transfer, Necklace, NecklaceMultiset, TransferPlan};
pub use perm::{descent_set, dotted_word, CycleDecomposition, Composition, DescentSet, Partition, Permutation};
pub use phi::{phi, phi_traced, psi, psi_traced, SwitchTrace};
pub use verify::{verify_suite, VerificationReport, VerifyOptions};
