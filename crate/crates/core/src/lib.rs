//! Domino Robinson–Schensted maps on the hyperoctahedral group.

pub mod cell;
pub mod cycles;
pub mod domino;
pub mod error;
pub mod group;
pub mod harness;
pub mod partition;
pub mod plactic;
pub mod rs_maps;
pub mod sign_laws;
pub mod young;

pub use cell::Cell;
pub use domino::{Domino, DominoTableau};
pub use error::{Error, Result};
pub use group::SignedPermutation;
pub use partition::Partition;
