//! Exact coefficients from the representation theory of symmetric and
//! hyperoctahedral groups, and bounds on when shifted Kronecker sequences
//! become constant.

mod assignment;
pub mod characters;
pub mod error;
pub mod gitbounds;
pub mod hyperoctahedral;
pub mod kronecker;
pub mod lr;
pub mod partitions;
pub mod plethysm;
pub mod stabilization;
pub mod table;

pub use error::{Error, Result};
pub use partitions::{DoublePartition, Partition};
