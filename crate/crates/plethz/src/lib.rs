//! Exact plethysm coefficients `a^μ_{λ,(m)}`, character deflations and
//! Sylow branching coefficients `Z^λ` of symmetric groups at `p = 2`.

pub mod charalg;
pub mod error;
pub mod lr;
pub mod partition;
pub mod plethysm;
pub mod sylow;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
