pub mod coeffs;
pub mod error;
pub mod expr;
pub mod gb;
pub mod modops;
pub mod oracle;
pub mod orecore;
pub mod verify;
pub mod vmpum;

pub use error::{Error, Result};
