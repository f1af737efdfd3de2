pub mod bernoulli;
pub mod cones;
pub mod error;
pub mod exact;
pub mod gamma;
pub mod numfield;
pub mod scalar;
pub mod shintani;
pub mod verify;

pub use error::{Error, Result};
