pub mod algebra;
pub mod coeff;
pub mod error;
pub mod tropical;
pub mod weyl;

pub use error::{Error, Result};
