pub mod arith;
pub mod heights;
pub mod northcott;
pub mod generators;
pub mod chow;
pub mod bertini;
pub mod constants;
pub mod verify;
pub mod cli;
pub mod error;

pub use error::{Error, Result};
