pub mod cli;
pub mod error;
pub mod geom;
pub mod kernels;
pub mod quad;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
