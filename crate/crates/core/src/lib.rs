pub mod algnum;
pub mod error;

pub use algnum::AlgReal;
pub use error::{Error, Result};
pub mod classify;
pub mod double;
pub mod embed;
pub mod fusion;
pub mod graph;
