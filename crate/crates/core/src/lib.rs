pub mod algebra;
pub mod dualcolor;
pub mod encodings;
pub mod error;
pub mod graphs;
pub mod nulla;
pub mod oracle;
pub mod stablecert;

pub use error::{Error, Result};
