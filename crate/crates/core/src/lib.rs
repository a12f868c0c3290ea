pub mod catalog;
pub mod error;
pub mod exact;
pub mod fields;
pub mod beltrami;
pub mod lft;
pub mod metric;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
