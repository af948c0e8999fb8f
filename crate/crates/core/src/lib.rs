#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::approx_constant, clippy::excessive_precision)]

pub mod cli;
pub mod dd;
pub mod error;
pub mod oracle;
pub mod pcf;
pub mod products;
pub mod quad;
pub mod specfun;

pub use error::{Error, Result};
