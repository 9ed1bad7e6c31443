//! Cyclic-code private information retrieval laboratory.
//!
//! Finite fields, cyclic codes over GF(p) described by cyclotomic cosets,
//! Reed-Muller codes, minimum-distance tools, and star-product PIR schemes.

pub mod code;
pub mod cyclic;
pub mod distance;
pub mod error;
pub mod field;
pub mod linalg;
pub mod modp;
pub mod protocol;
pub mod reed_muller;
pub mod scheme;
pub mod search;
pub mod tables;

pub use error::{Error, Result};
